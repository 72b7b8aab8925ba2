#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supertrop/determinant.hpp"
#include "supertrop/random.hpp"

namespace supertrop {

/// Entrywise relations an identity can assert between two matrix expressions.
enum class Relation { surpasses, nu_match, equal, nu_geq };

const char* relation_name(Relation r) noexcept;

/// Sampling guard applied to every drawn variable.
enum class Guard { none, quasi_invertible, tangible_entries };

/// Expression tree over matrix variables: products, sums, natural-coefficient
/// multiples, identity, adjoints, determinant-times-identity, powers, and
/// characteristic-polynomial evaluation hooks.
class Expr {
 public:
  enum class Op {
    var,
    identity,
    add,
    mul,
    nat_mul,
    adj,
    tadj,
    det_times_i,
    pow,
    fhat,   // tangible characteristic polynomial of the operand, evaluated at it
    ftilde  // degree-shifted characteristic polynomial, evaluated at the operand
  };

  using Ptr = std::shared_ptr<const Expr>;

  static Ptr var(std::size_t index);
  static Ptr id();
  static Ptr add(Ptr a, Ptr b);
  static Ptr mul(Ptr a, Ptr b);
  static Ptr nat_mul(unsigned long k, Ptr a);
  static Ptr adj(Ptr a);
  static Ptr tadj(Ptr a);
  static Ptr det_i(Ptr a);
  static Ptr pow(Ptr a, unsigned long k);
  static Ptr fhat(Ptr a);
  static Ptr ftilde(Ptr a);

  Op op() const { return op_; }
  std::size_t var_index() const { return index_; }
  unsigned long k() const { return k_; }
  const Ptr& lhs() const { return a_; }
  const Ptr& rhs() const { return b_; }

  /// Number of variables the expression closes over (max index + 1).
  std::size_t var_count() const;

 private:
  Expr() = default;

  Op op_ = Op::identity;
  std::size_t index_ = 0;
  unsigned long k_ = 0;
  Ptr a_, b_;
};

/// Evaluates over n x n variable bindings. Throws MalformedExpression when a
/// variable index is out of range.
Matrix eval_expr(const Expr& e, const std::vector<Matrix>& vars, std::size_t n,
                 std::size_t cap = kDefaultSizeCap);

/// Prefix grammar: (mul E E), (add E E), (adj E), (tadj E), (det E),
/// (pow E k), (id), variables A..Z. Throws MalformedExpression.
Expr::Ptr parse_expr(std::string_view text);

struct Failure {
  std::size_t trial = 0;
  std::vector<std::string> inputs;  // shrunk counterexample matrices, text format
  std::string detail;
};

struct IdentityReport {
  std::string name;
  Relation relation = Relation::equal;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string admissibility;  // the identity author's declared obligation
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }
};

/// Randomized check of lhs <relation> rhs over matrices drawn per the guard.
/// Deterministic for a given (n, trials, seed, guard); counterexamples are
/// greedily shrunk by zeroing entries while the failure (and the guard)
/// persists. Throws GuardUnsatisfiable when rejection sampling exceeds its
/// retry cap.
IdentityReport check_identity(const Expr::Ptr& lhs, const Expr::Ptr& rhs, Relation relation,
                              std::size_t n, std::size_t trials, std::uint64_t seed, Guard guard,
                              std::size_t cap = kDefaultSizeCap,
                              std::string name = "custom");

/// Every matrix identity shipped with the library, run at size n. These are
/// theorems of the algebra: any failure is an implementation defect.
std::vector<IdentityReport> builtin_suite(std::size_t n, std::size_t trials, std::uint64_t seed,
                                          std::size_t cap = kDefaultSizeCap);

/// Re-evaluates a named built-in or custom-parsed relation on explicit
/// matrices; used to confirm that serialized counterexamples still fail.
std::optional<std::string> eval_relation(const Expr::Ptr& lhs, const Expr::Ptr& rhs,
                                         Relation relation, const std::vector<Matrix>& vars,
                                         std::size_t n, std::size_t cap = kDefaultSizeCap);

}  // namespace supertrop

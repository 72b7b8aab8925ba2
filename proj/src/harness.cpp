#include "supertrop/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

#include "supertrop/io.hpp"
#include "supertrop/spectral.hpp"

namespace supertrop {

const char* relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::surpasses: return "surpass";
    case Relation::nu_match: return "numatch";
    case Relation::equal: return "equal";
    case Relation::nu_geq: return "nugeq";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

namespace {

Expr::Ptr make_node(Expr&& e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

Expr::Ptr Expr::var(std::size_t index) {
  Expr e;
  e.op_ = Op::var;
  e.index_ = index;
  return make_node(std::move(e));
}

Expr::Ptr Expr::id() {
  Expr e;
  e.op_ = Op::identity;
  return make_node(std::move(e));
}

namespace {

Expr::Ptr require_operand(Expr::Ptr p) {
  if (!p) throw domain_error(errc::malformed_expression, "null operand");
  return p;
}

}  // namespace

Expr::Ptr Expr::add(Ptr a, Ptr b) {
  Expr e;
  e.op_ = Op::add;
  e.a_ = require_operand(std::move(a));
  e.b_ = require_operand(std::move(b));
  return make_node(std::move(e));
}

Expr::Ptr Expr::mul(Ptr a, Ptr b) {
  Expr e;
  e.op_ = Op::mul;
  e.a_ = require_operand(std::move(a));
  e.b_ = require_operand(std::move(b));
  return make_node(std::move(e));
}

Expr::Ptr Expr::nat_mul(unsigned long k, Ptr a) {
  Expr e;
  e.op_ = Op::nat_mul;
  e.k_ = k;
  e.a_ = require_operand(std::move(a));
  return make_node(std::move(e));
}

Expr::Ptr Expr::adj(Ptr a) {
  Expr e;
  e.op_ = Op::adj;
  e.a_ = require_operand(std::move(a));
  return make_node(std::move(e));
}

Expr::Ptr Expr::tadj(Ptr a) {
  Expr e;
  e.op_ = Op::tadj;
  e.a_ = require_operand(std::move(a));
  return make_node(std::move(e));
}

Expr::Ptr Expr::det_i(Ptr a) {
  Expr e;
  e.op_ = Op::det_times_i;
  e.a_ = require_operand(std::move(a));
  return make_node(std::move(e));
}

Expr::Ptr Expr::pow(Ptr a, unsigned long k) {
  Expr e;
  e.op_ = Op::pow;
  e.k_ = k;
  e.a_ = require_operand(std::move(a));
  return make_node(std::move(e));
}

Expr::Ptr Expr::fhat(Ptr a) {
  Expr e;
  e.op_ = Op::fhat;
  e.a_ = require_operand(std::move(a));
  return make_node(std::move(e));
}

Expr::Ptr Expr::ftilde(Ptr a) {
  Expr e;
  e.op_ = Op::ftilde;
  e.a_ = require_operand(std::move(a));
  return make_node(std::move(e));
}

std::size_t Expr::var_count() const {
  std::size_t count = op_ == Op::var ? index_ + 1 : 0;
  if (a_) count = std::max(count, a_->var_count());
  if (b_) count = std::max(count, b_->var_count());
  return count;
}

Matrix eval_expr(const Expr& e, const std::vector<Matrix>& vars, std::size_t n,
                 std::size_t cap) {
  switch (e.op()) {
    case Expr::Op::var:
      if (e.var_index() >= vars.size())
        throw domain_error(errc::malformed_expression,
                           "variable index " + std::to_string(e.var_index()) + " unbound");
      return vars[e.var_index()];
    case Expr::Op::identity:
      return Matrix::identity(n);
    case Expr::Op::add:
      return eval_expr(*e.lhs(), vars, n, cap) + eval_expr(*e.rhs(), vars, n, cap);
    case Expr::Op::mul:
      return eval_expr(*e.lhs(), vars, n, cap) * eval_expr(*e.rhs(), vars, n, cap);
    case Expr::Op::nat_mul: {
      const Matrix a = eval_expr(*e.lhs(), vars, n, cap);
      Matrix acc(a.rows(), a.cols());
      for (unsigned long i = 0; i < e.k(); ++i) acc = acc + a;
      return acc;
    }
    case Expr::Op::adj:
      return adjoint(eval_expr(*e.lhs(), vars, n, cap), cap);
    case Expr::Op::tadj:
      return tangible_adjoint(eval_expr(*e.lhs(), vars, n, cap), cap);
    case Expr::Op::det_times_i: {
      const Matrix a = eval_expr(*e.lhs(), vars, n, cap);
      return determinant(a, cap).value * Matrix::identity(a.rows());
    }
    case Expr::Op::pow:
      return mat_pow(eval_expr(*e.lhs(), vars, n, cap), e.k());
    case Expr::Op::fhat: {
      const Matrix a = eval_expr(*e.lhs(), vars, n, cap);
      return poly_eval_matrix(tangible_coefficients(char_poly(a, cap)), a);
    }
    case Expr::Op::ftilde: {
      const Matrix a = eval_expr(*e.lhs(), vars, n, cap);
      return poly_eval_matrix(shifted_down(char_poly(a, cap)), a);
    }
  }
  throw domain_error(errc::malformed_expression, "unknown operator");
}

// ---------------------------------------------------------------------------
// Prefix expression grammar
// ---------------------------------------------------------------------------

namespace {

struct ExprParser {
  std::vector<std::string> tokens;
  std::size_t pos = 0;

  explicit ExprParser(std::string_view text) {
    std::string current;
    auto flush = [&] {
      if (!current.empty()) tokens.push_back(std::exchange(current, {}));
    };
    for (char c : text) {
      if (c == '(' || c == ')') {
        flush();
        tokens.push_back(std::string(1, c));
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        current += c;
      }
    }
    flush();
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw domain_error(errc::malformed_expression, why);
  }

  const std::string& peek() const {
    if (pos >= tokens.size()) fail("unexpected end of expression");
    return tokens[pos];
  }

  std::string take() {
    std::string t = peek();
    ++pos;
    return t;
  }

  void expect(const std::string& t) {
    if (take() != t) fail("expected '" + t + "'");
  }

  Expr::Ptr parse() {
    Expr::Ptr e = node();
    if (pos != tokens.size()) fail("trailing tokens after expression");
    return e;
  }

  Expr::Ptr node() {
    std::string t = take();
    if (t != "(") {
      if (t.size() == 1 && t[0] >= 'A' && t[0] <= 'Z')
        return Expr::var(static_cast<std::size_t>(t[0] - 'A'));
      fail("expected '(' or a variable A..Z, got '" + t + "'");
    }
    const std::string op = take();
    Expr::Ptr result;
    if (op == "mul") {
      auto a = node();
      auto b = node();
      result = Expr::mul(a, b);
    } else if (op == "add") {
      auto a = node();
      auto b = node();
      result = Expr::add(a, b);
    } else if (op == "adj") {
      result = Expr::adj(node());
    } else if (op == "tadj") {
      result = Expr::tadj(node());
    } else if (op == "det") {
      result = Expr::det_i(node());
    } else if (op == "pow") {
      auto a = node();
      const std::string k = take();
      if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        fail("power exponent must be a natural number, got '" + k + "'");
      result = Expr::pow(a, std::stoul(k));
    } else if (op == "id") {
      result = Expr::id();
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect(")");
    return result;
  }
};

}  // namespace

Expr::Ptr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Randomized identity driver
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kRetryCap = 10000;

bool scalar_relation_holds(Relation r, const Scalar& l, const Scalar& g) {
  switch (r) {
    case Relation::surpasses: return ghost_surpasses(l, g);
    case Relation::nu_match: return nu_matched(l, g);
    case Relation::equal: return l == g;
    case Relation::nu_geq: return nu_geq(l, g);
  }
  return false;
}

std::optional<std::string> relation_detail(Relation r, const Matrix& lhs, const Matrix& rhs,
                                           const std::string& what) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return what + " [" + relation_name(r) + "] shape mismatch";
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      const Scalar &l = lhs.at(i, j), &g = rhs.at(i, j);
      if (!scalar_relation_holds(r, l, g))
        return what + " [" + relation_name(r) + "] fails at (" + std::to_string(i) + "," +
               std::to_string(j) + "): lhs=" + l.token() + " rhs=" + g.token();
    }
  return std::nullopt;
}

std::optional<std::string> scalar_relation_detail(Relation r, const Scalar& lhs,
                                                  const Scalar& rhs, const std::string& what) {
  if (scalar_relation_holds(r, lhs, rhs)) return std::nullopt;
  return what + " [" + relation_name(r) + "] fails: lhs=" + lhs.token() + " rhs=" + rhs.token();
}

struct VarSpec {
  RandomProfile profile;
  std::function<bool(const Matrix&)> accept;  // null = accept all
};

struct IdentityCase {
  std::string name;
  Relation relation = Relation::equal;
  std::string admissibility;
  std::vector<VarSpec> vars;
  std::function<std::optional<std::string>(const std::vector<Matrix>&)> check;
};

std::vector<Matrix> draw_inputs(const IdentityCase& c, std::size_t n, Rng& rng,
                                bool& guard_failed) {
  std::vector<Matrix> out;
  out.reserve(c.vars.size());
  for (const auto& spec : c.vars) {
    Matrix m(n, n);
    std::size_t attempts = 0;
    while (true) {
      if (attempts++ >= kRetryCap) {
        guard_failed = true;
        return {};
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, spec.profile);
      if (!spec.accept || spec.accept(m)) break;
    }
    out.push_back(m);
  }
  return out;
}

bool guards_hold(const IdentityCase& c, const std::vector<Matrix>& inputs) {
  for (std::size_t v = 0; v < c.vars.size(); ++v)
    if (c.vars[v].accept && !c.vars[v].accept(inputs[v])) return false;
  return true;
}

// Greedy entrywise zeroing while the failure (and every guard) persists.
void shrink_inputs(const IdentityCase& c, std::vector<Matrix>& inputs) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (auto& m : inputs)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (m.at(i, j).is_zero()) continue;
          const Scalar saved = m.at(i, j);
          m.at(i, j) = Scalar::zero();
          bool keep = false;
          if (guards_hold(c, inputs)) {
            try {
              keep = c.check(inputs).has_value();
            } catch (const std::exception&) {
              keep = false;
            }
          }
          if (keep)
            improved = true;
          else
            m.at(i, j) = saved;
        }
  }
}

IdentityReport run_case(const IdentityCase& c, std::size_t n, std::size_t trials,
                        std::uint64_t seed) {
  IdentityReport report;
  report.name = c.name;
  report.relation = c.relation;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.admissibility = c.admissibility;

  std::vector<std::unique_ptr<Failure>> slots(trials);
  std::atomic<bool> guard_failed{false};

#pragma omp parallel for schedule(dynamic)
  for (std::size_t trial = 0; trial < trials; ++trial) {
    if (guard_failed.load(std::memory_order_relaxed)) continue;
    Rng rng = Rng::substream(seed, trial);
    bool gf = false;
    std::vector<Matrix> inputs = draw_inputs(c, n, rng, gf);
    if (gf) {
      guard_failed.store(true, std::memory_order_relaxed);
      continue;
    }
    std::optional<std::string> bad;
    try {
      bad = c.check(inputs);
    } catch (const std::exception& e) {
      bad = std::string("evaluation error: ") + e.what();
    }
    if (!bad) continue;
    shrink_inputs(c, inputs);
    std::string detail = *bad;
    try {
      if (auto after = c.check(inputs)) detail = *after;
    } catch (const std::exception&) {
    }
    auto failure = std::make_unique<Failure>();
    failure->trial = trial;
    for (const Matrix& m : inputs) failure->inputs.push_back(format_matrix(m));
    failure->detail = std::move(detail);
    slots[trial] = std::move(failure);
  }

  if (guard_failed.load())
    throw domain_error(errc::guard_unsatisfiable,
                       "rejection sampling exceeded " + std::to_string(kRetryCap) +
                           " retries for identity '" + c.name + "'");
  for (auto& slot : slots)
    if (slot) report.failures.push_back(std::move(*slot));
  return report;
}

VarSpec guarded_var(Guard guard, std::size_t cap) {
  switch (guard) {
    case Guard::none:
      return {RandomProfile{}, nullptr};
    case Guard::quasi_invertible:
      return {RandomProfile{}, [cap](const Matrix& m) {
                return determinant(m, cap).value.is_tangible();
              }};
    case Guard::tangible_entries:
      return {RandomProfile::tangible_only(), nullptr};
  }
  return {RandomProfile{}, nullptr};
}

}  // namespace

IdentityReport check_identity(const Expr::Ptr& lhs, const Expr::Ptr& rhs, Relation relation,
                              std::size_t n, std::size_t trials, std::uint64_t seed, Guard guard,
                              std::size_t cap, std::string name) {
  if (!lhs || !rhs) throw domain_error(errc::malformed_expression, "null expression");
  const std::size_t nvars = std::max(lhs->var_count(), rhs->var_count());

  IdentityCase c;
  c.name = std::move(name);
  c.relation = relation;
  c.admissibility = "declared by the identity author (distinct monomials on both sides)";
  c.vars.assign(nvars, guarded_var(guard, cap));
  c.check = [lhs, rhs, relation, n, cap](const std::vector<Matrix>& vars) {
    const Matrix l = eval_expr(*lhs, vars, n, cap);
    const Matrix r = eval_expr(*rhs, vars, n, cap);
    return relation_detail(relation, l, r, "expression pair");
  };
  return run_case(c, n, trials, seed);
}

std::optional<std::string> eval_relation(const Expr::Ptr& lhs, const Expr::Ptr& rhs,
                                         Relation relation, const std::vector<Matrix>& vars,
                                         std::size_t n, std::size_t cap) {
  if (!lhs || !rhs) throw domain_error(errc::malformed_expression, "null expression");
  const Matrix l = eval_expr(*lhs, vars, n, cap);
  const Matrix r = eval_expr(*rhs, vars, n, cap);
  return relation_detail(relation, l, r, "expression pair");
}

// ---------------------------------------------------------------------------
// Built-in identity suite
// ---------------------------------------------------------------------------

namespace {

Scalar scalar_power(const Scalar& s, std::size_t k) {
  return k == 0 ? Scalar::unit() : s.pow(static_cast<long>(k));
}

std::vector<IdentityCase> builtin_cases(std::size_t cap) {
  const std::string admissible =
      "declared by the identity author (distinct monomials on both sides)";
  const VarSpec any{RandomProfile{}, nullptr};
  const VarSpec ghosty{RandomProfile::ghost_only(), nullptr};
  const VarSpec qinv = guarded_var(Guard::quasi_invertible, cap);
  const VarSpec qinv_twice{RandomProfile{}, [cap](const Matrix& m) {
                             const Scalar d = determinant(m, cap).value;
                             if (!d.is_tangible()) return false;
                             return determinant(quasi_inverse(m, cap), cap).value.is_tangible();
                           }};
  const VarSpec qinv_variants{RandomProfile{}, [cap](const Matrix& m) {
                                if (!determinant(m, cap).value.is_tangible()) return false;
                                const Matrix ht = tangible_quasi_inverse(m, cap);
                                const Matrix big = big_quasi_inverse(m, cap);
                                return determinant(ht, cap).value.is_tangible() &&
                                       determinant(big, cap).value.is_tangible();
                              }};

  std::vector<IdentityCase> cases;

  cases.push_back({"det-product-surpasses", Relation::surpasses, admissible, {any, any},
                   [cap](const std::vector<Matrix>& v) {
                     const Scalar lhs = determinant(v[0] * v[1], cap).value;
                     const Scalar rhs = determinant(v[0], cap).value * determinant(v[1], cap).value;
                     return scalar_relation_detail(Relation::surpasses, lhs, rhs, "|AB| vs |A||B|");
                   }});

  cases.push_back({"adj-product-surpasses", Relation::surpasses, admissible, {any, any},
                   [cap](const std::vector<Matrix>& v) {
                     const Matrix lhs = adjoint(v[0] * v[1], cap);
                     const Matrix rhs = adjoint(v[1], cap) * adjoint(v[0], cap);
                     return relation_detail(Relation::surpasses, lhs, rhs,
                                            "adj(AB) vs adj(B)adj(A)");
                   }});

  cases.push_back({"tangible-charpoly-annihilates", Relation::surpasses, admissible, {any},
                   [cap](const std::vector<Matrix>& v) {
                     const Matrix& a = v[0];
                     const Matrix lhs =
                         poly_eval_matrix(tangible_coefficients(char_poly(a, cap)), a);
                     const Matrix zero(a.rows(), a.cols());
                     return relation_detail(Relation::surpasses, lhs, zero, "fhat_A(A) vs 0");
                   }});

  cases.push_back({"shifted-charpoly-adjoint", Relation::surpasses, admissible, {any},
                   [cap](const std::vector<Matrix>& v) {
                     const Matrix& a = v[0];
                     const Matrix lhs = poly_eval_matrix(shifted_down(char_poly(a, cap)), a);
                     return relation_detail(Relation::surpasses, lhs, adjoint(a, cap),
                                            "ftilde_A(A) vs adj(A)");
                   }});

  cases.push_back(
      {"quasi-identity-products", Relation::equal, admissible, {qinv},
       [cap](const std::vector<Matrix>& v) -> std::optional<std::string> {
         const Matrix& a = v[0];
         const Matrix qa = quasi_inverse(a, cap);
         const Matrix qat = tangible_quasi_inverse(a, cap);
         const Matrix i_right = a * qa;
         const Matrix i_left = qa * a;
         if (!(a * qat == i_right)) return std::string("A tqinv(A) differs from I_A");
         if (!(qat * a == i_left)) return std::string("tqinv(A) A differs from I'_A");
         if (!is_quasi_identity(i_right, cap)) return std::string("I_A is not a quasi-identity");
         if (!is_quasi_identity(i_left, cap)) return std::string("I'_A is not a quasi-identity");
         if (!ghost_surpasses(i_right, Matrix::identity(a.rows())))
           return std::string("I_A does not ghost-surpass I");
         return std::nullopt;
       }});

  cases.push_back(
      {"quasi-inverse-variants", Relation::nu_match, admissible, {qinv},
       [cap](const std::vector<Matrix>& v) -> std::optional<std::string> {
         const Matrix& a = v[0];
         const Matrix qa = quasi_inverse(a, cap);
         const Matrix qat = tangible_quasi_inverse(a, cap);
         const Matrix qbig = big_quasi_inverse(a, cap);
         if (auto d = relation_detail(Relation::nu_match, qbig, qa, "big vs plain")) return d;
         if (auto d = relation_detail(Relation::nu_match, qa, qat, "plain vs tangible")) return d;
         if (auto d = relation_detail(Relation::surpasses, qbig, qa, "big |= plain")) return d;
         if (auto d = relation_detail(Relation::surpasses, qa, qat, "plain |= tangible")) return d;
         return std::nullopt;
       }});

  cases.push_back({"triple-adjoint", Relation::nu_match, admissible, {any},
                   [cap](const std::vector<Matrix>& v) {
                     const Matrix& a = v[0];
                     const Matrix adj_a = adjoint(a, cap);
                     const Matrix lhs = adj_a * adjoint(adj_a, cap) * adj_a;
                     const Scalar det_pow =
                         scalar_power(determinant(a, cap).value, a.rows() ? a.rows() - 1 : 0);
                     return relation_detail(Relation::nu_match, lhs, det_pow * adj_a,
                                            "adj sandwich vs |A|^(n-1) adj(A)");
                   }});

  cases.push_back({"adjoint-sandwich-bound", Relation::nu_geq, admissible, {any},
                   [cap](const std::vector<Matrix>& v) {
                     const Matrix& a = v[0];
                     const Matrix adj_a = adjoint(a, cap);
                     const Matrix lhs = determinant(a, cap).value * adj_a;
                     return relation_detail(Relation::nu_geq, lhs, adj_a * a * adj_a,
                                            "|A| adj(A) vs adj(A) A adj(A)");
                   }});

  cases.push_back(
      {"maximal-quasi-inverse", Relation::surpasses, admissible, {qinv},
       [cap](const std::vector<Matrix>& v) -> std::optional<std::string> {
         const Matrix& a = v[0];
         const Matrix qa = quasi_inverse(a, cap);
         const Matrix qbig = big_quasi_inverse(a, cap);
         const Matrix i_right = a * qa;
         if (!(a * qbig == i_right)) return std::string("A big-qinv(A) is not I_A");
         if (auto d = relation_detail(Relation::surpasses, qbig, qa, "big |= plain witness"))
           return d;
         if (auto d = relation_detail(Relation::surpasses, qbig, qbig, "big |= big witness"))
           return d;
         return std::nullopt;
       }});

  cases.push_back({"triple-quasi-inverse", Relation::nu_match, admissible, {qinv_twice},
                   [cap](const std::vector<Matrix>& v) {
                     const Matrix qa = quasi_inverse(v[0], cap);
                     const Matrix qaa = quasi_inverse(qa, cap);
                     return relation_detail(Relation::nu_match, qa * qaa * qa, qa,
                                            "qinv sandwich vs qinv");
                   }});

  cases.push_back(
      {"switch", Relation::equal, admissible, {qinv_variants},
       [cap](const std::vector<Matrix>& v) -> std::optional<std::string> {
         const Matrix& a = v[0];
         const Matrix i_right = a * quasi_inverse(a, cap);
         const Matrix qat = tangible_quasi_inverse(a, cap);
         const Matrix qbig = big_quasi_inverse(a, cap);
         if (!(quasi_inverse(qat, cap) * qat == i_right))
           return std::string("left quasi-identity of tangible qinv differs from I_A");
         if (!(quasi_inverse(qbig, cap) * qbig == i_right))
           return std::string("left quasi-identity of big qinv differs from I_A");
         return std::nullopt;
       }});

  cases.push_back(
      {"bysym", Relation::equal, admissible, {qinv_variants},
       [cap](const std::vector<Matrix>& v) -> std::optional<std::string> {
         const Matrix& a = v[0];
         const Matrix i_left = quasi_inverse(a, cap) * a;
         const Matrix qat = tangible_quasi_inverse(a, cap);
         const Matrix qbig = big_quasi_inverse(a, cap);
         if (!(qat * quasi_inverse(qat, cap) == i_left))
           return std::string("right quasi-identity of tangible qinv differs from I'_A");
         if (!(qbig * quasi_inverse(qbig, cap) == i_left))
           return std::string("right quasi-identity of big qinv differs from I'_A");
         return std::nullopt;
       }});

  cases.push_back({"double-quasi-inverse-surpasses", Relation::surpasses, admissible,
                   {qinv_twice},
                   [cap](const std::vector<Matrix>& v) {
                     const Matrix qq = quasi_inverse(quasi_inverse(v[0], cap), cap);
                     return relation_detail(Relation::surpasses, qq, v[0], "qinv(qinv(A)) vs A");
                   }});

  cases.push_back(
      {"ghost-augmented-product", Relation::surpasses, admissible, {any, any, ghosty},
       [](const std::vector<Matrix>& v) -> std::optional<std::string> {
         const Matrix c = v[0] + v[2];
         if (!ghost_surpasses(c, v[0])) return std::string("sampled C fails C |= A");
         return relation_detail(Relation::surpasses, v[1] * c, v[1] * v[0], "BC vs BA");
       }});

  return cases;
}

}  // namespace

std::vector<IdentityReport> builtin_suite(std::size_t n, std::size_t trials, std::uint64_t seed,
                                          std::size_t cap) {
  std::vector<IdentityReport> reports;
  for (const IdentityCase& c : builtin_cases(cap)) reports.push_back(run_case(c, n, trials, seed));
  return reports;
}

}  // namespace supertrop

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "supertrop/errors.hpp"
#include "supertrop/rational.hpp"

namespace supertrop {

/// A scalar of the supertropical semifield in logarithmic notation.
///
/// Every scalar is either the additive identity Zero (conventionally -inf),
/// a tangible value, or a ghost value. Tangible scalars behave like max-plus
/// numbers; a ghost records that a maximum was attained ambiguously. The
/// ghost map nu flips a tangible to the ghost of the same value; the tangible
/// retract flips it back (nu is bijective here, so the retract is canonical
/// and multiplicative).
///
/// Values are exact rationals; addition is max by value with ties going
/// ghost, multiplication adds values, and the ghost layer absorbs.
class Scalar {
 public:
  enum class Kind : std::uint8_t { zero, tangible, ghost };

  /// Default-constructs Zero.
  Scalar() : kind_(Kind::zero) {}

  static Scalar zero() { return Scalar(); }
  static Scalar tangible(Rational v) { return Scalar(Kind::tangible, std::move(v)); }
  static Scalar ghost(Rational v) { return Scalar(Kind::ghost, std::move(v)); }
  /// The multiplicative unit: tangible 0 in log notation.
  static Scalar unit() { return tangible(Rational(0)); }

  bool is_zero() const { return kind_ == Kind::zero; }
  bool is_tangible() const { return kind_ == Kind::tangible; }
  bool is_ghost() const { return kind_ == Kind::ghost; }
  /// Membership in the ghost ideal G0 = {Zero} + ghosts.
  bool ghost_or_zero() const { return kind_ != Kind::tangible; }
  /// Membership in T0 = {Zero} + tangibles.
  bool tangible_or_zero() const { return kind_ != Kind::ghost; }

  Kind kind() const { return kind_; }

  /// The log-scale value. Precondition: not Zero.
  const Rational& value() const { return value_; }

  /// Supertropical sum: max by nu-value, equal nu-values collapse to ghost.
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  /// Supertropical product: values add, ghosts absorb, Zero annihilates.
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Ghost map nu(a) = a + a.
  Scalar nu() const { return is_zero() ? Scalar() : ghost(value_); }
  /// Tangible retract: Zero stays Zero, anything else becomes tangible.
  Scalar retract() const { return is_zero() ? Scalar() : tangible(value_); }
  /// Multiplicative inverse (log negation); layer preserved.
  /// Throws DivisionByZero on Zero.
  Scalar inverse() const;
  /// k-th power (value scaled by k); k may be negative for nonzero scalars.
  /// Throws DivisionByZero for Zero with k <= 0; Zero^k = Zero for k > 0.
  Scalar pow(long k) const;

  /// Structural equality: same kind, same value.
  bool operator==(const Scalar& o) const {
    return kind_ == o.kind_ && (is_zero() || value_ == o.value_);
  }

  /// Scalar token: "-" for Zero, "p" or "p/q" for tangibles, suffix "g" for
  /// ghosts. Round-trips bit-exactly through parse().
  std::string token() const;
  /// Parses a scalar token; accepts decimal literals ("2.5" reads as 5/2).
  /// Throws ParseError.
  static Scalar parse(std::string_view token);

 private:
  Scalar(Kind k, Rational v) : kind_(k), value_(std::move(v)) { value_.canonicalize(); }

  Kind kind_;
  Rational value_;
};

/// Order by nu-value with Zero strictly least.
std::strong_ordering nu_compare(const Scalar& a, const Scalar& b);

inline bool nu_matched(const Scalar& a, const Scalar& b) { return nu_compare(a, b) == 0; }
inline bool nu_leq(const Scalar& a, const Scalar& b) { return nu_compare(a, b) <= 0; }
inline bool nu_lt(const Scalar& a, const Scalar& b) { return nu_compare(a, b) < 0; }
inline bool nu_geq(const Scalar& a, const Scalar& b) { return nu_compare(a, b) >= 0; }

/// The relation b |= a ("b ghost-surpasses a"): b = a + c for some c in G0.
/// Equivalently b == a, or b is a ghost with nu(b) >= nu(a). Exact equality
/// on tangibles; a partial order.
bool ghost_surpasses(const Scalar& b, const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace supertrop

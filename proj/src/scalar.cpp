#include "supertrop/scalar.hpp"

#include <cctype>
#include <ostream>

namespace supertrop {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_square: return "NotSquare";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::non_tangible_rhs: return "NonTangibleRHS";
    case errc::not_singular: return "NotSingular";
    case errc::zero_determinant: return "ZeroDeterminant";
    case errc::not_quasi_tangible: return "NotQuasiTangible";
    case errc::non_tangible_matrix: return "NonTangibleMatrix";
    case errc::ambiguous_j: return "AmbiguousJ";
    case errc::malformed_expression: return "MalformedExpression";
    case errc::guard_unsatisfiable: return "GuardUnsatisfiable";
    case errc::parse_error: return "ParseError";
    case errc::ragged_rows: return "RaggedRows";
  }
  return "UnknownError";
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int c = cmp(a.value_, b.value_);
  if (c > 0) return a;
  if (c < 0) return b;
  return Scalar::ghost(a.value_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar::zero();
  Rational v = a.value_ + b.value_;
  const bool ghost = a.is_ghost() || b.is_ghost();
  return ghost ? Scalar::ghost(std::move(v)) : Scalar::tangible(std::move(v));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw domain_error(errc::division_by_zero, "inverse of the zero element");
  return Scalar(kind_, -value_);
}

Scalar Scalar::pow(long k) const {
  if (is_zero()) {
    if (k <= 0) throw domain_error(errc::division_by_zero, "zero element raised to a non-positive power");
    return Scalar();
  }
  if (k == 0) return unit();
  return Scalar(kind_, rat_scale(value_, k));
}

std::strong_ordering nu_compare(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
    return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int c = cmp(a.value(), b.value());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool ghost_surpasses(const Scalar& b, const Scalar& a) {
  if (b == a) return true;
  return b.is_ghost() && nu_geq(b, a);
}

std::string Scalar::token() const {
  if (is_zero()) return "-";
  std::string s = rat_to_string(value_);
  if (is_ghost()) s += 'g';
  return s;
}

namespace {

[[noreturn]] void parse_fail(std::string_view token, const char* why) {
  throw domain_error(errc::parse_error,
                     "bad scalar token '" + std::string(token) + "': " + why);
}

// Exact decimal-to-rational conversion: "12.75" -> 1275/100 canonicalized.
Rational decimal_to_rational(std::string_view text, std::string_view whole_token) {
  const auto dot = text.find('.');
  std::string digits;
  digits.reserve(text.size());
  std::size_t frac_len = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (i == dot) continue;
    if (c == '-' && i == 0) {
      digits += c;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) parse_fail(whole_token, "not a number");
    digits += c;
    if (i > dot) ++frac_len;
  }
  if (digits.empty() || digits == "-") parse_fail(whole_token, "empty numeral");
  if (dot != std::string_view::npos && frac_len == 0)
    parse_fail(whole_token, "trailing decimal point");
  mpz_class num(digits, 10);
  mpz_class den(1);
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Scalar Scalar::parse(std::string_view token) {
  if (token == "-") return Scalar::zero();
  if (token.empty()) parse_fail(token, "empty token");

  bool ghost = false;
  std::string_view body = token;
  if (body.back() == 'g') {
    ghost = true;
    body.remove_suffix(1);
    if (body.empty()) parse_fail(token, "ghost marker without a value");
  }

  Rational v;
  if (body.find('.') != std::string_view::npos) {
    if (body.find('/') != std::string_view::npos) parse_fail(token, "mixed decimal and fraction");
    v = decimal_to_rational(body, token);
  } else {
    const auto slash = body.find('/');
    if (slash == 0 || slash == body.size() - 1) parse_fail(token, "malformed fraction");
    for (std::size_t i = 0; i < body.size(); ++i) {
      const char c = body[i];
      if (c == '-' && i == 0) continue;
      if (c == '/' && i == slash) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) parse_fail(token, "not a number");
    }
    if (body == "-") parse_fail(token, "empty numeral");
    try {
      v = Rational(std::string(body), 10);
    } catch (const std::invalid_argument&) {
      parse_fail(token, "not a number");
    }
    if (slash != std::string_view::npos && v.get_den() == 0)
      parse_fail(token, "zero denominator");
    v.canonicalize();
  }
  return ghost ? Scalar::ghost(std::move(v)) : Scalar::tangible(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.token(); }

}  // namespace supertrop

#pragma once

#include <gmpxx.h>

#include <string>

namespace supertrop {

/// Exact rational carrier for all scalar values (log notation throughout).
/// Backed by GMP; no floating point anywhere in the arithmetic core.
using Rational = mpq_class;

/// v * k for integer k (repeated addition in log notation is multiplication
/// by the exponent).
inline Rational rat_scale(const Rational& v, long k) {
  Rational out = v * Rational(k);
  out.canonicalize();
  return out;
}

/// Canonical "p" or "p/q" form; denominator 1 prints without the slash.
inline std::string rat_to_string(const Rational& v) { return v.get_str(); }

}  // namespace supertrop

#pragma once

#include <cstdint>

#include "supertrop/matrix.hpp"

namespace supertrop {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that draws are identical across standard libraries,
/// runs, and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// true with probability p (53-bit resolution).
  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

  /// Independent substream for (this seed, index) pairs; used for per-trial
  /// streams so parallel trial order cannot matter.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return Rng(mix.next());
  }

 private:
  std::uint64_t state_;
};

/// Entry distribution for random matrices: integer nu-values uniform on
/// [value_lo, value_hi], ghost layer with probability ghost_p, Zero with
/// probability zero_p.
struct RandomProfile {
  long value_lo = -10;
  long value_hi = 10;
  double ghost_p = 0.2;
  double zero_p = 0.1;

  static RandomProfile tangible_only() { return {-10, 10, 0.0, 0.0}; }
  static RandomProfile ghost_only() { return {-10, 10, 1.0, 0.3}; }
};

inline Scalar random_scalar(Rng& rng, const RandomProfile& profile = {}) {
  // Draw in a fixed order so a profile change cannot silently shift the
  // stream consumed per entry.
  const bool zero = rng.chance(profile.zero_p);
  const bool ghost = rng.chance(profile.ghost_p);
  const long v = rng.uniform(profile.value_lo, profile.value_hi);
  if (zero) return Scalar::zero();
  const Rational value(v);
  return ghost ? Scalar::ghost(value) : Scalar::tangible(value);
}

inline Matrix random_matrix(std::size_t n, const RandomProfile& profile, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, profile);
  return m;
}

inline Vector random_vector(std::size_t n, const RandomProfile& profile, std::uint64_t seed) {
  Rng rng(seed);
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(rng, profile);
  return v;
}

}  // namespace supertrop

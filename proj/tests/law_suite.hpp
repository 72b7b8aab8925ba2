#pragma once

// Randomized law checks shared by the unit tests and the acceptance suite.
// Each law runs a fixed number of cases from a seeded deterministic stream
// and reports its failure count; the suites assert zero.

#include <cstdint>
#include <string>
#include <vector>

#include "supertrop/random.hpp"

namespace supertrop::laws {

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

namespace detail {

class LawRunner {
 public:
  LawResult result;

  explicit LawRunner(std::string name) { result.name = std::move(name); }

  void require(bool ok, const std::string& note) {
    ++result.cases;
    if (ok) return;
    ++result.failures;
    if (result.first_failure.empty()) result.first_failure = note;
  }
};

inline Scalar any_scalar(Rng& rng) { return random_scalar(rng, RandomProfile{}); }

}  // namespace detail

inline LawResult semiring_laws(std::size_t iterations, std::uint64_t seed) {
  detail::LawRunner law("scalar semiring laws");
  Rng rng(seed);
  const Scalar zero = Scalar::zero();
  const Scalar unit = Scalar::unit();
  for (std::size_t it = 0; it < iterations; ++it) {
    const Scalar a = detail::any_scalar(rng);
    const Scalar b = detail::any_scalar(rng);
    const Scalar c = detail::any_scalar(rng);
    const std::string ctx = a.token() + "," + b.token() + "," + c.token();
    law.require((a + b) + c == a + (b + c), "add assoc " + ctx);
    law.require(a + b == b + a, "add comm " + ctx);
    law.require((a * b) * c == a * (b * c), "mul assoc " + ctx);
    law.require(a * b == b * a, "mul comm " + ctx);
    law.require(a * (b + c) == a * b + a * c, "distributivity " + ctx);
    law.require(a + zero == a && zero + a == a, "zero neutral " + ctx);
    law.require(a * zero == zero && zero * a == zero, "zero absorbs " + ctx);
    law.require(a * unit == a && unit * a == a, "unit neutral " + ctx);
  }
  return law.result;
}

inline LawResult ghost_map_laws(std::size_t iterations, std::uint64_t seed) {
  detail::LawRunner law("ghost map homomorphism and bimodal sum");
  Rng rng(seed);
  for (std::size_t it = 0; it < iterations; ++it) {
    const Scalar a = detail::any_scalar(rng);
    const Scalar b = detail::any_scalar(rng);
    const std::string ctx = a.token() + "," + b.token();
    law.require((a + b).nu() == a.nu() + b.nu(), "nu additive " + ctx);
    law.require((a * b).nu() == a.nu() * b.nu(), "nu multiplicative " + ctx);
    law.require(a.nu().nu() == a.nu(), "nu idempotent " + ctx);
    law.require(a + a == a.nu(), "nu is doubling " + ctx);
    const Scalar s = a + b;
    law.require(s == a || s == b || s == a.nu(), "bimodal sum " + ctx);
  }
  return law.result;
}

inline LawResult surpassing_order_laws(std::size_t iterations, std::uint64_t seed) {
  detail::LawRunner law("ghost-surpassing partial order");
  Rng rng(seed);
  const RandomProfile ghosts = RandomProfile::ghost_only();
  for (std::size_t it = 0; it < iterations; ++it) {
    const Scalar a = detail::any_scalar(rng);
    const Scalar b = detail::any_scalar(rng);
    const std::string ctx = a.token() + "," + b.token();
    law.require(ghost_surpasses(a, a), "reflexive " + ctx);
    law.require(!(ghost_surpasses(a, b) && ghost_surpasses(b, a)) || a == b,
                "antisymmetric " + ctx);
    if (ghost_surpasses(b, a)) law.require(nu_geq(b, a), "surpassing dominates " + ctx);
    if (b.is_tangible() && ghost_surpasses(b, a)) law.require(b == a, "tangible collapse " + ctx);

    // Constructive chain a |= a+g |= a+g+h for ghost-or-zero g, h.
    const Scalar g = random_scalar(rng, ghosts);
    const Scalar h = random_scalar(rng, ghosts);
    const Scalar mid = a + g;
    const Scalar top = mid + h;
    law.require(ghost_surpasses(mid, a) && ghost_surpasses(top, mid) && ghost_surpasses(top, a),
                "transitive chain " + ctx + " g=" + g.token() + " h=" + h.token());
  }
  return law.result;
}

inline LawResult retract_laws(std::size_t iterations, std::uint64_t seed) {
  detail::LawRunner law("tangible retract laws");
  Rng rng(seed);
  for (std::size_t it = 0; it < iterations; ++it) {
    const Scalar a = detail::any_scalar(rng);
    const Scalar b = detail::any_scalar(rng);
    const std::string ctx = a.token() + "," + b.token();
    law.require((a * b).retract() == a.retract() * b.retract(), "multiplicative " + ctx);
    law.require(a.retract().nu() == a.nu(), "section of nu " + ctx);
    if (!nu_matched(a, b))
      law.require((a + b).retract() == a.retract() + b.retract(), "additive off ties " + ctx);
  }
  return law.result;
}

// Premise-building for the ghost-annihilation transfer: force, per row j,
// either a ghost dominating coefficient or a tie in sum_k a_k retract(b_jk).
inline LawResult tangible_lift_laws(std::size_t iterations, std::uint64_t seed) {
  detail::LawRunner law("ghost annihilation lifts through tangible retracts");
  Rng rng(seed);
  for (std::size_t it = 0; it < iterations; ++it) {
    const std::size_t k = 2 + rng.next() % 2;  // columns
    const std::size_t m = 1 + rng.next() % 3;  // rows

    std::vector<Scalar> a(k);
    a[0] = Scalar::tangible(Rational(rng.uniform(-10, 10)));
    a[1] = Scalar::tangible(Rational(rng.uniform(-10, 10)));
    for (std::size_t i = 2; i < k; ++i) a[i] = detail::any_scalar(rng);

    std::vector<std::vector<Scalar>> b(m, std::vector<Scalar>(k));
    for (auto& row : b)
      for (auto& s : row) s = detail::any_scalar(rng);

    // Repair each row until its combination is ghost-or-zero.
    for (std::size_t j = 0; j < m; ++j) {
      Scalar sum;
      for (std::size_t kk = 0; kk < k; ++kk) sum += a[kk] * b[j][kk].retract();
      if (sum.ghost_or_zero()) continue;
      std::size_t dominant = 0;
      Scalar best;
      for (std::size_t kk = 0; kk < k; ++kk) {
        const Scalar term = a[kk] * b[j][kk].retract();
        if (nu_compare(term, best) > 0) {
          best = term;
          dominant = kk;
        }
      }
      const std::size_t other = dominant == 0 ? 1 : 0;
      // Tie the other column's term against the dominant one.
      b[j][other] = Scalar::tangible(a[dominant].value() + b[j][dominant].value() -
                                     a[other].value());
    }

    bool premise = true;
    for (std::size_t j = 0; j < m; ++j) {
      Scalar sum;
      for (std::size_t kk = 0; kk < k; ++kk) sum += a[kk] * b[j][kk].retract();
      premise &= sum.ghost_or_zero();
    }
    law.require(premise, "constructive premise failed");
    if (!premise) continue;

    std::vector<Scalar> c(m);
    for (auto& s : c) s = detail::any_scalar(rng);
    Scalar conclusion;
    for (std::size_t kk = 0; kk < k; ++kk) {
      Scalar inner;
      for (std::size_t j = 0; j < m; ++j) inner += b[j][kk] * c[j];
      conclusion += a[kk] * inner.retract();
    }
    law.require(conclusion.ghost_or_zero(), "combination left the ghost ideal");
  }
  return law.result;
}

inline LawResult retract_sum_exchange_laws(std::size_t iterations, std::uint64_t seed) {
  detail::LawRunner law("retract-of-sum is surpassed by sum-of-retracts");
  Rng rng(seed);
  for (std::size_t it = 0; it < iterations; ++it) {
    const std::size_t k = 1 + rng.next() % 3;
    const std::size_t m = 1 + rng.next() % 3;
    std::vector<Scalar> a(k);
    for (auto& s : a) s = detail::any_scalar(rng);
    std::vector<std::vector<Scalar>> b(m, std::vector<Scalar>(k));
    for (auto& row : b)
      for (auto& s : row) s = detail::any_scalar(rng);

    Scalar lhs, rhs;
    for (std::size_t kk = 0; kk < k; ++kk) {
      Scalar retract_sum, plain_sum;
      for (std::size_t j = 0; j < m; ++j) {
        retract_sum += b[j][kk].retract();
        plain_sum += b[j][kk];
      }
      lhs += a[kk] * retract_sum;
      rhs += a[kk] * plain_sum.retract();
    }
    law.require(ghost_surpasses(lhs, rhs), "exchange relation failed");
  }
  return law.result;
}

inline std::vector<LawResult> scalar_law_suite(std::size_t iterations, std::uint64_t seed) {
  return {
      semiring_laws(iterations, seed),
      ghost_map_laws(iterations, seed + 1),
      surpassing_order_laws(iterations, seed + 2),
      retract_laws(iterations, seed + 3),
      tangible_lift_laws(iterations, seed + 4),
      retract_sum_exchange_laws(iterations, seed + 5),
  };
}

}  // namespace supertrop::laws

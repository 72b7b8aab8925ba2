#pragma once

#include <cstdint>

#include "supertrop/determinant.hpp"

namespace supertrop {

/// Result of the Cramer-style solve of A x |= v.
struct SolveReport {
  Vector solution;   // tangible
  Vector residual;   // A * solution
  bool surpasses;    // A x |= v; true on every successful return
  bool exact;        // A x == v
  bool good_vector;  // v == I_A v (forces exact for tangible v)
};

/// Solves A x |= v for quasi-invertible A and tangible v by
/// x = retract(quasi_inverse(A) * v); the returned solution is the
/// nu-maximal tangible one. Throws SingularMatrix / NonTangibleRHS /
/// DimensionMismatch.
SolveReport cramer_solve(const Matrix& a, const Vector& v, std::size_t cap = kDefaultSizeCap);

/// Relaxed entry point: v may contain ghosts. Computes the same retracted
/// candidate and reports surpasses by direct check only; no maximality or
/// good-vector claim is made (good_vector is reported for information).
SolveReport solve_any(const Matrix& a, const Vector& v, std::size_t cap = kDefaultSizeCap);

/// true iff A x |= v entrywise. For tangible v this is cross-checked
/// against the equivalent membership test A x + v in H0.
bool verify_ghost_solution(const Matrix& a, const Vector& x, const Vector& v);

/// Ghost-annihilated column for singular A (|A| ghost, nonzero).
struct KernelReport {
  Vector x;                         // retract of column i of adj(A)
  bool hypothesis_disjoint_terms;   // all attaining terms tangible, multicycles pairwise edge-disjoint
  bool hypothesis_all_tangible;     // every entry of A and adj(A) in T0
  bool verified;                    // some hypothesis held (then A x in H0 is guaranteed)
  bool in_ghost_module;             // direct check of A x in H0, always computed
};

/// Throws NotSingular when |A| is tangible, ZeroDeterminant when |A| = Zero.
/// When neither hypothesis holds the candidate is still returned, flagged
/// unverified.
KernelReport singular_kernel_column(const Matrix& a, std::size_t column,
                                    std::size_t cap = kDefaultSizeCap);

/// Samples tangible candidates on an integer lattice below the Cramer
/// solution (componentwise offsets 0..4, per-trial substream of seed),
/// keeps those with A y |= v, and checks that every kept y is
/// componentwise nu-below the Cramer solution and that retract(y + z) of
/// kept pairs still solves. Trial 0 is the Cramer solution itself.
bool max_solution_check(const Matrix& a, const Vector& v, std::size_t trials,
                        std::uint64_t seed, std::size_t cap = kDefaultSizeCap);

}  // namespace supertrop

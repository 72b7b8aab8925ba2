#pragma once

#include <cstddef>
#include <vector>

#include "supertrop/matrix.hpp"

namespace supertrop {

/// Default cap on permanent enumeration size; raisable per call
/// (CLI: --max-n / SUPERTROP_MAX_N).
inline constexpr std::size_t kDefaultSizeCap = 9;

/// One permutation attaining the determinant: perm[i] is the column picked
/// in row i; term is the full product (its layer records whether the term
/// passed through a ghost entry).
struct AttainingPerm {
  std::vector<std::size_t> perm;
  Scalar term;

  bool ghost_term() const { return term.is_ghost(); }
  bool operator==(const AttainingPerm&) const = default;
};

/// Supertropical determinant (permanent) with its attaining set.
///
/// value is ghost iff at least two permutations attain the maximal nu-value
/// or the unique attaining term contains a ghost factor. attaining is empty
/// iff value is Zero; it is sorted lexicographically.
struct DetResult {
  Scalar value;
  std::vector<AttainingPerm> attaining;

  bool nonsingular() const { return value.is_tangible(); }
  bool singular() const { return !value.is_tangible(); }
};

/// Permanent over all n! permutations, computed by prefix search with
/// branch-and-bound pruning on partial nu-values; prefixes explored in
/// parallel for larger n. Result is independent of scheduling.
/// Throws NotSquare / SizeCapExceeded.
DetResult determinant(const Matrix& a, std::size_t cap = kDefaultSizeCap);

namespace reference {
/// Serial full-enumeration permanent, no pruning, no shared code with the
/// optimized path. Kept as the oracle the optimized kernel is checked
/// against, and as the baseline in the determinant benchmark.
DetResult determinant_full(const Matrix& a);
}  // namespace reference

/// Submatrix with row i and column j removed.
Matrix minor_matrix(const Matrix& a, std::size_t i, std::size_t j);

/// Transpose of the matrix of minor determinants; adjoint of a 1x1 matrix is
/// [[unit]] (empty-product convention).
Matrix adjoint(const Matrix& a, std::size_t cap = kDefaultSizeCap);
/// Entrywise tangible retract of the adjoint.
Matrix tangible_adjoint(const Matrix& a, std::size_t cap = kDefaultSizeCap);

/// Canonical quasi-inverse (1/|A|) adj(A). Throws SingularMatrix unless |A|
/// is tangible (and so invertible).
Matrix quasi_inverse(const Matrix& a, std::size_t cap = kDefaultSizeCap);
/// Tangible variant built from the tangible adjoint.
Matrix tangible_quasi_inverse(const Matrix& a, std::size_t cap = kDefaultSizeCap);
/// Maximal quasi-inverse: (1/|A|) adj(A) applied twice around A.
Matrix big_quasi_inverse(const Matrix& a, std::size_t cap = kDefaultSizeCap);

struct QuasiIdentityPair {
  Matrix right;  // I_A  = A * quasi_inverse(A)
  Matrix left;   // I'_A = quasi_inverse(A) * A
};

QuasiIdentityPair quasi_identities(const Matrix& a, std::size_t cap = kDefaultSizeCap);

/// Nonsingular, multiplicatively idempotent, unit diagonal, ghost-or-Zero
/// off the diagonal.
bool is_quasi_identity(const Matrix& m, std::size_t cap = kDefaultSizeCap);

}  // namespace supertrop

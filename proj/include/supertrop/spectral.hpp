#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supertrop/determinant.hpp"

namespace supertrop {

/// Polynomial over supertropical scalars; coeffs()[d] is the coefficient of
/// x^d. Characteristic polynomials are monic with tangible-unit leading
/// coefficient.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Scalar> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Scalar& coeff(std::size_t d) const { return coeffs_.at(d); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Supertropical evaluation at a scalar point.
  Scalar eval(const Scalar& x) const;

  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Scalar> coeffs_;
};

/// Entrywise tangible retract of the coefficients (the "tangible" variant of
/// a characteristic polynomial).
Polynomial tangible_coefficients(const Polynomial& f);
/// Degree shift:  sum_{d>=1} c_d x^(d-1); the constant term is dropped.
Polynomial shifted_down(const Polynomial& f);

/// Characteristic polynomial |A + x I|: the coefficient of x^(n-k) is the
/// supertropical sum of all k x k principal-minor determinants.
/// Throws NotSquare / SizeCapExceeded.
Polynomial char_poly(const Matrix& a, std::size_t cap = kDefaultSizeCap);

/// Degrees whose monomials strictly dominate all others at some tangible
/// evaluation point (strict vertices of the upper concave envelope of
/// (degree, nu-value)); ascending order.
std::vector<std::size_t> essential_part(const Polynomial& f);

/// All essential coefficients except possibly the constant term tangible.
bool is_quasi_tangible(const Polynomial& f);

struct Root {
  Scalar beta;               // tangible, or Zero for the final root of a
                             // polynomial with Zero constant term
  std::size_t multiplicity;  // corner abscissa m = degree(f) - essential degree
};

/// Tangible roots of the essential part, strictly descending by nu-value;
/// consecutive-corner slopes, retracted. Throws NotQuasiTangible.
std::vector<Root> tangible_roots(const Polynomial& f);

/// A set of disjoint cycles covering a vertex subset of the digraph of A:
/// edges (i, sigma(i)) sorted by source vertex, weight = product of entries.
struct Multicycle {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  Scalar weight;

  std::vector<std::size_t> vertices() const;
  bool operator==(const Multicycle&) const = default;
};

struct MulticycleSet {
  std::vector<Multicycle> covers;  // every cover attaining the maximal nu-weight
  bool unique = false;
};

/// All nu-maximal m-multicycles of the digraph of A (covers with a Zero edge
/// do not exist). Empty when no m-multicycle exists.
MulticycleSet dominant_multicycles(const Matrix& a, std::size_t m,
                                   std::size_t cap = kDefaultSizeCap);

struct EigenPair {
  Scalar beta;
  std::size_t m;       // corner multiplicity of this root
  std::size_t m_prev;  // previous corner (0 for the first root)
  std::vector<std::size_t> J;  // vertices entering the dominant multicycle at this corner
  std::size_t column;          // chosen column: min(J)
  Vector eigenvector;          // tangible retract of that adjoint column
  bool verified;               // A v |= beta v and v nonzero, checked directly
};

/// Supertropical eigenvalues with explicitly constructed eigenvectors:
/// for each root beta, the retract of column min(J) of adj(A + beta I).
/// Requires a tangible matrix (apply retract() first otherwise) and a
/// quasi-tangible essential characteristic polynomial.
/// Throws NonTangibleMatrix / NotQuasiTangible / AmbiguousJ.
std::vector<EigenPair> eigen_data(const Matrix& a, std::size_t cap = kDefaultSizeCap);

/// sum_d coeff_d A^d with A^0 = I.
Matrix poly_eval_matrix(const Polynomial& f, const Matrix& a);

}  // namespace supertrop

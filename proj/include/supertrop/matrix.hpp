#pragma once

#include <cstddef>
#include <vector>

#include "supertrop/scalar.hpp"

namespace supertrop {

using Vector = std::vector<Scalar>;

/// Dense rectangular matrix over supertropical scalars, row-major.
/// Matrices are immutable in spirit: operations return fresh values.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::unit();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return entries_[i * cols_ + j];
  }
  const Scalar& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return entries_[i * cols_ + j];
  }

  const std::vector<Scalar>& entries() const { return entries_; }

  /// Every entry in T0 (tangible or Zero).
  bool tangible() const;
  /// Every entry in G0 (ghost or Zero).
  bool ghost() const;

  Matrix transpose() const;

  bool operator==(const Matrix& o) const = default;

 private:
  void check_index(std::size_t i, std::size_t j) const;

  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);

/// Matrix power with A^0 = I. Requires square.
Matrix mat_pow(const Matrix& a, std::size_t k);

/// Entrywise ghost map / tangible retract.
Matrix nu(const Matrix& a);
Matrix retract(const Matrix& a);
Vector nu(const Vector& v);
Vector retract(const Vector& v);

/// Entrywise relations; both operands must have equal shape
/// (DimensionMismatch otherwise).
bool ghost_surpasses(const Matrix& b, const Matrix& a);
bool nu_matched(const Matrix& a, const Matrix& b);
bool nu_leq(const Matrix& a, const Matrix& b);
bool ghost_surpasses(const Vector& b, const Vector& a);
bool nu_matched(const Vector& a, const Vector& b);
bool nu_leq(const Vector& a, const Vector& b);

/// Membership in H0 = G0^(n): every component ghost or Zero.
bool is_ghost_vector(const Vector& v);
/// Every component in T0.
bool is_tangible_vector(const Vector& v);
/// All components Zero.
bool is_zero_vector(const Vector& v);

}  // namespace supertrop

#include "supertrop/matrix.hpp"

#include <algorithm>
#include <string>

namespace supertrop {

namespace {

void require_same_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc) {
  if (ar != br || ac != bc)
    throw domain_error(errc::dimension_mismatch,
                       std::to_string(ar) + "x" + std::to_string(ac) + " vs " +
                           std::to_string(br) + "x" + std::to_string(bc));
}

}  // namespace

void Matrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

bool Matrix::tangible() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.tangible_or_zero(); });
}

bool Matrix::ghost() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.ghost_or_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw domain_error(errc::dimension_mismatch, "matrix product inner dimensions");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = c * a.at(i, j);
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size())
    throw domain_error(errc::dimension_mismatch, "matrix-vector product dimensions");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_shape(a.size(), 1, b.size(), 1);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Matrix mat_pow(const Matrix& a, std::size_t k) {
  if (!a.square()) throw domain_error(errc::not_square, "matrix power");
  Matrix acc = Matrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

Matrix nu(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j).nu();
  return out;
}

Matrix retract(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j).retract();
  return out;
}

Vector nu(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].nu();
  return out;
}

Vector retract(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].retract();
  return out;
}

namespace {

template <typename Rel>
bool entrywise(const Matrix& a, const Matrix& b, Rel rel) {
  require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!rel(a.at(i, j), b.at(i, j))) return false;
  return true;
}

template <typename Rel>
bool entrywise(const Vector& a, const Vector& b, Rel rel) {
  require_same_shape(a.size(), 1, b.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!rel(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool ghost_surpasses(const Matrix& b, const Matrix& a) {
  return entrywise(b, a, [](const Scalar& x, const Scalar& y) { return ghost_surpasses(x, y); });
}

bool nu_matched(const Matrix& a, const Matrix& b) {
  return entrywise(a, b, [](const Scalar& x, const Scalar& y) { return nu_matched(x, y); });
}

bool nu_leq(const Matrix& a, const Matrix& b) {
  return entrywise(a, b, [](const Scalar& x, const Scalar& y) { return nu_leq(x, y); });
}

bool ghost_surpasses(const Vector& b, const Vector& a) {
  return entrywise(b, a, [](const Scalar& x, const Scalar& y) { return ghost_surpasses(x, y); });
}

bool nu_matched(const Vector& a, const Vector& b) {
  return entrywise(a, b, [](const Scalar& x, const Scalar& y) { return nu_matched(x, y); });
}

bool nu_leq(const Vector& a, const Vector& b) {
  return entrywise(a, b, [](const Scalar& x, const Scalar& y) { return nu_leq(x, y); });
}

bool is_ghost_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.ghost_or_zero(); });
}

bool is_tangible_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.tangible_or_zero(); });
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace supertrop

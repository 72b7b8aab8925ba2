#include "supertrop/spectral.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace supertrop {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc;
  Scalar power = Scalar::unit();
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    acc += coeffs_[d] * power;
    if (d + 1 < coeffs_.size()) power = power * x;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const Scalar& c = coeffs_[d];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool bare = c == Scalar::unit() && d > 0;
    if (!bare) os << c.token();
    if (d > 0) {
      if (!bare) os << ' ';
      os << 'x';
      if (d > 1) os << '^' << d;
    }
  }
  if (first) os << '-';
  return os.str();
}

Polynomial tangible_coefficients(const Polynomial& f) {
  std::vector<Scalar> c = f.coeffs();
  for (auto& s : c) s = s.retract();
  return Polynomial(std::move(c));
}

Polynomial shifted_down(const Polynomial& f) {
  if (f.degree() == 0) return Polynomial({Scalar::zero()});
  return Polynomial({f.coeffs().begin() + 1, f.coeffs().end()});
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i-- > 0) {
      if (pick[i] != i + n - k) break;
      if (i == 0) return out;
    }
    ++pick[i];
    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

Matrix principal_submatrix(const Matrix& a, const std::vector<std::size_t>& s) {
  Matrix m(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) m.at(i, j) = a.at(s[i], s[j]);
  return m;
}

}  // namespace

Polynomial char_poly(const Matrix& a, std::size_t cap) {
  if (!a.square()) throw domain_error(errc::not_square, "characteristic polynomial");
  const std::size_t n = a.rows();
  if (n > cap)
    throw domain_error(errc::size_cap_exceeded, "characteristic polynomial cap");

  std::vector<Scalar> coeffs(n + 1);
  coeffs[n] = Scalar::unit();
  for (std::size_t k = 1; k <= n; ++k) {
    const auto subsets = subsets_of_size(n, k);
    std::vector<Scalar> dets(subsets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < subsets.size(); ++s)
      dets[s] = determinant(principal_submatrix(a, subsets[s]), cap).value;
    Scalar acc;
    for (const Scalar& d : dets) acc += d;
    coeffs[n - k] = acc;
  }
  return Polynomial(std::move(coeffs));
}

std::vector<std::size_t> essential_part(const Polynomial& f) {
  const auto& c = f.coeffs();
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (c[d].is_zero()) continue;
    // d is essential iff some evaluation point x satisfies
    // nu(c_d) + d x > nu(c_e) + e x for every other nonzero e: an open
    // interval whose bounds come from the slopes to lower/higher degrees.
    std::optional<Rational> lower, upper;
    bool feasible = true;
    for (std::size_t e = 0; e < c.size() && feasible; ++e) {
      if (e == d || c[e].is_zero()) continue;
      const Rational slope = (c[e].value() - c[d].value()) /
                             (Rational(static_cast<long>(d)) - Rational(static_cast<long>(e)));
      if (e < d) {
        if (!lower || cmp(slope, *lower) > 0) lower = slope;
      } else {
        if (!upper || cmp(slope, *upper) < 0) upper = slope;
      }
      if (lower && upper && cmp(*lower, *upper) >= 0) feasible = false;
    }
    if (feasible) out.push_back(d);
  }
  return out;
}

bool is_quasi_tangible(const Polynomial& f) {
  for (std::size_t d : essential_part(f))
    if (d > 0 && !f.coeff(d).is_tangible()) return false;
  return true;
}

std::vector<Root> tangible_roots(const Polynomial& f) {
  if (!is_quasi_tangible(f))
    throw domain_error(errc::not_quasi_tangible,
                       "essential part has a ghost coefficient above the constant term");
  const auto ess = essential_part(f);
  const std::size_t n = f.degree();

  std::vector<Root> roots;
  // Corners in descending degree; slope of each envelope edge is the root.
  for (std::size_t j = ess.size() - 1; j-- > 0;) {
    const std::size_t hi = ess[j + 1], lo = ess[j];
    const Rational slope =
        (f.coeff(lo).value() - f.coeff(hi).value()) /
        (Rational(static_cast<long>(hi)) - Rational(static_cast<long>(lo)));
    roots.push_back({Scalar::tangible(slope), n - lo});
  }
  if (f.coeff(0).is_zero()) roots.push_back({Scalar::zero(), n});

  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (nu_compare(roots[i].beta, roots[i + 1].beta) <= 0)
      throw std::logic_error("envelope slopes failed to descend strictly");
  return roots;
}

std::vector<std::size_t> Multicycle::vertices() const {
  std::vector<std::size_t> v;
  v.reserve(edges.size());
  for (const auto& e : edges) v.push_back(e.first);
  return v;
}

MulticycleSet dominant_multicycles(const Matrix& a, std::size_t m, std::size_t cap) {
  if (!a.square()) throw domain_error(errc::not_square, "multicycle enumeration");
  const std::size_t n = a.rows();
  if (n > cap) throw domain_error(errc::size_cap_exceeded, "multicycle enumeration cap");
  if (m == 0 || m > n) throw std::out_of_range("multicycle size");

  MulticycleSet out;
  std::optional<Rational> best;
  for (const auto& subset : subsets_of_size(n, m)) {
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    do {
      Scalar w = Scalar::unit();
      for (std::size_t i = 0; i < m && !w.is_zero(); ++i)
        w = w * a.at(subset[i], subset[idx[i]]);
      if (w.is_zero()) continue;
      const int rel = best ? cmp(w.value(), *best) : 1;
      if (rel < 0) continue;
      if (rel > 0) {
        best = w.value();
        out.covers.clear();
      }
      Multicycle c;
      for (std::size_t i = 0; i < m; ++i) c.edges.emplace_back(subset[i], subset[idx[i]]);
      c.weight = w;
      out.covers.push_back(std::move(c));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  out.unique = out.covers.size() == 1;
  return out;
}

namespace {

std::vector<std::size_t> vertex_difference(const std::vector<std::size_t>& verts,
                                           const std::vector<bool>& prev) {
  std::vector<std::size_t> out;
  for (std::size_t v : verts)
    if (!prev[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<EigenPair> eigen_data(const Matrix& a, std::size_t cap) {
  if (!a.square()) throw domain_error(errc::not_square, "eigen data");
  const std::size_t n = a.rows();
  if (n > cap) throw domain_error(errc::size_cap_exceeded, "eigen data cap");
  if (!a.tangible())
    throw domain_error(errc::non_tangible_matrix,
                       "ghost entries present; retract the matrix first");

  const Polynomial f = char_poly(a, cap);
  const std::vector<Root> roots = tangible_roots(f);

  std::vector<EigenPair> out;
  std::vector<bool> prev_vertices(n, false);
  std::size_t m_prev = 0;
  for (std::size_t ell = 0; ell < roots.size(); ++ell) {
    const Scalar& beta = roots[ell].beta;
    const std::size_t m = roots[ell].multiplicity;
    const bool last = ell + 1 == roots.size();

    const MulticycleSet covers = dominant_multicycles(a, m, cap);
    std::vector<std::size_t> J;
    if (!last && !covers.unique)
      throw domain_error(errc::ambiguous_j,
                         "dominant multicycle not unique below the last corner");
    // At the last corner the dominant cover may be ambiguous; take the union
    // of new vertices over all maximal covers.
    for (const auto& c : covers.covers) {
      for (std::size_t v : vertex_difference(c.vertices(), prev_vertices))
        if (std::find(J.begin(), J.end(), v) == J.end()) J.push_back(v);
      if (!last) break;
    }
    std::sort(J.begin(), J.end());
    if (J.empty())
      throw domain_error(errc::ambiguous_j, "no vertex enters the dominant multicycle at corner " +
                                                std::to_string(m));

    Matrix b = a + beta * Matrix::identity(n);
    const Scalar det_b = determinant(b, cap).value;
    const Scalar alpha = f.coeff(n - m);
    const Scalar expected = (alpha * (n == m ? Scalar::unit() : beta.pow(static_cast<long>(n - m)))).nu();
    if (!(det_b == expected))
      throw std::logic_error("determinant of A + beta I disagrees with the corner product");

    EigenPair pair;
    pair.beta = beta;
    pair.m = m;
    pair.m_prev = m_prev;
    pair.J = J;
    pair.column = J.front();
    const Matrix adj_b = adjoint(b, cap);
    pair.eigenvector.resize(n);
    for (std::size_t j = 0; j < n; ++j) pair.eigenvector[j] = adj_b.at(j, pair.column).retract();
    pair.verified = !is_zero_vector(pair.eigenvector) &&
                    ghost_surpasses(a * pair.eigenvector, beta * pair.eigenvector);
    out.push_back(std::move(pair));

    if (!last) {
      prev_vertices.assign(n, false);
      for (std::size_t v : covers.covers.front().vertices()) prev_vertices[v] = true;
    }
    m_prev = m;
  }
  return out;
}

Matrix poly_eval_matrix(const Polynomial& f, const Matrix& a) {
  if (!a.square()) throw domain_error(errc::not_square, "polynomial evaluation at a matrix");
  const std::size_t n = a.rows();
  Matrix acc(n, n);
  Matrix power = Matrix::identity(n);
  for (std::size_t d = 0; d <= f.degree(); ++d) {
    acc = acc + f.coeff(d) * power;
    if (d < f.degree()) power = power * a;
  }
  return acc;
}

}  // namespace supertrop

#include "supertrop/solve.hpp"

#include <stdexcept>

#include "supertrop/random.hpp"

namespace supertrop {

namespace {

void require_rhs_shape(const Matrix& a, const Vector& v) {
  if (!a.square()) throw domain_error(errc::not_square, "solve");
  if (a.rows() != v.size()) throw domain_error(errc::dimension_mismatch, "rhs length");
}

SolveReport build_report(const Matrix& a, const Vector& v, std::size_t cap) {
  const Matrix qi = quasi_inverse(a, cap);
  SolveReport r;
  r.solution = retract(qi * v);
  r.residual = a * r.solution;
  r.surpasses = ghost_surpasses(r.residual, v);
  r.exact = r.residual == v;
  r.good_vector = (a * qi) * v == v;
  return r;
}

}  // namespace

SolveReport cramer_solve(const Matrix& a, const Vector& v, std::size_t cap) {
  require_rhs_shape(a, v);
  if (!is_tangible_vector(v))
    throw domain_error(errc::non_tangible_rhs, "rhs must have tangible-or-zero entries");
  SolveReport r = build_report(a, v, cap);
  if (!r.surpasses)
    throw std::logic_error("cramer solution failed to ghost-surpass a tangible rhs");
  return r;
}

SolveReport solve_any(const Matrix& a, const Vector& v, std::size_t cap) {
  require_rhs_shape(a, v);
  return build_report(a, v, cap);
}

bool verify_ghost_solution(const Matrix& a, const Vector& x, const Vector& v) {
  if (a.cols() != x.size() || a.rows() != v.size())
    throw domain_error(errc::dimension_mismatch, "verify_ghost_solution shapes");
  const Vector residual = a * x;
  const bool surpasses = ghost_surpasses(residual, v);
  if (is_tangible_vector(v)) {
    const bool membership = is_ghost_vector(residual + v);
    if (membership != surpasses)
      throw std::logic_error("ghost-surpassing and H0-membership tests disagree on a tangible rhs");
  }
  return surpasses;
}

namespace {

// Edge sets of two attaining permutations are disjoint iff they never route
// the same row through the same column.
bool pairwise_edge_disjoint(const std::vector<AttainingPerm>& perms) {
  for (std::size_t s = 0; s < perms.size(); ++s)
    for (std::size_t t = s + 1; t < perms.size(); ++t)
      for (std::size_t i = 0; i < perms[s].perm.size(); ++i)
        if (perms[s].perm[i] == perms[t].perm[i]) return false;
  return true;
}

}  // namespace

KernelReport singular_kernel_column(const Matrix& a, std::size_t column, std::size_t cap) {
  if (!a.square()) throw domain_error(errc::not_square, "singular kernel column");
  const DetResult det = determinant(a, cap);
  if (det.value.is_tangible())
    throw domain_error(errc::not_singular, "determinant " + det.value.token() + " is tangible");
  if (det.value.is_zero())
    throw domain_error(errc::zero_determinant, "determinant is the zero element");
  const std::size_t n = a.rows();
  if (column >= n) throw std::out_of_range("kernel column index");

  const Matrix adj = adjoint(a, cap);
  KernelReport r;
  r.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) r.x[j] = adj.at(j, column).retract();

  bool all_terms_tangible = true;
  for (const auto& t : det.attaining) all_terms_tangible &= t.term.is_tangible();
  r.hypothesis_disjoint_terms = all_terms_tangible && pairwise_edge_disjoint(det.attaining);
  r.hypothesis_all_tangible = a.tangible() && adj.tangible();
  r.verified = r.hypothesis_disjoint_terms || r.hypothesis_all_tangible;
  r.in_ghost_module = is_ghost_vector(a * r.x);
  if (r.verified && !r.in_ghost_module)
    throw std::logic_error("kernel hypothesis held but A x left the ghost module");
  return r;
}

bool max_solution_check(const Matrix& a, const Vector& v, std::size_t trials,
                        std::uint64_t seed, std::size_t cap) {
  const SolveReport cramer = cramer_solve(a, v, cap);
  const Vector& xstar = cramer.solution;
  const std::size_t n = xstar.size();

  std::vector<Vector> kept;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Vector y(n);
    if (trial == 0) {
      y = xstar;
    } else {
      Rng rng = Rng::substream(seed, trial);
      for (std::size_t i = 0; i < n; ++i) {
        if (xstar[i].is_zero()) {
          y[i] = Scalar::zero();
          rng.next();
          continue;
        }
        y[i] = Scalar::tangible(xstar[i].value() - Rational(rng.uniform(0, 4)));
      }
    }
    if (!verify_ghost_solution(a, y, v)) continue;
    if (!nu_leq(y, xstar)) return false;
    kept.push_back(std::move(y));
  }

  for (std::size_t i = 0; i + 1 < kept.size(); ++i)
    if (!verify_ghost_solution(a, retract(kept[i] + kept[i + 1]), v)) return false;
  return !kept.empty();
}

}  // namespace supertrop

#include "supertrop/determinant.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

namespace supertrop {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.square()) throw domain_error(errc::not_square, what);
}

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw domain_error(errc::size_cap_exceeded, "n=" + std::to_string(n) +
                                                    " exceeds enumeration cap " +
                                                    std::to_string(cap));
}

// Flattened view of the matrix used by the search: nu-values plus kind flags.
struct SearchGrid {
  std::size_t n;
  std::vector<const Scalar*> cell;   // row-major, size n*n
  std::vector<Rational> suffix_max;  // suffix_max[i] = sum of row maxima for rows >= i
  std::vector<std::vector<std::size_t>> desc_cols;  // per row, nonzero cols by descending nu
  bool feasible = true;              // false when some row is entirely Zero

  explicit SearchGrid(const Matrix& a) : n(a.rows()) {
    cell.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cell[i * n + j] = &a.at(i, j);

    desc_cols.resize(n);
    std::vector<Rational> row_max(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& cols = desc_cols[i];
      for (std::size_t j = 0; j < n; ++j)
        if (!cell[i * n + j]->is_zero()) cols.push_back(j);
      if (cols.empty()) {
        feasible = false;
        return;
      }
      std::sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) {
        return cmp(cell[i * n + x]->value(), cell[i * n + y]->value()) > 0;
      });
      row_max[i] = cell[i * n + cols.front()]->value();
    }
    suffix_max.assign(n + 1, Rational(0));
    for (std::size_t i = n; i-- > 0;) suffix_max[i] = suffix_max[i + 1] + row_max[i];
  }

  const Scalar& entry(std::size_t i, std::size_t j) const { return *cell[i * n + j]; }
};

// Pass 1: maximal attainable nu-value over complete permutations, or nullopt
// when every branch hits a Zero entry.
class MaxValueSearch {
 public:
  explicit MaxValueSearch(const SearchGrid& g) : g_(g), used_(g.n, false) {}

  std::optional<Rational> run() {
    if (!g_.feasible) return std::nullopt;
    dfs(0, Rational(0));
    return best_;
  }

 private:
  void dfs(std::size_t row, const Rational& partial) {
    if (row == g_.n) {
      if (!best_ || cmp(partial, *best_) > 0) best_ = partial;
      return;
    }
    if (best_ && cmp(partial + g_.suffix_max[row], *best_) < 0) return;
    for (std::size_t j : g_.desc_cols[row]) {
      if (used_[j]) continue;
      used_[j] = true;
      dfs(row + 1, partial + g_.entry(row, j).value());
      used_[j] = false;
    }
  }

  const SearchGrid& g_;
  std::vector<bool> used_;
  std::optional<Rational> best_;
};

// Pass 2: collect every permutation whose term nu-value equals target.
// Explores columns in ascending order so the output is lexicographic.
class CollectSearch {
 public:
  CollectSearch(const SearchGrid& g, const Rational& target) : g_(g), target_(target) {}

  // first_col fixes the column of row 0 so prefixes can run in parallel.
  std::vector<AttainingPerm> run(std::size_t first_col) {
    used_.assign(g_.n, false);
    perm_.assign(g_.n, 0);
    out_.clear();
    const Scalar& e = g_.entry(0, first_col);
    if (e.is_zero()) return {};
    used_[first_col] = true;
    perm_[0] = first_col;
    dfs(1, e.value(), e.is_ghost());
    return std::move(out_);
  }

  std::vector<AttainingPerm> run_whole() {
    used_.assign(g_.n, false);
    perm_.assign(g_.n, 0);
    out_.clear();
    dfs(0, Rational(0), false);
    return std::move(out_);
  }

 private:
  void dfs(std::size_t row, const Rational& partial, bool saw_ghost) {
    if (row == g_.n) {
      if (cmp(partial, target_) == 0) {
        Scalar term = saw_ghost ? Scalar::ghost(partial) : Scalar::tangible(partial);
        out_.push_back({perm_, std::move(term)});
      }
      return;
    }
    if (cmp(partial + g_.suffix_max[row], target_) < 0) return;
    for (std::size_t j = 0; j < g_.n; ++j) {
      if (used_[j]) continue;
      const Scalar& e = g_.entry(row, j);
      if (e.is_zero()) continue;
      used_[j] = true;
      perm_[row] = j;
      dfs(row + 1, partial + e.value(), saw_ghost || e.is_ghost());
      used_[j] = false;
    }
  }

  const SearchGrid& g_;
  Rational target_;
  std::vector<bool> used_;
  std::vector<std::size_t> perm_;
  std::vector<AttainingPerm> out_;
};

DetResult classify(std::vector<AttainingPerm> attaining, const Rational& value) {
  DetResult r;
  const bool ghost = attaining.size() >= 2 || attaining.front().ghost_term();
  r.value = ghost ? Scalar::ghost(value) : Scalar::tangible(value);
  r.attaining = std::move(attaining);
  return r;
}

// Parallel prefix exploration pays off only once the factorial grows.
constexpr std::size_t kParallelThreshold = 7;

}  // namespace

DetResult determinant(const Matrix& a, std::size_t cap) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  require_cap(n, cap);

  if (n == 0) return {Scalar::unit(), {AttainingPerm{{}, Scalar::unit()}}};

  SearchGrid grid(a);
  const std::optional<Rational> max = MaxValueSearch(grid).run();
  if (!max) return {Scalar::zero(), {}};

  std::vector<AttainingPerm> attaining;
  if (n < kParallelThreshold) {
    attaining = CollectSearch(grid, *max).run_whole();
  } else {
    std::vector<std::vector<AttainingPerm>> per_prefix(n);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < n; ++j) {
      CollectSearch search(grid, *max);
      per_prefix[j] = search.run(j);
    }
    for (auto& chunk : per_prefix)
      attaining.insert(attaining.end(), std::make_move_iterator(chunk.begin()),
                       std::make_move_iterator(chunk.end()));
  }
  return classify(std::move(attaining), *max);
}

namespace reference {

DetResult determinant_full(const Matrix& a) {
  if (!a.square()) throw domain_error(errc::not_square, "determinant");
  const std::size_t n = a.rows();
  if (n == 0) return {Scalar::unit(), {AttainingPerm{{}, Scalar::unit()}}};

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  Scalar total;
  std::vector<AttainingPerm> terms;
  do {
    Scalar term = Scalar::unit();
    for (std::size_t i = 0; i < n; ++i) term = term * a.at(i, perm[i]);
    total = total + term;
    if (!term.is_zero()) terms.push_back({perm, term});
  } while (std::next_permutation(perm.begin(), perm.end()));

  DetResult r;
  r.value = total;
  if (!total.is_zero())
    for (auto& t : terms)
      if (nu_matched(t.term, total)) r.attaining.push_back(std::move(t));
  std::sort(r.attaining.begin(), r.attaining.end(),
            [](const AttainingPerm& x, const AttainingPerm& y) { return x.perm < y.perm; });
  return r;
}

}  // namespace reference

Matrix minor_matrix(const Matrix& a, std::size_t i, std::size_t j) {
  require_square(a, "minor");
  const std::size_t n = a.rows();
  if (n == 0 || i >= n || j >= n) throw std::out_of_range("minor index");
  Matrix m(n - 1, n - 1);
  for (std::size_t r = 0, mr = 0; r < n; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, mc = 0; c < n; ++c) {
      if (c == j) continue;
      m.at(mr, mc) = a.at(r, c);
      ++mc;
    }
    ++mr;
  }
  return m;
}

Matrix adjoint(const Matrix& a, std::size_t cap) {
  require_square(a, "adjoint");
  const std::size_t n = a.rows();
  require_cap(n, cap);
  Matrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj.at(j, i) = determinant(minor_matrix(a, i, j), cap).value;
  return adj;
}

Matrix tangible_adjoint(const Matrix& a, std::size_t cap) { return retract(adjoint(a, cap)); }

namespace {

Scalar invertible_det(const Matrix& a, std::size_t cap) {
  const Scalar d = determinant(a, cap).value;
  if (!d.is_tangible())
    throw domain_error(errc::singular_matrix,
                       "determinant is " + d.token() + "; quasi-inverse needs a tangible one");
  return d;
}

}  // namespace

Matrix quasi_inverse(const Matrix& a, std::size_t cap) {
  return invertible_det(a, cap).inverse() * adjoint(a, cap);
}

Matrix tangible_quasi_inverse(const Matrix& a, std::size_t cap) {
  return invertible_det(a, cap).inverse() * tangible_adjoint(a, cap);
}

Matrix big_quasi_inverse(const Matrix& a, std::size_t cap) {
  const Matrix qi = quasi_inverse(a, cap);
  return qi * (a * qi);
}

QuasiIdentityPair quasi_identities(const Matrix& a, std::size_t cap) {
  const Matrix qi = quasi_inverse(a, cap);
  return {a * qi, qi * a};
}

bool is_quasi_identity(const Matrix& m, std::size_t cap) {
  if (!m.square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !(m.at(i, j) == Scalar::unit())) return false;
      if (i != j && !m.at(i, j).ghost_or_zero()) return false;
    }
  if (!(m * m == m)) return false;
  return determinant(m, cap).value.is_tangible();
}

}  // namespace supertrop

#include "regge/dense.hpp"

namespace regge {

Echelon rref(DenseMat a) {
  Echelon out;
  if (a.empty()) return out;
  const std::size_t m = a.size();
  const std::size_t n = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && sgn(a[piv][col]) == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[row][c];
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  a.resize(row);
  out.reduced = std::move(a);
  return out;
}

int dense_rank(const DenseMat& a) { return static_cast<int>(rref(a).pivots.size()); }

std::optional<DenseVec> dense_solve(const DenseMat& a, const DenseVec& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  DenseMat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Echelon e = rref(std::move(aug));
  DenseVec x(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const auto p = static_cast<std::size_t>(e.pivots[i]);
    if (p == n) return std::nullopt;
    x[p] = e.reduced[i][n];
  }
  return x;
}

std::vector<DenseVec> dense_nullspace(const DenseMat& a, int ncols) {
  const auto n = static_cast<std::size_t>(ncols);
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<DenseVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    DenseVec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[static_cast<std::size_t>(e.pivots[i])] = -e.reduced[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

DenseVec dense_apply(const DenseMat& a, const DenseVec& x) {
  DenseVec y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(a[i][j]) != 0 && sgn(x[j]) != 0) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace regge

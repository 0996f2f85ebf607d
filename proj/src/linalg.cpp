#include "qshapo/linalg.hpp"

#include <stdexcept>

namespace qshapo {

namespace {

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(MatrixQ& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    RatQ inv = m[row][col].inverse();
    for (auto& x : m[row])
      if (!x.is_zero()) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      RatQ f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c)
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<MatrixQ> invert(const MatrixQ& a) {
  std::size_t n = a.size();
  MatrixQ m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("invert: matrix is not square");
    m[i] = a[i];
    m[i].resize(2 * n);
    m[i][n + i] = RatQ(1);
  }
  auto piv = rref(m, n);
  if (piv.size() != n) return std::nullopt;
  MatrixQ inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(m[i].begin() + n, m[i].end());
  return inv;
}

std::optional<std::vector<RatQ>> solve(const MatrixQ& a, const std::vector<RatQ>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  std::size_t ncols = a.empty() ? 0 : a[0].size();
  MatrixQ m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  auto piv = rref(m, ncols);
  for (std::size_t r = piv.size(); r < m.size(); ++r)
    if (!m[r][ncols].is_zero()) return std::nullopt;
  std::vector<RatQ> x(ncols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][ncols];
  return x;
}

}  // namespace qshapo

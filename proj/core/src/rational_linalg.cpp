#include "lie_euler/rational_linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace lie_euler {

RatMat identity_mat(int n) {
  RatMat m(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.empty()) {
    for (const auto& v : b) {
      if (v != 0) return std::nullopt;
    }
    return RatVec{};
  }
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  assert(b.size() == rows);
  RatMat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[static_cast<std::size_t>(pivots[r])] = aug[r][cols];
  }
  return x;
}

std::vector<RatVec> nullspace(const RatMat& a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  RatMat m = a;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -m[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RatMat m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

std::vector<RatVec> row_space(RatMat m) {
  std::vector<int> pivots = rref(m);
  m.resize(pivots.size());
  return m;
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  if (basis.empty()) {
    for (const auto& x : v) {
      if (x != 0) return false;
    }
    return true;
  }
  RatMat m = basis;
  m.push_back(v);
  return rank(m) == rank(basis);
}

}  // namespace lie_euler

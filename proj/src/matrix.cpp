#include "fcy/matrix.hpp"

#include <algorithm>

namespace fcy {

QMat to_rational(const IMat& m) {
  QMat r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

std::optional<IMat> to_integer(const QMat& m) {
  IMat r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1) return std::nullopt;
      r(i, j) = numerator(m(i, j));
    }
  return r;
}

std::vector<size_t> rref(QMat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    Rat inv = Rat(1) / m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(QMat m) { return rref(m).size(); }

QMat nullspace(const QMat& m) {
  QMat r = m;
  std::vector<size_t> pivots = rref(r);
  std::vector<size_t> free_cols;
  {
    size_t p = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
      if (p < pivots.size() && pivots[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  QMat basis(m.cols(), free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (size_t p = 0; p < pivots.size(); ++p) basis(pivots[p], k) = -r(p, fc);
  }
  return basis;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<size_t> pivots = rref(aug);
  // all pivots must land in the left block
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  QMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rat determinant(QMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = m.rows();
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    Rat inv = Rat(1) / m(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) * inv;
      for (size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<QMat> solve(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  QMat aug(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  std::vector<size_t> pivots = rref(aug);
  for (size_t p : pivots)
    if (p >= a.cols()) return std::nullopt;  // inconsistent system
  if (pivots.size() != a.cols())
    throw std::invalid_argument("solve requires full column rank");
  QMat x(a.cols(), b.cols());
  for (size_t p = 0; p < pivots.size(); ++p)
    for (size_t j = 0; j < b.cols(); ++j) x(pivots[p], j) = aug(p, a.cols() + j);
  return x;
}

QMat column_space_basis(const QMat& m) {
  QMat r = m;
  std::vector<size_t> pivots = rref(r);
  QMat basis(m.rows(), pivots.size());
  for (size_t k = 0; k < pivots.size(); ++k)
    for (size_t i = 0; i < m.rows(); ++i) basis(i, k) = m(i, pivots[k]);
  return basis;
}

IMat integer_kernel(const IMat& m) {
  size_t rows = m.rows(), n = m.cols();
  IMat w = m;
  IMat u = IMat::identity(n);

  auto col_sub = [&](size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < rows; ++i) w(i, dst) -= q * w(i, src);
    for (size_t i = 0; i < n; ++i) u(i, dst) -= q * u(i, src);
  };
  auto col_swap = [&](size_t c1, size_t c2) {
    if (c1 == c2) return;
    for (size_t i = 0; i < rows; ++i) std::swap(w(i, c1), w(i, c2));
    for (size_t i = 0; i < n; ++i) std::swap(u(i, c1), u(i, c2));
  };

  size_t col = 0;
  for (size_t r = 0; r < rows && col < n; ++r) {
    // Euclidean reduction across columns col..n-1 in row r until at most
    // one nonzero entry survives.
    while (true) {
      size_t best = n;
      for (size_t c = col; c < n; ++c) {
        if (w(r, c) == 0) continue;
        if (best == n || abs(w(r, c)) < abs(w(r, best))) best = c;
      }
      if (best == n) break;  // row is zero beyond col
      bool others = false;
      for (size_t c = col; c < n; ++c) {
        if (c == best || w(r, c) == 0) continue;
        col_sub(c, best, w(r, c) / w(r, best));
        if (w(r, c) != 0) others = true;
      }
      if (!others) {
        col_swap(col, best);
        ++col;
        break;
      }
    }
  }

  IMat basis(n, n - col);
  for (size_t k = 0; k < n - col; ++k)
    for (size_t i = 0; i < n; ++i) basis(i, k) = u(i, col + k);
  return basis;
}

}  // namespace fcy

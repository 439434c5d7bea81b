#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fcy/arith.hpp"

namespace fcy {

// Dense row-major matrix over an exact scalar.  Shapes with zero rows or
// columns are legal; they show up constantly as Hom spaces of simples.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}
  Mat(size_t r, size_t c, std::initializer_list<T> vals) : rows_(r), cols_(c), a_(vals) {
    if (a_.size() != r * c) throw std::invalid_argument("matrix literal size mismatch");
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<T> r(rows_);
    for (size_t i = 0; i < rows_; ++i) {
      T s = 0;
      for (size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
      r[i] = std::move(s);
    }
    return r;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  std::vector<T> column(size_t j) const {
    std::vector<T> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  size_t rows_, cols_;
  std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

QMat to_rational(const IMat& m);
// fails if any entry has a denominator
std::optional<IMat> to_integer(const QMat& m);

template <typename T>
Mat<T> mat_pow(const Mat<T>& m, unsigned long k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power of non-square matrix");
  Mat<T> acc = Mat<T>::identity(m.rows());
  Mat<T> base = m;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<size_t> rref(QMat& m);

size_t rank(QMat m);

// Columns form a basis of {x : m x = 0}.
QMat nullspace(const QMat& m);

std::optional<QMat> inverse(const QMat& m);

Rat determinant(QMat m);

// Solves a x = b columnwise for full-column-rank a; nullopt when some
// column of b is outside the column span.
std::optional<QMat> solve(const QMat& a, const QMat& b);

// Column space basis of m (a selection of columns of m).
QMat column_space_basis(const QMat& m);

// Z-basis of the integer kernel {x in Z^n : m x = 0}, computed by
// unimodular column reduction of m while mirroring the operations on an
// identity block.  Columns of the result are the basis.
IMat integer_kernel(const IMat& m);

}  // namespace fcy

#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "geomcrystal/laurent.hpp"
#include "geomcrystal/rational.hpp"

namespace geomcrystal {

// Dense row-major matrix, 0-based indexing.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a)
      for (std::size_t b = 0; b < col_idx.size(); ++b) s(a, b) = (*this)(row_idx[a], col_idx[b]);
    return s;
  }

  Matrix first_columns(std::size_t k) const {
    Matrix s(rows_, k);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < k; ++j) s(i, j) = (*this)(i, j);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using LaurentMatrix = Matrix<LaurentPoly>;

// Determinant by Laplace expansion along rows, memoized on column subsets.
// Exact over any commutative ring; intended for n <= 10.
template <class T>
T laplace_determinant(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return T(1);
  // memo[mask] = det of rows [n - popcount(mask), n) and columns in mask
  std::unordered_map<unsigned, T> memo;
  for (std::size_t j = 0; j < n; ++j) memo.emplace(1u << j, m(n - 1, j));
  for (std::size_t size = 2; size <= n; ++size) {
    std::unordered_map<unsigned, T> next;
    const std::size_t row = n - size;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      T acc(0);
      int sign = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        const T& a = m(row, j);
        if (!(a == T(0))) {
          const T& minor = memo.at(mask & ~(1u << j));
          if (sign > 0) acc += a * minor;
          else acc -= a * minor;
        }
        sign = -sign;
      }
      next.emplace(mask, acc);
    }
    memo = std::move(next);
  }
  return memo.at((1u << n) - 1);
}

Rat determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);
// Basis of {v : m v = 0} as columns.
RatMatrix nullspace(const RatMatrix& m);
LaurentPoly determinant(const LaurentMatrix& m);
LaurentMatrix adjugate(const LaurentMatrix& m);
RatMatrix evaluate(const LaurentMatrix& m, const Rat& x);

}  // namespace geomcrystal

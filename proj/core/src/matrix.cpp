#include "geomcrystal/matrix.hpp"

#include <utility>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

Rat determinant(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = m;
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rat f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

// Bareiss fraction-free elimination.
std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Rat prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw DomainError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    Rat piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rat f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rat piv = a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, p = 0; c < cols; ++c) {
    if (p < pivots.size() && pivots[p] == c) ++p;
    else free_cols.push_back(c);
  }
  RatMatrix basis(cols, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], f) = -a(i, free_cols[f]);
  }
  return basis;
}

LaurentPoly determinant(const LaurentMatrix& m) { return laplace_determinant(m); }

LaurentMatrix adjugate(const LaurentMatrix& m) {
  const std::size_t n = m.rows();
  LaurentMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = LaurentPoly(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t a = 0; a < n; ++a)
        if (a != j) rs.push_back(a);
      for (std::size_t b = 0; b < n; ++b)
        if (b != i) cs.push_back(b);
      LaurentPoly minor = laplace_determinant(m.select(rs, cs));
      adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return adj;
}

RatMatrix evaluate(const LaurentMatrix& m, const Rat& x) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(x);
  return out;
}

}  // namespace geomcrystal

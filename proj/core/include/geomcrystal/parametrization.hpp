#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "geomcrystal/expr.hpp"
#include "geomcrystal/grassmannian.hpp"
#include "geomcrystal/network.hpp"
#include "geomcrystal/random.hpp"

namespace geomcrystal {

// Values X_{ij} on R_rows = {1 <= i <= rows, i <= j <= i+n-rows-1} together with t.
// Boundary conventions: X_{i,i-1} = 1 and X_{i,i+n-rows} = t.
template <class V>
struct Rectangle {
  int n = 0;
  int rows = 0;
  std::vector<V> X;  // row-major over R_rows
  V t;

  int width() const { return n - rows; }
  bool contains(int i, int j) const { return i >= 1 && i <= rows && j >= i && j <= i + width() - 1; }
  std::size_t index(int i, int j) const {
    if (!contains(i, j)) throw std::out_of_range("cell outside the rectangle");
    return static_cast<std::size_t>((i - 1) * width() + (j - i));
  }
  const V& at(int i, int j) const { return X[index(i, j)]; }
  V& at(int i, int j) { return X[index(i, j)]; }
};

using RationalRectangle = Rectangle<Rat>;

RationalRectangle random_rectangle(Rng& rng, int n, int rows);

// Elementary factors of GL_n.
RatMatrix x_minus(int n, int i, const Rat& c);
RatMatrix torus_factor(int n, int i, const Rat& c);
// M_{[i,j]}(c_i, ..., c_j) = x_{-i}(c_i) ... x_{-(j-1)}(c_{j-1}) t_j(c_j).
RatMatrix chain_factor(int n, int i, const std::vector<Rat>& c);

// Full n x n matrix Phi(X, t) for a rectangle with `rows` rows.
RatMatrix phi_matrix(const RationalRectangle& x);
// Column span of the first n-rows columns of phi_matrix, as a point of Gr(n-rows, n).
CrystalPoint theta(const RationalRectangle& x);
// Inverse chart; the point must have nonvanishing basic Pluecker coordinates.
RationalRectangle theta_inverse(const CrystalPoint& p);

// J_{i,j} = [i, j] u [n-k+j-i+2, n] in Gr(k, n).
Subset basic_subset(int n, int k, int i, int j);

// Sinks at (0, j); sources on the left edge and bottom edge; vertical edges of weight 1
// and diagonal edges weighted by x_{ij}. x is consulted for x_{i, i+c-1}.
PlanarNetwork standard_network(int n, int k, const RationalRectangle* x);

// Filling of the shifted shape D_{J,k}; cells are (row a, column b, value).
struct JTableau {
  struct Cell {
    int a, b, value;
  };
  std::vector<Cell> cells;
  // (i, j) pairs whose x_{ij} form the weight.
  std::vector<std::pair<int, int>> weight_indices() const;
};

std::vector<JTableau> j_tableaux(int n, int k, const Subset& J);

// P_J(Theta(X)) as a sum of J-tableau weights; nullopt when there are no tableaux.
template <class V>
std::optional<V> plucker_via_jtableaux(const Rectangle<V>& x, const Subset& J, const V& one) {
  const int k = x.n - x.rows;
  auto xx = [&](int i, int j) -> V { return j == i ? x.at(i, i) : V(x.at(i, j) / x.at(i, j - 1)); };
  std::optional<V> total;
  for (const auto& tab : j_tableaux(x.n, k, J)) {
    auto idx = tab.weight_indices();
    V w = idx.empty() ? one : xx(idx[0].first, idx[0].second);
    for (std::size_t m = 1; m < idx.size(); ++m) w = w * xx(idx[m].first, idx[m].second);
    total = total ? V(*total + w) : w;
  }
  return total;
}

Rat plucker_via_jtableaux(const RationalRectangle& x, const Subset& J);

// Representative whose first k rows are lower triangular with nonzero diagonal and
// whose last k rows are upper unitriangular. Needs nonvanishing cyclic Plueckers.
RatMatrix diagonal_form(const GrassmannPoint& p);

// Birational lift of the Bender-Knuth move on GT row r, r in [1, n-1].
template <class V>
Rectangle<V> geometric_bk(const Rectangle<V>& x, int r) {
  const int n = x.n, k = x.rows;
  Rectangle<V> y = x;
  for (int i = 1; i <= k; ++i) {
    if (!x.contains(i, r)) continue;
    V f = (i != 1 && r != n - k - 1 + i) ? V(x.at(i - 1, r - 1) + x.at(i, r + 1))
          : (i != 1)                     ? x.at(i - 1, r - 1)
          : (r != n - k)                 ? x.at(1, r + 1)
                                         : x.t;
    std::optional<V> g;
    if (i != k && r != i) g = V(x.at(i, r - 1) * x.at(i + 1, r + 1) / (x.at(i, r - 1) + x.at(i + 1, r + 1)));
    else if (i != k) g = x.at(i + 1, r + 1);
    else if (r != k) g = x.at(k, r - 1);
    y.at(i, r) = g ? V(f * *g / x.at(i, r)) : V(f / x.at(i, r));
  }
  return y;
}

// sigma_1 o ... o sigma_{n-1}, so sigma_{n-1} acts first.
template <class V>
Rectangle<V> geometric_pr(const Rectangle<V>& x) {
  Rectangle<V> y = x;
  for (int r = x.n - 1; r >= 1; --r) y = geometric_bk(y, r);
  return y;
}

// Variables X_i_j and t of the chart with `rows` rows.
Rectangle<Expr> symbolic_rectangle(ExprPool& pool, int n, int rows);
std::string rect_var(int i, int j);

}  // namespace geomcrystal

#include "geomcrystal/parametrization.hpp"

#include <map>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

RationalRectangle random_rectangle(Rng& rng, int n, int rows) {
  RationalRectangle x;
  x.n = n;
  x.rows = rows;
  for (int i = 0; i < rows * (n - rows); ++i) x.X.emplace_back(rng.uniform(1, 9));
  x.t = rng.uniform(1, 9);
  return x;
}

RatMatrix x_minus(int n, int i, const Rat& c) {
  RatMatrix m = RatMatrix::identity(n);
  m(i - 1, i - 1) = c;
  m(i, i) = 1 / c;
  m(i, i - 1) = 1;
  return m;
}

RatMatrix torus_factor(int n, int i, const Rat& c) {
  RatMatrix m = RatMatrix::identity(n);
  m(i - 1, i - 1) = c;
  return m;
}

RatMatrix chain_factor(int n, int i, const std::vector<Rat>& c) {
  const int j = i + static_cast<int>(c.size()) - 1;
  RatMatrix m = RatMatrix::identity(n);
  for (int a = i; a < j; ++a) m = m * x_minus(n, a, c[a - i]);
  return m * torus_factor(n, j, c.back());
}

RatMatrix phi_matrix(const RationalRectangle& x) {
  const int n = x.n, k = x.width();
  RatMatrix m = RatMatrix::identity(n);
  for (int i = x.rows; i >= 1; --i) {
    std::vector<Rat> c;
    for (int j = i; j <= i + k - 1; ++j) c.push_back(x.at(i, j));
    c.push_back(x.t);
    m = m * chain_factor(n, i, c);
  }
  return m;
}

CrystalPoint theta(const RationalRectangle& x) {
  return {GrassmannPoint(phi_matrix(x).first_columns(x.width())), x.t};
}

Subset basic_subset(int n, int k, int i, int j) { return join(interval(i, j), interval(n - k + j - i + 2, n)); }

RationalRectangle theta_inverse(const CrystalPoint& p) {
  const int n = p.M.n(), k = p.M.k();
  RationalRectangle x;
  x.n = n;
  x.rows = n - k;
  x.t = p.t;
  for (int i = 1; i <= n - k; ++i)
    for (int j = i; j <= i + k - 1; ++j) {
      Rat den = p.M.plucker(basic_subset(n, k, i + 1, j));
      if (den == 0) throw UndefinedPoint("basic Pluecker coordinate vanishes");
      x.X.push_back(p.M.plucker(basic_subset(n, k, i, j)) / den);
    }
  return x;
}

PlanarNetwork standard_network(int n, int k, const RationalRectangle* x) {
  PlanarNetwork net;
  std::map<std::pair<int, int>, int> vid;
  auto vertex = [&](int r, int c) {
    auto it = vid.find({r, c});
    if (it != vid.end()) return it->second;
    int v = net.add_vertex(r, c, "v" + std::to_string(r) + "_" + std::to_string(c));
    vid.emplace(std::make_pair(r, c), v);
    return v;
  };
  std::vector<int> sources, sinks;
  for (int i = 1; i <= n; ++i) sources.push_back(i <= n - k ? vertex(i, 0) : vertex(n - k, i - n + k));
  for (int j = 1; j <= k; ++j) sinks.push_back(vertex(0, j));
  for (int c = 1; c <= k; ++c)
    for (int r = 1; r <= n - k; ++r) {
      int i = r, j = r + c - 1;
      Rat w = 1;
      if (x) w = j == i ? x->at(i, i) : Rat(x->at(i, j) / x->at(i, j - 1));
      net.add_edge(vertex(r, c - 1), vertex(r - 1, c), w, "x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      net.add_edge(vertex(r, c), vertex(r - 1, c), Rat(1));
    }
  net.set_sources(sources);
  net.set_sinks(sinks);
  return net;
}

std::vector<std::pair<int, int>> JTableau::weight_indices() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : cells) out.emplace_back(c.value, c.value + c.b - c.a);
  return out;
}

std::vector<JTableau> j_tableaux(int n, int k, const Subset& J) {
  if (static_cast<int>(J.size()) != k) throw InvariantViolation("J must have k elements");
  const int m = n - k;
  std::vector<int> len(k + 1, 0);
  for (int r = 1; r <= k; ++r) len[r] = r - std::max(0, J[r - 1] - m);
  // cells in column-major order, top to bottom
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= k; ++r)
    for (int a = 1; a <= len[r]; ++a) cells.emplace_back(a, r);
  std::map<std::pair<int, int>, int> value;
  std::vector<JTableau> out;
  auto fill = [&](auto&& self, std::size_t pos) -> void {
    if (pos == cells.size()) {
      JTableau t;
      for (auto [a, b] : cells) t.cells.push_back({a, b, value.at({a, b})});
      out.push_back(std::move(t));
      return;
    }
    auto [a, b] = cells[pos];
    int lo = 1, hi = m;
    if (auto it = value.find({a, b - 1}); it != value.end()) lo = std::max(lo, it->second);
    if (auto it = value.find({a - 1, b}); it != value.end()) lo = std::max(lo, it->second + 1);
    if (a == b) lo = hi = J[a - 1];
    for (int v = lo; v <= hi; ++v) {
      if (a == b && (v < 1 || v > m)) break;
      if (auto it = value.find({a, b - 1}); it != value.end() && v < it->second) continue;
      if (auto it = value.find({a - 1, b}); it != value.end() && v <= it->second) continue;
      value[{a, b}] = v;
      self(self, pos + 1);
      value.erase({a, b});
    }
  };
  fill(fill, 0);
  return out;
}

Rat plucker_via_jtableaux(const RationalRectangle& x, const Subset& J) {
  auto v = plucker_via_jtableaux<Rat>(x, J, Rat(1));
  return v ? *v : Rat(0);
}

RatMatrix diagonal_form(const GrassmannPoint& p) {
  const int n = p.n(), k = p.k();
  RatMatrix m(n, k);
  for (int j = 1; j <= k; ++j) {
    Rat den = p.plucker(interval(j - k, j - 1));
    if (den == 0) throw UndefinedPoint("cyclic Pluecker coordinate vanishes");
    for (int i = j; i <= j + n - k; ++i) m(i - 1, j - 1) = p.plucker(join(interval(j - k + 1, j - 1), {i})) / den;
  }
  return m;
}

std::string rect_var(int i, int j) { return "X_" + std::to_string(i) + "_" + std::to_string(j); }

Rectangle<Expr> symbolic_rectangle(ExprPool& pool, int n, int rows) {
  Rectangle<Expr> x;
  x.n = n;
  x.rows = rows;
  for (int i = 1; i <= rows; ++i)
    for (int j = i; j <= i + n - rows - 1; ++j) x.X.push_back(pool.var(rect_var(i, j)));
  x.t = pool.var("t");
  return x;
}

}  // namespace geomcrystal

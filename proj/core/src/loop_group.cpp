#include "geomcrystal/loop_group.hpp"

#include <algorithm>
#include <limits>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// (index in [1, n], block) with I = block * n + index
std::pair<int, long> split(long I, int n) {
  long r = floor_div(I - 1, n);
  return {static_cast<int>(I - r * n), r};
}

int degree_span(const LaurentMatrix& a, bool low) {
  int best = 0;
  bool first = true;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto d = low ? a(i, j).low_degree() : a(i, j).high_degree();
      if (!d) continue;
      if (first || (low ? *d < best : *d > best)) best = *d;
      first = false;
    }
  return best;
}

Rat ratio(const Rat& num, const Rat& den) {
  if (den == 0) throw UndefinedPoint("vanishing Pluecker denominator");
  return num / den;
}

}  // namespace

LaurentPoly lambda_poly() { return LaurentPoly::variable(); }

Rat unfolded_entry(const LaurentMatrix& a, long I, long J) {
  const int n = static_cast<int>(a.rows());
  auto [i, r] = split(I, n);
  auto [j, s] = split(J, n);
  return a(i - 1, j - 1).coeff(static_cast<int>(r - s));
}

Rat PeriodicMatrix::at(long I, long J) const {
  auto [i, r] = split(I, n);
  auto it = entries.find({i, J - r * n});
  return it == entries.end() ? Rat(0) : it->second;
}

PeriodicMatrix unfold(const LaurentMatrix& a) {
  PeriodicMatrix x;
  x.n = static_cast<int>(a.rows());
  for (int i = 1; i <= x.n; ++i)
    for (int j = 1; j <= x.n; ++j)
      for (const auto& [e, c] : a(i - 1, j - 1).terms()) x.entries.emplace(std::make_pair(i, -static_cast<long>(e) * x.n + j), c);
  return x;
}

LaurentMatrix fold(const PeriodicMatrix& x) {
  LaurentMatrix a(x.n, x.n);
  for (const auto& [pos, c] : x.entries) {
    auto [j, s] = split(pos.second, x.n);
    a(pos.first - 1, j - 1) += LaurentPoly::monomial(c, static_cast<int>(-s));
  }
  return a;
}

PeriodicMatrix operator*(const PeriodicMatrix& x, const PeriodicMatrix& y) {
  if (x.n != y.n) throw InvariantViolation("period mismatch");
  PeriodicMatrix z;
  z.n = x.n;
  for (const auto& [pos, a] : x.entries) {
    auto [l, r] = split(pos.second, x.n);
    for (auto it = y.entries.lower_bound({l, std::numeric_limits<long>::min()});
         it != y.entries.end() && it->first.first == l; ++it) {
      auto key = std::make_pair(pos.first, it->first.second + r * x.n);
      Rat v = z.entries[key] + a * it->second;
      if (v == 0) z.entries.erase(key);
      else z.entries[key] = v;
    }
  }
  return z;
}

bool in_lower_borel(const LaurentMatrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = a(i, j);
      if (auto lo = p.low_degree(); lo && *lo < 0) return false;
      if (i == j && p.coeff(0) == 0) return false;
      if (i < j && p.coeff(0) != 0) return false;
    }
  return true;
}

bool is_shifted_unipotent(const LaurentMatrix& a, int l) {
  const int n = static_cast<int>(a.rows());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& [e, c] : a(i - 1, j - 1).terms()) {
        long J = -static_cast<long>(e) * n + j;
        if (i - J > l) return false;
      }
  for (int i = 1; i <= n; ++i)
    if (unfolded_entry(a, i, i - l) != 1) return false;
  return true;
}

Rat chi(const LaurentMatrix& a, int l) {
  const int n = static_cast<int>(a.rows());
  Rat s = 0;
  for (int j = 1; j <= n; ++j) s += unfolded_entry(a, j + l - 1, j);
  return s;
}

LaurentMatrix shift(const LaurentMatrix& a) {
  const int n = static_cast<int>(a.rows());
  const int lo = degree_span(a, true) - 1, hi = degree_span(a, false) + 1;
  LaurentMatrix out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int m = lo; m <= hi; ++m)
        out(i - 1, j - 1) += LaurentPoly::monomial(unfolded_entry(a, static_cast<long>(m) * n + i - 1, j - 1), m);
  return out;
}

LaurentMatrix x_hat(int n, int i, const Rat& a) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  int r = reduce_index(i, n);
  if (r == n) m(n - 1, 0) += LaurentPoly::monomial(a, -1);
  else m(r - 1, r) += LaurentPoly(a);
  return m;
}

LaurentMatrix u_action(int i, const Rat& a, const LaurentMatrix& x) {
  const int n = static_cast<int>(x.rows());
  const long r = reduce_index(i, n);
  Rat den = unfolded_entry(x, r, r) + a * unfolded_entry(x, r + 1, r);
  if (den == 0) throw UndefinedPoint("action leaves the lower Borel");
  Rat tau = -a * unfolded_entry(x, r + 1, r + 1) / den;
  return x_hat(n, i, a) * x * x_hat(n, i, tau);
}

CrystalPoint u_action(int i, const Rat& a, const CrystalPoint& p) {
  const int n = p.M.n(), k = p.M.k();
  RatMatrix u = evaluate(x_hat(n, i, a), p.t * sign_pow(k - 1));
  return {GrassmannPoint(u * p.M.matrix()), p.t};
}

Rat induced_gamma(const LaurentMatrix& x, int i) {
  long r = reduce_index(i, static_cast<int>(x.rows()));
  return unfolded_entry(x, r, r);
}

Rat induced_phi(const LaurentMatrix& x, int i) {
  long r = reduce_index(i, static_cast<int>(x.rows()));
  return ratio(unfolded_entry(x, r + 1, r), unfolded_entry(x, r, r));
}

Rat induced_epsilon(const LaurentMatrix& x, int i) {
  long r = reduce_index(i, static_cast<int>(x.rows()));
  return ratio(unfolded_entry(x, r + 1, r), unfolded_entry(x, r + 1, r + 1));
}

LaurentMatrix induced_e(const LaurentMatrix& x, int i, const Rat& c) {
  Rat ph = induced_phi(x, i);
  if (ph == 0) throw UndefinedPoint("phi vanishes");
  return u_action(i, (c - 1) / ph, x);
}

LaurentMatrix g_matrix(const CrystalPoint& p) {
  const int n = p.M.n(), k = p.M.k();
  LaurentMatrix a(n, n);
  for (int j = 1; j <= n; ++j) {
    Rat den = p.M.plucker(interval(j - k, j - 1));
    for (int i = 1; i <= n; ++i) {
      Rat v = ratio(p.M.plucker(join(interval(j - k + 1, j - 1), {i})), den);
      if (j <= k) a(i - 1, j - 1) = LaurentPoly(v);
      else if (i >= j) a(i - 1, j - 1) = LaurentPoly(Rat(v * p.t));
      else a(i - 1, j - 1) = LaurentPoly::monomial(v, 1);
    }
  }
  return a;
}

LaurentMatrix h_matrix(const CrystalPoint& p) {
  const int n = p.M.n(), k = p.M.k();
  LaurentMatrix b(n, n);
  for (int i = 1; i <= n; ++i) {
    Rat den = p.M.plucker(interval(i - k + 1, i));
    Subset window = interval(i - k, i);
    for (int j = 1; j <= n; ++j) {
      Subset rest;
      bool removed = false;
      for (int x : window) {
        if (!removed && reduce_index(x, n) == j) removed = true;
        else rest.push_back(x);
      }
      Rat v = removed ? ratio(p.M.plucker(rest), den) : Rat(0);
      v *= sign_pow(i + j);
      if (i > k) b(i - 1, j - 1) = LaurentPoly(v);
      else if (i >= j) b(i - 1, j - 1) = LaurentPoly(Rat(v * p.t));
      else b(i - 1, j - 1) = LaurentPoly::monomial(v * sign_pow(n), 1);
    }
  }
  return b;
}

LaurentMatrix sign_twist(const LaurentMatrix& a) {
  const std::size_t n = a.rows();
  LaurentMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly v = a(i, j).scale_variable(Rat(sign_pow(static_cast<long>(n))));
      out(i, j) = (i + j) % 2 ? -v : v;
    }
  return out;
}

LaurentMatrix loop_inverse(const LaurentMatrix& a) { return sign_twist(adjugate(a)); }

LaurentMatrix flip(const LaurentMatrix& a) {
  const std::size_t n = a.rows();
  LaurentMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(n - 1 - j, n - 1 - i);
  return out;
}

GrassmannPoint perp(const GrassmannPoint& m) {
  const int n = m.n(), k = m.k();
  RatMatrix form_t(k, n);  // (D M)^T
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < k; ++j) form_t(j, r) = m.matrix()(r, j) * sign_pow(r);
  return GrassmannPoint(nullspace(form_t));
}

GrassmannPoint reverse_rows(const GrassmannPoint& m) {
  const int n = m.n(), k = m.k();
  RatMatrix out(n, k);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < k; ++j) out(r, j) = m.matrix()(n - 1 - r, j);
  return GrassmannPoint(std::move(out));
}

CrystalPoint schutzenberger(const CrystalPoint& p) {
  const int k = p.M.k();
  RatMatrix m = evaluate(flip(g_matrix(p)), p.t * sign_pow(k - 1));
  return {GrassmannPoint(m.first_columns(k)), p.t};
}

CrystalPoint duality(const CrystalPoint& p) { return schutzenberger({reverse_rows(perp(p.M)), p.t}); }

}  // namespace geomcrystal

#include "geomcrystal/grassmannian.hpp"

#include <algorithm>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

Subset interval(int a, int b) {
  Subset s;
  for (int x = a; x <= b; ++x) s.push_back(x);
  return s;
}

Subset join(Subset a, const Subset& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int reduce_index(int i, int n) { return ((i - 1) % n + n) % n + 1; }

std::vector<Subset> GrassmannPoint::subsets(int n, int k) {
  std::vector<Subset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Subset s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

GrassmannPoint::GrassmannPoint(RatMatrix m) : m_(std::move(m)) {
  const int n = this->n(), k = this->k();
  if (k < 1 || k > n || n > 20) throw InvariantViolation("need 1 <= k <= n <= 20");
  slot_.assign(1u << n, -1);
  bool nonzero = false;
  for (const auto& s : subsets(n, k)) {
    unsigned mask = 0;
    std::vector<std::size_t> rows;
    for (int x : s) {
      mask |= 1u << (x - 1);
      rows.push_back(x - 1);
    }
    std::vector<std::size_t> cols;
    for (int j = 0; j < k; ++j) cols.push_back(j);
    slot_[mask] = static_cast<int>(table_.size());
    table_.push_back(determinant(m_.select(rows, cols)));
    nonzero = nonzero || table_.back() != 0;
  }
  if (!nonzero) throw InvariantViolation("matrix does not have full column rank");
}

Rat GrassmannPoint::plucker(const Subset& idx) const {
  unsigned mask = 0;
  for (int x : idx) mask |= 1u << (reduce_index(x, n()) - 1);
  if (__builtin_popcount(mask) != k() || static_cast<int>(idx.size()) != k()) return 0;
  return table_[slot_[mask]];
}

Rat GrassmannPoint::plucker_ordered(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != k()) return 0;
  std::vector<int> r;
  for (int x : idx) r.push_back(reduce_index(x, n()));
  int inversions = 0;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = a + 1; b < r.size(); ++b) {
      if (r[a] == r[b]) return 0;
      inversions += r[a] > r[b];
    }
  Rat v = plucker(r);
  return inversions % 2 ? Rat(-v) : v;
}

bool projectively_equal(const GrassmannPoint& a, const GrassmannPoint& b) {
  if (a.n() != b.n() || a.k() != b.k()) return false;
  const auto& pa = a.plucker_table();
  const auto& pb = b.plucker_table();
  std::size_t ref = 0;
  while (ref < pa.size() && pa[ref] == 0) ++ref;
  if (pb[ref] == 0) return false;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa[i] * pb[ref] != pb[i] * pa[ref]) return false;
  return true;
}

bool equivalent(const CrystalPoint& a, const CrystalPoint& b) { return a.t == b.t && projectively_equal(a.M, b.M); }

namespace {

Rat ratio(const Rat& num, const Rat& den, const char* what) {
  if (den == 0) throw UndefinedPoint(std::string("vanishing denominator in ") + what);
  return num / den;
}

bool same_class(int i, int j, int n) { return reduce_index(i, n) == reduce_index(j, n); }

}  // namespace

Rat gamma(const CrystalPoint& p, int i) {
  const int n = p.M.n(), k = p.M.k();
  int r = reduce_index(i, n);
  Rat v = ratio(p.M.plucker(interval(r - k + 1, r)), p.M.plucker(interval(r - k, r - 1)), "gamma");
  return r > k ? Rat(v * p.t) : v;
}

std::vector<Rat> gamma_vector(const CrystalPoint& p) {
  std::vector<Rat> g;
  for (int i = 1; i <= p.M.n(); ++i) g.push_back(gamma(p, i));
  return g;
}

Rat phi(const CrystalPoint& p, int i) {
  const int n = p.M.n(), k = p.M.k();
  Rat v = ratio(p.M.plucker(join(interval(i - k + 1, i - 1), {i + 1})), p.M.plucker(interval(i - k + 1, i)), "phi");
  return same_class(i, 0, n) ? Rat(v / p.t) : v;
}

Rat epsilon(const CrystalPoint& p, int i) {
  const int n = p.M.n(), k = p.M.k();
  Rat num = p.M.plucker(join(interval(i - k + 1, i - 1), {i + 1})) * p.M.plucker(interval(i - k + 1, i));
  Rat den = p.M.plucker(interval(i - k, i - 1)) * p.M.plucker(interval(i - k + 2, i + 1));
  Rat v = ratio(num, den, "epsilon");
  return same_class(i, k, n) ? Rat(v / p.t) : v;
}

Rat decoration(const CrystalPoint& p) {
  const int n = p.M.n(), k = p.M.k();
  Rat f = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    f += ratio(p.M.plucker(join({i - k}, interval(i - k + 2, i))), p.M.plucker(interval(i - k + 1, i)), "decoration");
  }
  f += p.t * ratio(p.M.plucker(join(interval(2, k), {n})), p.M.plucker(interval(1, k)), "decoration");
  return f;
}

CrystalPoint apply_e(const CrystalPoint& p, int i, const Rat& c) {
  const int n = p.M.n(), k = p.M.k();
  Rat ph = phi(p, i);
  if (ph == 0) throw UndefinedPoint("phi vanishes");
  Rat a = (c - 1) / ph;
  RatMatrix m = p.M.matrix();
  int r = reduce_index(i, n);
  if (r == n) {
    // x_0 adds a multiple of the first row to the last row
    Rat b = a * sign_pow(k - 1) / p.t;
    for (int j = 0; j < k; ++j) m(n - 1, j) += b * m(0, j);
  } else {
    for (int j = 0; j < k; ++j) m(r - 1, j) += a * m(r, j);
  }
  return {GrassmannPoint(std::move(m)), p.t};
}

CrystalPoint cyclic_shift(const CrystalPoint& p) {
  const int n = p.M.n(), k = p.M.k();
  const RatMatrix& m = p.M.matrix();
  RatMatrix out(n, k);
  Rat s = p.t * sign_pow(k - 1);
  for (int j = 0; j < k; ++j) out(0, j) = s * m(n - 1, j);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = m(i - 1, j);
  return {GrassmannPoint(std::move(out)), p.t};
}

CrystalPoint cyclic_shift_inverse(const CrystalPoint& p) {
  const int n = p.M.n(), k = p.M.k();
  const RatMatrix& m = p.M.matrix();
  RatMatrix out(n, k);
  Rat s = Rat(sign_pow(k - 1)) / p.t;
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = m(i + 1, j);
  for (int j = 0; j < k; ++j) out(n - 1, j) = s * m(0, j);
  return {GrassmannPoint(std::move(out)), p.t};
}

Rat three_term_residual(const GrassmannPoint& p, const Subset& I, int a, int b, int c, int d) {
  auto P = [&](int x, int y) { return p.plucker(join(I, {x, y})); };
  return P(a, b) * P(c, d) + P(a, d) * P(b, c) - P(a, c) * P(b, d);
}

Rat grassmann_plucker_residual(const GrassmannPoint& p, const std::vector<int>& i, const std::vector<int>& j) {
  Rat sum = 0;
  for (std::size_t r = 0; r < i.size(); ++r) {
    std::vector<int> left, right{i[r]};
    for (std::size_t s = 0; s < i.size(); ++s)
      if (s != r) left.push_back(i[s]);
    right.insert(right.end(), j.begin(), j.end());
    Rat term = p.plucker_ordered(left) * p.plucker_ordered(right);
    if ((r + 1) % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

CrystalPoint random_point(Rng& rng, int n, int k) {
  for (;;) {
    RatMatrix m(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = rng.uniform(1, 9);
    bool ok = true;
    std::vector<std::size_t> cols;
    for (int j = 0; j < k; ++j) cols.push_back(j);
    for (const auto& s : GrassmannPoint::subsets(n, k)) {
      std::vector<std::size_t> rows;
      for (int x : s) rows.push_back(x - 1);
      if (determinant(m.select(rows, cols)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return {GrassmannPoint(std::move(m)), Rat(rng.uniform(1, 9))};
  }
}

Rat random_scalar(Rng& rng) {
  static const Rat choices[] = {rat(1, 3), rat(1, 2), rat(1), rat(2), rat(3), rat(5)};
  return choices[rng.uniform(0, 5)];
}

}  // namespace geomcrystal

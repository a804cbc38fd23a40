#include <gtest/gtest.h>

#include "geomcrystal/errors.hpp"
#include "geomcrystal/grassmannian.hpp"

using namespace geomcrystal;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Random point on which every map below is defined; retries on vanishing denominators.
template <class F>
void for_random_points(std::uint64_t seed, int trials, F&& body) {
  Rng rng(seed);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (int trial = 0; trial < trials; ++trial) {
        auto local = rng.split(static_cast<std::uint64_t>(n * 100 + k * 10 + trial));
        for (int attempt = 0; attempt < 20; ++attempt) {
          auto p = random_point(local, n, k);
          try {
            body(p, local);
            break;
          } catch (const UndefinedPoint&) {
          }
        }
      }
}

}  // namespace

TEST(Subsets, IntervalsAndReduction) {
  EXPECT_EQ(interval(3, 5), (Subset{3, 4, 5}));
  EXPECT_TRUE(interval(4, 3).empty());
  EXPECT_EQ(join({1}, interval(3, 4)), (Subset{1, 3, 4}));
  EXPECT_EQ(reduce_index(0, 5), 5);
  EXPECT_EQ(reduce_index(-1, 5), 4);
  EXPECT_EQ(reduce_index(7, 5), 2);
}

TEST(Pluecker, SetAndOrderedForms) {
  GrassmannPoint p(from_rows({{1, 0}, {0, 1}, {2, 3}, {5, 7}}));
  EXPECT_EQ(p.plucker({1, 2}), 1);
  EXPECT_EQ(p.plucker({2, 1}), 1);
  EXPECT_EQ(p.plucker_ordered({2, 1}), -1);
  EXPECT_EQ(p.plucker({3, 4}), 2 * 7 - 3 * 5);
  EXPECT_EQ(p.plucker({0, 1}), p.plucker({1, 4}));
  EXPECT_EQ(p.plucker({1, 5}), 0);
  EXPECT_EQ(GrassmannPoint::subsets(4, 2).size(), 6u);
  EXPECT_THROW(GrassmannPoint(from_rows({{1, 2}, {2, 4}, {3, 6}})), InvariantViolation);
}

TEST(Pluecker, RelationsHoldOnRandomPoints) {
  Rng rng(11);
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k <= n - 2; ++k) {
      auto p = random_point(rng, n, k);
      Subset I = interval(5, 5 + k - 3);
      EXPECT_EQ(three_term_residual(p.M, I, 1, 2, 3, 4), 0);
      std::vector<int> i = interval(1, k + 1), j = interval(k, 2 * k - 2);
      EXPECT_EQ(grassmann_plucker_residual(p.M, i, j), 0);
    }
}

TEST(CyclicShift, MatrixExample) {
  // k = 2: the old last row moves to the top with factor -t.
  CrystalPoint p{GrassmannPoint(from_rows({{1, 2}, {3, 5}, {7, 11}, {13, 17}})), Rat(3)};
  auto q = cyclic_shift(p);
  EXPECT_EQ(q.M.matrix(), from_rows({{-39, -51}, {1, 2}, {3, 5}, {7, 11}}));
  EXPECT_EQ(q.t, 3);
  EXPECT_EQ(cyclic_shift_inverse(q).M.matrix(), p.M.matrix());
}

TEST(CyclicShift, PlueckerShiftRule) {
  for_random_points(21, 2, [](const CrystalPoint& p, Rng&) {
    const int n = p.M.n(), k = p.M.k();
    auto q = cyclic_shift(p);
    for (const auto& J : GrassmannPoint::subsets(n, k)) {
      Subset Jm;
      for (int j : J) Jm.push_back(j - 1);
      Rat expect = p.M.plucker(Jm);
      if (J[0] == 1) expect *= p.t;
      EXPECT_EQ(q.M.plucker(J), expect);
    }
    auto r = p;
    for (int m = 0; m < n; ++m) r = cyclic_shift(r);
    EXPECT_TRUE(equivalent(r, p));
  });
}

TEST(GeometricCrystal, PreCrystalAxioms) {
  for_random_points(31, 3, [](const CrystalPoint& p, Rng& rng) {
    const int n = p.M.n();
    auto g = gamma_vector(p);
    for (int i = 0; i < n; ++i) {
      int a = reduce_index(i, n) - 1, b = reduce_index(i + 1, n) - 1;
      EXPECT_EQ(epsilon(p, i), phi(p, i) * g[a] / g[b]) << n << " " << i;
      Rat c = random_scalar(rng);
      auto q = apply_e(p, i, c);
      auto gq = gamma_vector(q);
      auto expect = g;
      expect[a] *= c;
      expect[b] /= c;
      EXPECT_EQ(gq, expect);
      EXPECT_EQ(phi(q, i), phi(p, i) / c);
      EXPECT_EQ(epsilon(q, i), epsilon(p, i) * c);
      EXPECT_EQ(decoration(q), decoration(p) + (c - 1) / phi(p, i) + (1 / c - 1) / epsilon(p, i));
      EXPECT_TRUE(equivalent(apply_e(p, i, 1), p));
      Rat c2 = random_scalar(rng);
      EXPECT_TRUE(equivalent(apply_e(q, i, c2), apply_e(p, i, c * c2)));
    }
  });
}

TEST(GeometricCrystal, SerreRelations) {
  for_random_points(41, 2, [](const CrystalPoint& p, Rng& rng) {
    const int n = p.M.n();
    if (n < 3) return;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Rat c1 = random_scalar(rng), c2 = random_scalar(rng);
        int d = std::min((i - j + n) % n, (j - i + n) % n);
        if (d > 1) {
          EXPECT_TRUE(equivalent(apply_e(apply_e(p, j, c2), i, c1), apply_e(apply_e(p, i, c1), j, c2)));
        } else {
          auto lhs = apply_e(apply_e(apply_e(p, i, c2), j, c1 * c2), i, c1);
          auto rhs = apply_e(apply_e(apply_e(p, j, c1), i, c1 * c2), j, c2);
          EXPECT_TRUE(equivalent(lhs, rhs)) << n << " " << i << " " << j;
        }
      }
  });
}

TEST(GeometricCrystal, CyclicShiftIntertwinesActions) {
  for_random_points(51, 2, [](const CrystalPoint& p, Rng& rng) {
    const int n = p.M.n();
    auto q = cyclic_shift(p);
    auto gp = gamma_vector(p), gq = gamma_vector(q);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(gq[i % n], gp[i - 1]);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(phi(q, i + 1), phi(p, i));
      EXPECT_EQ(epsilon(q, i + 1), epsilon(p, i));
      Rat c = random_scalar(rng);
      EXPECT_TRUE(equivalent(cyclic_shift(apply_e(p, i, c)), apply_e(q, i + 1, c)));
    }
    EXPECT_EQ(decoration(q), decoration(p));
  });
}

TEST(GeometricCrystal, ScalingRepresentativeIsInvisible) {
  Rng rng(61);
  auto p = random_point(rng, 5, 2);
  RatMatrix m = p.M.matrix();
  RatMatrix g(2, 2);
  g(0, 0) = 2, g(0, 1) = 1, g(1, 0) = 1, g(1, 1) = 1;
  CrystalPoint q{GrassmannPoint(m * g), p.t};
  EXPECT_TRUE(equivalent(p, q));
  EXPECT_EQ(decoration(p), decoration(q));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(phi(p, i), phi(q, i));
}

TEST(GeometricCrystal, VanishingDenominatorRaises) {
  CrystalPoint p{GrassmannPoint(from_rows({{1, 0}, {0, 1}, {0, 0}, {1, 1}})), Rat(1)};
  EXPECT_EQ(gamma(p, 3), 0);
  EXPECT_THROW(gamma(p, 4), UndefinedPoint);
}

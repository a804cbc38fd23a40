#include <gtest/gtest.h>

#include <set>

#include "geomcrystal/errors.hpp"
#include "geomcrystal/parametrization.hpp"

using namespace geomcrystal;

namespace {

RationalRectangle make_rect(int n, int rows, std::vector<long> X, long t) {
  RationalRectangle x;
  x.n = n;
  x.rows = rows;
  for (long v : X) x.X.emplace_back(v);
  x.t = t;
  return x;
}

// x_ij = X_ij / X_{i,j-1}, with X_{i,i-1} = 1 and X_{i,i+width} = t.
Rat small_x(const RationalRectangle& x, int i, int j) {
  auto big = [&](int a, int b) -> Rat {
    if (b == a - 1) return 1;
    if (b == a + x.width()) return x.t;
    return x.at(a, b);
  };
  return big(i, j) / big(i, j - 1);
}

}  // namespace

TEST(ChainFactor, FiveByFiveExample) {
  Rat c2(2), c3(3), c4(7);
  RatMatrix m = chain_factor(5, 2, {c2, c3, c4});
  RatMatrix expect = RatMatrix::identity(5);
  expect(1, 1) = c2;
  expect(2, 1) = 1;
  expect(2, 2) = c3 / c2;
  expect(3, 2) = 1;
  expect(3, 3) = c4 / c3;
  EXPECT_EQ(m, expect);
}

TEST(PhiMatrix, MatchesClosedFormForGr25) {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto x = random_rectangle(rng, 5, 3);
    auto s = [&](int i, int j) { return small_x(x, i, j); };
    RatMatrix e(5, 5);
    e(0, 0) = s(1, 1);
    e(1, 0) = s(2, 2);
    e(1, 1) = s(1, 2) * s(2, 2);
    e(2, 0) = s(3, 3);
    e(2, 1) = (s(1, 2) + s(2, 3)) * s(3, 3);
    e(2, 2) = s(1, 3) * s(2, 3) * s(3, 3);
    e(3, 0) = 1;
    e(3, 1) = s(1, 2) + s(2, 3) + s(3, 4);
    e(3, 2) = s(1, 3) * (s(2, 3) + s(3, 4));
    e(3, 3) = s(2, 4) * s(3, 4);
    e(4, 1) = 1;
    e(4, 2) = s(1, 3);
    e(4, 3) = s(2, 4);
    e(4, 4) = s(3, 5);
    EXPECT_EQ(phi_matrix(x), e);
  }
}

TEST(Network, FiveSourceExampleAndLindstroem) {
  auto x = make_rect(5, 2, {2, 3, 5, 7, 11, 13}, 17);
  auto s = [&](int i, int j) { return small_x(x, i, j); };
  auto net = standard_network(5, 3, &x);
  EXPECT_EQ(net.edges().size(), 2u * 3 * 2);
  RatMatrix e(5, 3);
  e(0, 0) = s(1, 1);
  e(1, 0) = s(2, 2);
  e(1, 1) = s(1, 2) * s(2, 2);
  e(2, 0) = 1;
  e(2, 1) = s(1, 2) + s(2, 3);
  e(2, 2) = s(1, 3) * s(2, 3);
  e(3, 1) = 1;
  e(3, 2) = s(1, 3) + s(2, 4);
  e(4, 2) = 1;
  EXPECT_EQ(net.weight_matrix(), e);
  Rat minor = s(1, 2) * s(1, 3) + s(1, 2) * s(2, 4) + s(2, 3) * s(2, 4);
  EXPECT_EQ(net.lindstrom_minor({3, 4}, {2, 3}), minor);
  EXPECT_TRUE(projectively_equal(GrassmannPoint(net.weight_matrix()), theta(x).M));
}

TEST(Network, LindstroemAgreesWithMinorsEverywhere) {
  Rng rng(5);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      auto x = random_rectangle(rng, n, n - k);
      auto net = standard_network(n, k, &x);
      EXPECT_EQ(static_cast<int>(net.edges().size()), 2 * k * (n - k));
      GrassmannPoint w(net.weight_matrix());
      EXPECT_TRUE(projectively_equal(w, theta(x).M));
      std::vector<int> cols;
      for (int j = 1; j <= k; ++j) cols.push_back(j);
      for (const auto& J : GrassmannPoint::subsets(n, k)) EXPECT_EQ(net.lindstrom_minor(J, cols), w.plucker(J));
    }
}

TEST(Network, GluingMultipliesMatrices) {
  Rng rng(8);
  auto a = standard_network(4, 2, nullptr);
  auto x = random_rectangle(rng, 2, 1);
  auto b = standard_network(2, 1, &x);
  // 4 x 2 times 2 x 1
  auto g = glue(a, b);
  EXPECT_EQ(g.weight_matrix(), a.weight_matrix() * b.weight_matrix());
}

TEST(JTableau, EightThreeExample) {
  auto tabs = j_tableaux(8, 3, {4, 5, 7});
  ASSERT_EQ(tabs.size(), 2u);
  std::set<std::vector<std::pair<int, int>>> weights;
  for (const auto& t : tabs) {
    auto w = t.weight_indices();
    std::sort(w.begin(), w.end());
    weights.insert(w);
  }
  std::set<std::vector<std::pair<int, int>>> expect = {
      {{4, 4}, {4, 5}, {4, 6}, {5, 5}},
      {{4, 4}, {4, 5}, {5, 5}, {5, 7}},
  };
  EXPECT_EQ(weights, expect);
}

TEST(JTableau, EmptyDiagramHasWeightOne) {
  auto tabs = j_tableaux(6, 2, {5, 6});
  ASSERT_EQ(tabs.size(), 1u);
  EXPECT_TRUE(tabs[0].cells.empty());
}

TEST(JTableau, SumsEqualPlueckerCoordinates) {
  Rng rng(13);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      auto x = random_rectangle(rng, n, n - k);
      auto p = theta(x);
      // normalise so that P_{[n-k+1, n]} = 1
      Rat scale = p.M.plucker(interval(n - k + 1, n));
      for (const auto& J : GrassmannPoint::subsets(n, k)) {
        auto v = plucker_via_jtableaux(x, J);
        EXPECT_EQ(v, p.M.plucker(J) / scale) << n << " " << k;
      }
    }
}

TEST(Theta, InverseIsTwoSided) {
  Rng rng(17);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      auto x = random_rectangle(rng, n, n - k);
      auto y = theta_inverse(theta(x));
      EXPECT_EQ(y.X, x.X);
      EXPECT_EQ(y.t, x.t);
      auto p = random_point(rng, n, k);
      EXPECT_TRUE(equivalent(theta(theta_inverse(p)), p));
    }
}

TEST(Theta, BasicSubsets) {
  auto J = basic_subset(7, 3, 2, 3);
  EXPECT_EQ(J, (Subset{2, 3, 7}));
  EXPECT_EQ(basic_subset(7, 3, 3, 2), (Subset{5, 6, 7}));
}

TEST(Theta, DecorationInCoordinates) {
  Rng rng(19);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      // chart with k rows, point of Gr(n-k, n)
      auto x = random_rectangle(rng, n, k);
      Rat expect = x.at(k, k) + x.t / x.at(1, n - k);
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= i + n - k - 1; ++j) expect += x.at(i, j) / x.at(i, j - 1);
      for (int i = 1; i <= k - 1; ++i)
        for (int j = i; j <= i + n - k - 1; ++j) expect += x.at(i, j) / x.at(i + 1, j + 1);
      EXPECT_EQ(decoration(theta(x)), expect) << n << " " << k;
    }
}

TEST(DiagonalForm, ShapeAndSpan) {
  Rng rng(23);
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      auto p = random_point(rng, n, k);
      RatMatrix d = diagonal_form(p.M);
      EXPECT_TRUE(projectively_equal(GrassmannPoint(d), p.M));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
          if (c > r) EXPECT_EQ(d(r, c), 0);
          if (c == r) EXPECT_NE(d(r, c), 0);
          int rb = n - k + r;
          if (c < r) EXPECT_EQ(d(rb, c), 0);
          if (c == r) EXPECT_EQ(d(rb, c), 1);
        }
    }
}

TEST(GeometricPromotion, EqualsConjugatedCyclicShift) {
  Rng rng(29);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k)
      for (int trial = 0; trial < 3; ++trial) {
        auto x = random_rectangle(rng, n, k);
        auto lhs = geometric_pr(x);
        auto rhs = theta_inverse(cyclic_shift(theta(x)));
        EXPECT_EQ(lhs.X, rhs.X) << n << " " << k;
        for (int r = 1; r < n; ++r) {
          auto back = geometric_bk(geometric_bk(x, r), r);
          EXPECT_EQ(back.X, x.X);
        }
      }
}

TEST(SymbolicRectangle, VariableNames) {
  ExprPool pool;
  auto x = symbolic_rectangle(pool, 4, 2);
  EXPECT_EQ(x.X.size(), 4u);
  EXPECT_EQ(pool.to_string(x.at(2, 3)), rect_var(2, 3));
  EXPECT_EQ(pool.to_string(x.t), "t");
}

#include <gtest/gtest.h>

#include "geomcrystal/errors.hpp"
#include "geomcrystal/expr.hpp"
#include "geomcrystal/laurent.hpp"
#include "geomcrystal/matrix.hpp"
#include "geomcrystal/random.hpp"

using namespace geomcrystal;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(rat(2, 4), rat(1, 2));
  EXPECT_EQ(rat(3, -6), rat(-1, 2));
  EXPECT_EQ(rat(-3, 6).get_den(), 2);
  EXPECT_EQ(rat_pow(rat(2, 3), -2), rat(9, 4));
}

TEST(LaurentPoly, NoStoredZeros) {
  auto x = LaurentPoly::variable();
  LaurentPoly p = x + LaurentPoly(1);
  LaurentPoly q = p - x;
  EXPECT_EQ(q, LaurentPoly(1));
  EXPECT_EQ(q.terms().size(), 1u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE((p - p).terms().empty());
}

TEST(LaurentPoly, ArithmeticAndEvaluation) {
  auto x = LaurentPoly::variable();
  LaurentPoly inv = LaurentPoly::monomial(1, -1);
  LaurentPoly p = (x + inv).pow(2);  // x^2 + 2 + x^-2
  EXPECT_EQ(p.coeff(2), 1);
  EXPECT_EQ(p.coeff(0), 2);
  EXPECT_EQ(p.coeff(-2), 1);
  EXPECT_EQ(p.eval(2), rat(25, 4));
  EXPECT_EQ(*p.low_degree(), -2);
  EXPECT_EQ(p.scale_variable(-1), p);
  EXPECT_EQ((x + 1).scale_variable(-1), LaurentPoly(1) - x);
}

TEST(LaurentPoly, RingAxiomsOnRandomPolys) {
  Rng rng(7);
  auto random_poly = [&] {
    LaurentPoly p;
    for (int e = -2; e <= 2; ++e) p += LaurentPoly::monomial(rat(rng.uniform(-5, 5), rng.uniform(1, 4)), e);
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    Rat x = rat(rng.uniform(1, 9), rng.uniform(1, 9));
    EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
  }
}

class ExprTest : public ::testing::Test {
 protected:
  ExprPool pool;
  Expr x1 = pool.var("x1"), x2 = pool.var("x2"), x3 = pool.var("x3");
};

TEST_F(ExprTest, HashConsingSharesStructure) {
  Expr a = (x1 + x2) / x3;
  std::size_t before = pool.size();
  Expr b = (x2 + x1) / x3;
  EXPECT_EQ(a, b);
  EXPECT_EQ(pool.size(), before);
  EXPECT_EQ(x1 * pool.one(), x1);
}

TEST_F(ExprTest, RationalAndTropicalEvaluation) {
  Expr e = (x1 + x2) / x3;
  EXPECT_EQ(eval_rational(e, {{"x1", 1}, {"x2", 2}, {"x3", 4}}), rat(3, 4));
  EXPECT_EQ(eval_tropical(e, {{"x1", 1}, {"x2", 2}, {"x3", 4}}), -3);
}

TEST_F(ExprTest, ValuationOfWorkedQuotient) {
  // (z1^2 z2 + z3) / (z2^5 + 8 z1 z3)
  Expr num = x1 * x1 * x2 + x3;
  Expr den = pool.pow(x2, 5) + pool.constant(8) * x1 * x3;
  Expr e = num / den;
  TropicalEnv a{{"x1", 1}, {"x2", 1}, {"x3", 1}};
  EXPECT_EQ(eval_tropical(e, a), -1);
  EXPECT_EQ(valuation_probe(e, a), -1);
}

TEST_F(ExprTest, ConstantsTropicalizeToZero) {
  EXPECT_EQ(eval_tropical(pool.constant(5), {}), 0);
  EXPECT_EQ(eval_tropical(pool.constant(3) * x1, {{"x1", 4}}), 4);
  EXPECT_EQ(eval_rational(pool.constant(3) * x1, {{"x1", 4}}), 12);
}

TEST_F(ExprTest, EvaluationErrors) {
  Expr e = x1 + x2;
  EXPECT_THROW(eval_rational(e, {{"x1", 1}}), MissingBinding);
  EXPECT_THROW(eval_rational(e, {{"x1", 1}, {"x2", 0}}), DomainError);
  EXPECT_THROW(eval_rational(e, {{"x1", -1}, {"x2", 1}}), DomainError);
  EXPECT_THROW(eval_tropical(e, {{"x2", 1}}), MissingBinding);
  EXPECT_THROW(pool.constant(0), DomainError);
}

TEST_F(ExprTest, SubstitutionComposes) {
  Expr e = x1 * x2 / (x1 + x3);
  Expr s = pool.substitute(e, {{"x1", x2 + x3}});
  RationalEnv env{{"x1", 0}, {"x2", rat(2)}, {"x3", rat(5, 3)}};
  RationalEnv inner{{"x1", env["x2"] + env["x3"]}, {"x2", env["x2"]}, {"x3", env["x3"]}};
  EXPECT_EQ(eval_rational(s, {{"x2", env["x2"]}, {"x3", env["x3"]}}), eval_rational(e, inner));
}

// Random subtraction-free DAGs: min-plus evaluation agrees with the exact order of
// vanishing computed in Q(eps).
TEST(ExprProperty, TropicalEqualsValuationOnRandomDags) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    ExprPool pool;
    std::vector<Expr> vars;
    for (int v = 0; v < 4; ++v) vars.push_back(pool.var("v" + std::to_string(v)));
    auto gen = [&](auto&& self, int depth) -> Expr {
      if (depth == 0 || rng.uniform(0, 3) == 0) {
        if (rng.uniform(0, 4) == 0) return pool.constant(static_cast<std::uint32_t>(rng.uniform(1, 9)));
        return vars[rng.uniform(0, 3)];
      }
      Expr a = self(self, depth - 1), b = self(self, depth - 1);
      switch (rng.uniform(0, 2)) {
        case 0: return a + b;
        case 1: return a * b;
        default: return a / b;
      }
    };
    Expr e = gen(gen, 6);
    TropicalEnv env;
    for (int v = 0; v < 4; ++v) env["v" + std::to_string(v)] = rng.uniform(-5, 5);
    EXPECT_EQ(eval_tropical(e, env), valuation_probe(e, env)) << pool.to_string(e);
  }
}

TEST(ExprProperty, ProgramMatchesDirectEvaluation) {
  ExprPool pool;
  Expr a = pool.var("a"), b = pool.var("b");
  Expr e1 = (a + b) * a / (b + pool.constant(2));
  Expr e2 = a / b;
  Program prog(pool, {e1, e2}, {"a", "b"});
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    long va = rng.uniform(-9, 9), vb = rng.uniform(-9, 9);
    long in[] = {va, vb};
    auto out = prog.run_tropical(in);
    EXPECT_EQ(out[0], eval_tropical(e1, {{"a", va}, {"b", vb}}));
    EXPECT_EQ(out[1], va - vb);
    Rat ra = rat(rng.uniform(1, 9), rng.uniform(1, 9)), rb = rat(rng.uniform(1, 9), 1);
    Rat rin[] = {ra, rb};
    auto rout = prog.run_rational(rin);
    EXPECT_EQ(rout[0], eval_rational(e1, {{"a", ra}, {"b", rb}}));
  }
  EXPECT_THROW(Program(pool, {e1}, {"a"}), MissingBinding);
}

TEST(Matrix, DeterminantRankInverse) {
  RatMatrix m(3, 3);
  int v[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  // 2(3-2) - 0 + 1(1-3) = 0
  EXPECT_EQ(determinant(m), 0);
  EXPECT_EQ(rank(m), 2u);
  m(2, 2) = 2;
  EXPECT_EQ(determinant(m), 6);
  EXPECT_EQ(laplace_determinant(m), determinant(m));
  EXPECT_EQ(m * inverse(m), RatMatrix::identity(3));
  RatMatrix ns = nullspace(m.select({0, 1}, {0, 1, 2}));
  EXPECT_EQ(ns.cols(), 1u);
  RatMatrix prod = m.select({0, 1}, {0, 1, 2}) * ns;
  EXPECT_EQ(prod, RatMatrix(2, 1));
}

TEST(Matrix, LaurentDeterminantAndAdjugate) {
  auto x = LaurentPoly::variable();
  LaurentMatrix a(2, 2);
  a(0, 0) = x + 1;
  a(0, 1) = LaurentPoly::monomial(1, -1);
  a(1, 0) = LaurentPoly(3);
  a(1, 1) = x;
  EXPECT_EQ(determinant(a), x * x + x - LaurentPoly::monomial(3, -1));
  LaurentMatrix adj = adjugate(a);
  LaurentMatrix prod = a * adj;
  EXPECT_EQ(prod(0, 0), determinant(a));
  EXPECT_TRUE(prod(0, 1).is_zero());
}

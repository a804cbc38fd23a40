#include "geomcrystal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <tuple>

#include "geomcrystal/errors.hpp"
#include "geomcrystal/loop_group.hpp"
#include "geomcrystal/parametrization.hpp"
#include "geomcrystal/tableau.hpp"
#include "geomcrystal/tropical.hpp"

namespace geomcrystal {

namespace {

using Params = std::vector<std::pair<std::string, long>>;

class Check {
 public:
  Check(std::string suite, std::string id, std::string anchor, Params params)
      : start_(std::chrono::steady_clock::now()) {
    rec_.suite = std::move(suite);
    rec_.check_id = std::move(id);
    rec_.anchor = std::move(anchor);
    rec_.parameters = std::move(params);
  }

  template <class Why>
  void expect(bool ok, Why&& why) {
    ++rec_.cases;
    if (!ok && rec_.failures++ == 0) rec_.counterexample = why();
  }
  void expect(bool ok) {
    expect(ok, [] { return std::string("identity fails"); });
  }
  void fail(const std::string& why) {
    ++rec_.cases;
    if (rec_.failures++ == 0) rec_.counterexample = why;
  }

  Record finish() {
    rec_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return rec_;
  }

 private:
  Record rec_;
  std::chrono::steady_clock::time_point start_;
};

std::string show(const Tableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    if (!s.empty()) s += "/";
    for (std::size_t c = 0; c < row.size(); ++c) s += (c ? "," : "") + std::to_string(row[c]);
  }
  return s.empty() ? "(empty)" : s;
}

std::string show(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string show(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ";" : "";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_string(m(i, j));
  }
  return s + "]";
}

std::string show(const CrystalPoint& p) { return "M=" + show(p.M.matrix()) + " t=" + to_string(p.t); }

std::string show(const RationalRectangle& x) {
  std::string s = "X=[";
  for (std::size_t i = 0; i < x.X.size(); ++i) s += (i ? "," : "") + to_string(x.X[i]);
  return s + "] t=" + to_string(x.t);
}

Tableau rot_tableau(const Tableau& t) {
  std::vector<std::vector<int>> out;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) {
    std::vector<int> r;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) r.push_back(t.n() + 1 - *jt);
    out.push_back(r);
  }
  return Tableau(out, t.n());
}

// Column-by-column complement, columns read right to left.
Tableau column_complement(const Tableau& t, int k) {
  const int n = t.n();
  const int L = t.rows().empty() ? 0 : static_cast<int>(t.rows()[0].size());
  std::vector<std::vector<int>> out(n - k);
  for (int c = L - 1; c >= 0; --c) {
    std::vector<bool> in(n + 1, false);
    for (const auto& row : t.rows()) in[row[c]] = true;
    int r = 0;
    for (int x = 1; x <= n; ++x)
      if (!in[x]) out[r++].push_back(x);
  }
  return Tableau(out, n);
}

LaurentMatrix scaled(const LaurentMatrix& a, const LaurentPoly& s) {
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * s;
  return out;
}

// t + (-1)^e lambda
LaurentPoly beta(const Rat& t, int e) { return LaurentPoly(t) + LaurentPoly::monomial(Rat(sign_pow(e)), 1); }

// Draws points until body runs without hitting a vanishing denominator.
template <class F>
void sample_points(Check& c, Rng& rng, int n, int k, int trials, F&& body) {
  for (int trial = 0; trial < trials; ++trial) {
    bool done = false;
    for (int attempt = 0; attempt < 50 && !done; ++attempt) {
      auto p = random_point(rng, n, k);
      try {
        body(p);
        done = true;
      } catch (const UndefinedPoint&) {
      }
    }
    if (!done) c.fail("no sample point with nonvanishing denominators");
  }
}

Params nk(int n, int k) { return {{"n", n}, {"k", k}}; }

struct Env {
  const VerifyConfig& cfg;
  Rng root;
  Rng stream(const std::string& suite, const std::string& id, const Params& p) const {
    std::string label = suite + "/" + id;
    for (const auto& [key, v] : p) label += "/" + key + "=" + std::to_string(v);
    return root.split(label);
  }
};

using Task = std::function<std::vector<Record>()>;

// ---------------------------------------------------------------- combinatorial

std::vector<Record> combinatorial_nk(const Env& env, int n, int k) {
  const int Lm = env.cfg.L_max;
  Params p = nk(n, k);
  p.emplace_back("L_max", Lm);
  Check order("combinatorial", "pr_order", "promotion has order n on rectangular tableaux", p);
  Check axioms("combinatorial", "crystal_axioms", "affine crystal axioms for e_i, f_i, i in Z/n", p);
  Check evac("combinatorial", "evacuation_is_rot", "evacuation equals 180-degree rotation with complemented entries", p);
  Check bk("combinatorial", "bk_piecewise_linear", "Bender-Knuth moves agree with the piecewise-linear GT map", p);
  for (int L = 0; L <= Lm; ++L)
    for (const auto& T : rectangular_tableaux(n, k, L)) {
      Tableau q = T;
      for (int m = 0; m < n; ++m) q = promote(q);
      order.expect(q == T && promote_inverse(promote(T)) == T, [&] { return "T=" + show(T); });

      auto wt = T.content();
      for (int i = 0; i < n; ++i) {
        const int a = (i + n - 1) % n, b = i % n;
        auto st = affine_stats(T, i);
        auto up = affine_op(T, i, Dir::Raise);
        auto down = affine_op(T, i, Dir::Lower);
        bool ok = st.phi - st.epsilon == wt[a] - wt[b];
        ok = ok && up.has_value() == (st.epsilon > 0) && down.has_value() == (st.phi > 0);
        if (up) {
          auto su = affine_stats(*up, i);
          auto w2 = up->content();
          ok = ok && affine_op(*up, i, Dir::Lower) == T && su.epsilon == st.epsilon - 1 && su.phi == st.phi + 1;
          ok = ok && (a == b || (w2[a] == wt[a] + 1 && w2[b] == wt[b] - 1));
        }
        if (down) ok = ok && affine_op(*down, i, Dir::Raise) == T;
        auto conj = affine_op(promote(T), i + 1, Dir::Raise);
        ok = ok && conj.has_value() == up.has_value() && (!conj || promote_inverse(*conj) == *up);
        axioms.expect(ok, [&] { return "T=" + show(T) + " i=" + std::to_string(i); });
      }

      auto b = KRectangle::from_tableau(T, k);
      evac.expect(evacuate(T) == rect_rot(b).to_tableau() && evacuate(evacuate(T)) == T,
                  [&] { return "T=" + show(T); });
      for (int r = 1; r < n; ++r)
        bk.expect(bender_knuth(bender_knuth(T, r), r) == T &&
                      to_gt(bender_knuth(T, r)) == bk_piecewise_linear(to_gt(T), r),
                  [&] { return "T=" + show(T) + " r=" + std::to_string(r); });
    }
  return {order.finish(), axioms.finish(), evac.finish(), bk.finish()};
}

std::vector<Record> worked_examples() {
  Check c("combinatorial", "worked_examples", "worked examples of bracketing, Bender-Knuth, promotion and reflection", {});
  auto same = [&](const std::string& what, const std::string& got, const std::string& want) {
    c.expect(got == want, [&] { return what + ": got \"" + got + "\" want \"" + want + "\""; });
  };
  Tableau t({{1, 1, 1, 2, 2, 2, 3, 3, 3}, {2, 3, 3, 3}}, 3);
  auto st = crystal_stats(t, 2);
  same("epsilon_2", std::to_string(st.epsilon), "3");
  same("phi_2", std::to_string(st.phi), "1");
  auto e2 = crystal_op(t, 2, Dir::Raise);
  auto f2 = crystal_op(t, 2, Dir::Lower);
  same("e_2", e2 ? format_tableau(*e2) : "undefined", "1,1,1,2,2,2,2,3,3\n2,3,3,3\n");
  same("f_2", f2 ? format_tableau(*f2) : "undefined", "1,1,1,2,2,2,3,3,3\n3,3,3,3\n");
  same("sigma_2", format_tableau(bender_knuth(t, 2)), "1,1,1,2,2,2,2,3,3\n2,2,3,3\n");
  same("pr", format_tableau(promote(t)), "1,1,1,1,1,1,2,3,3\n2,2,3,3\n");

  Tableau r({{1, 1, 2, 2, 2, 3}, {2, 3, 3, 4, 4, 4}}, 4);
  same("pr rectangle", format_tableau(promote(r)), "1,1,1,2,3,3\n2,3,3,4,4,4\n");
  same("rectangle entries", show(KRectangle::from_tableau(r, 2).entries()), "[2,5,1,3]");
  TropicalCrystal tc(4, 2);
  same("tropical PR", show(tc.pr({2, 5, 1, 3}, 6)), "[3,4,1,3]");

  Tableau col({{1}, {3}, {4}, {6}}, 7);
  same("refl", format_tableau(rect_refl(KRectangle::from_tableau(col, 4)).to_tableau()), "2\n5\n7\n");
  return {c.finish()};
}

// ---------------------------------------------------------------- geometric

std::vector<Record> geometric_nk(const Env& env, int n, int k) {
  const int trials = env.cfg.trials;
  std::vector<Record> out;
  {
    Check c("geometric", "plucker_relations", "Grassmann-Pluecker relations on random points", nk(n, k));
    Rng rng = env.stream("geometric", "plucker_relations", nk(n, k));
    sample_points(c, rng, n, k, trials, [&](const CrystalPoint& p) {
      std::vector<int> i, j;
      for (int a = 0; a <= k; ++a) i.push_back(static_cast<int>(rng.uniform(1, n)));
      for (int a = 0; a < k - 1; ++a) j.push_back(static_cast<int>(rng.uniform(1, n)));
      c.expect(grassmann_plucker_residual(p.M, i, j) == 0, [&] { return show(p); });
    });
    out.push_back(c.finish());
  }
  {
    Check c("geometric", "precrystal_axioms", "geometric pre-crystal axioms and the decoration transport rule",
            nk(n, k));
    Rng rng = env.stream("geometric", "precrystal_axioms", nk(n, k));
    sample_points(c, rng, n, k, trials, [&](const CrystalPoint& p) {
      auto g = gamma_vector(p);
      for (int i = 0; i < n; ++i) {
        const int a = reduce_index(i, n) - 1, b = reduce_index(i + 1, n) - 1;
        Rat cc = random_scalar(rng), c2 = random_scalar(rng);
        auto q = apply_e(p, i, cc);
        auto expect = g;
        expect[a] *= cc;
        expect[b] /= cc;
        bool ok = epsilon(p, i) == phi(p, i) * g[a] / g[b] && gamma_vector(q) == expect;
        ok = ok && phi(q, i) == phi(p, i) / cc && epsilon(q, i) == epsilon(p, i) * cc;
        ok = ok && decoration(q) == decoration(p) + (cc - 1) / phi(p, i) + (1 / cc - 1) / epsilon(p, i);
        ok = ok && equivalent(apply_e(p, i, 1), p) && equivalent(apply_e(q, i, c2), apply_e(p, i, cc * c2));
        c.expect(ok, [&] { return show(p) + " i=" + std::to_string(i) + " c=" + to_string(cc); });
      }
    });
    out.push_back(c.finish());
  }
  if (n >= 3) {
    Check c("geometric", "serre_relations", "Serre relations for the geometric crystal operators", nk(n, k));
    Rng rng = env.stream("geometric", "serre_relations", nk(n, k));
    sample_points(c, rng, n, k, trials, [&](const CrystalPoint& p) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          Rat c1 = random_scalar(rng), c2 = random_scalar(rng);
          const int d = std::min((i - j + n) % n, (j - i + n) % n);
          bool ok;
          if (d > 1) {
            ok = equivalent(apply_e(apply_e(p, j, c2), i, c1), apply_e(apply_e(p, i, c1), j, c2));
          } else {
            auto lhs = apply_e(apply_e(apply_e(p, i, c2), j, c1 * c2), i, c1);
            auto rhs = apply_e(apply_e(apply_e(p, j, c1), i, c1 * c2), j, c2);
            ok = equivalent(lhs, rhs);
          }
          c.expect(ok, [&] { return show(p) + " i=" + std::to_string(i) + " j=" + std::to_string(j); });
        }
    });
    out.push_back(c.finish());
  }
  {
    Check c("geometric", "pr_intertwines", "cyclic shift PR shifts gamma, phi, epsilon and e_i by one index",
            nk(n, k));
    Rng rng = env.stream("geometric", "pr_intertwines", nk(n, k));
    sample_points(c, rng, n, k, trials, [&](const CrystalPoint& p) {
      auto q = cyclic_shift(p);
      auto gp = gamma_vector(p), gq = gamma_vector(q);
      bool ok = decoration(q) == decoration(p) && equivalent(cyclic_shift_inverse(q), p);
      for (int i = 1; i <= n; ++i) ok = ok && gq[i % n] == gp[i - 1];
      for (int i = 0; i < n; ++i) {
        Rat cc = random_scalar(rng);
        ok = ok && phi(q, i + 1) == phi(p, i) && epsilon(q, i + 1) == epsilon(p, i);
        ok = ok && equivalent(cyclic_shift(apply_e(p, i, cc)), apply_e(q, i + 1, cc));
      }
      c.expect(ok, [&] { return show(p); });
    });
    out.push_back(c.finish());
  }
  return out;
}

// ---------------------------------------------------------------- parametrization

std::vector<Record> parametrization_nk(const Env& env, int n, int k) {
  const int trials = env.cfg.trials;
  std::vector<Record> out;
  {
    Check c("parametrization", "jtableau_sum", "J-tableau weight sums equal the Pluecker coordinates of Theta",
            nk(n, k));
    Rng rng = env.stream("parametrization", "jtableau_sum", nk(n, k));
    for (int trial = 0; trial < trials; ++trial) {
      auto x = random_rectangle(rng, n, n - k);
      auto p = theta(x);
      Rat scale = p.M.plucker(interval(n - k + 1, n));
      for (const auto& J : GrassmannPoint::subsets(n, k))
        c.expect(plucker_via_jtableaux(x, J) == p.M.plucker(J) / scale, [&] { return show(x); });
    }
    out.push_back(c.finish());
  }
  {
    Check c("parametrization", "theta_roundtrip", "Theta and its inverse are mutually inverse", nk(n, k));
    Rng rng = env.stream("parametrization", "theta_roundtrip", nk(n, k));
    for (int trial = 0; trial < trials; ++trial) {
      auto x = random_rectangle(rng, n, n - k);
      auto y = theta_inverse(theta(x));
      c.expect(y.X == x.X && y.t == x.t, [&] { return show(x); });
    }
    sample_points(c, rng, n, k, trials, [&](const CrystalPoint& p) {
      c.expect(equivalent(theta(theta_inverse(p)), p), [&] { return show(p); });
    });
    out.push_back(c.finish());
  }
  {
    Check c("parametrization", "basic_plucker_monomial",
            "basic Pluecker coordinates of Theta are monomials in the chart", nk(n, k));
    Rng rng = env.stream("parametrization", "basic_plucker_monomial", nk(n, k));
    for (int trial = 0; trial < trials; ++trial) {
      auto x = random_rectangle(rng, n, n - k);
      auto p = theta(x);
      Rat scale = p.M.plucker(interval(n - k + 1, n));
      for (int i = 1; i <= n - k + 1; ++i)
        for (int j = i; j <= i + k - 1; ++j) {
          Rat expect = 1;
          for (int a = i; a <= std::min(j, n - k); ++a) expect *= x.at(a, j);
          c.expect(p.M.plucker(basic_subset(n, k, i, j)) / scale == expect, [&] {
            return show(x) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
          });
        }
    }
    out.push_back(c.finish());
  }
  {
    Check c("parametrization", "lindstrom_minors", "path-family sums of the network equal its minors", nk(n, k));
    Rng rng = env.stream("parametrization", "lindstrom_minors", nk(n, k));
    for (int trial = 0; trial < std::min(trials, 5); ++trial) {
      auto x = random_rectangle(rng, n, n - k);
      auto net = standard_network(n, k, &x);
      GrassmannPoint w(net.weight_matrix());
      std::vector<int> cols;
      for (int j = 1; j <= k; ++j) cols.push_back(j);
      c.expect(static_cast<int>(net.edges().size()) == 2 * k * (n - k) && projectively_equal(w, theta(x).M),
               [&] { return show(x); });
      for (const auto& J : GrassmannPoint::subsets(n, k))
        c.expect(net.lindstrom_minor(J, cols) == w.plucker(J), [&] { return show(x); });
    }
    out.push_back(c.finish());
  }
  {
    Check c("parametrization", "geometric_pr", "the birational promotion lift equals PR in the chart", nk(n, k));
    Rng rng = env.stream("parametrization", "geometric_pr", nk(n, k));
    for (int trial = 0; trial < trials; ++trial) {
      auto x = random_rectangle(rng, n, k);
      auto rhs = theta_inverse(cyclic_shift(theta(x)));
      bool ok = geometric_pr(x).X == rhs.X;
      for (int r = 1; r < n; ++r) ok = ok && geometric_bk(geometric_bk(x, r), r).X == x.X;
      c.expect(ok, [&] { return show(x); });
    }
    out.push_back(c.finish());
  }
  return out;
}

std::vector<Record> network_example() {
  Check c("parametrization", "network_minor_example", "three vertex-disjoint families on the five-source network",
          {});
  RationalRectangle x;
  x.n = 5;
  x.rows = 2;
  for (long v : {2, 3, 5, 7, 11, 13}) x.X.emplace_back(v);
  x.t = 17;
  auto s = [&](int i, int j) -> Rat {
    auto big = [&](int a, int b) -> Rat {
      if (b == a - 1) return 1;
      if (b == a + x.width()) return x.t;
      return x.at(a, b);
    };
    return big(i, j) / big(i, j - 1);
  };
  auto net = standard_network(5, 3, &x);
  Rat want = s(1, 2) * s(1, 3) + s(1, 2) * s(2, 4) + s(2, 3) * s(2, 4);
  Rat got = net.lindstrom_minor({3, 4}, {2, 3});
  c.expect(got == want, [&] { return "got " + to_string(got) + " want " + to_string(want); });
  c.expect(determinant(net.weight_matrix().select({2, 3}, {1, 2})) == want);
  return {c.finish()};
}

// ---------------------------------------------------------------- tropical

std::vector<Record> tropical_nk(const Env& env, int n, int k) {
  const int box = env.cfg.box_L_max < 0 ? env.cfg.L_max : env.cfg.box_L_max;
  auto start = std::chrono::steady_clock::now();
  auto rep = check_trop_theorems(n, k, env.cfg.L_max, box);
  // the sweep shares one pass over the rectangles, so its time is split evenly
  double share = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() /
                 static_cast<double>(std::max<std::size_t>(rep.outcomes.size(), 1));
  std::vector<Record> out;
  for (const auto& o : rep.outcomes) {
    Params p = nk(n, k);
    p.emplace_back("L_max", env.cfg.L_max);
    if (o.check_id.find("box") != std::string::npos) p.back() = {"box_L_max", box};
    Record r;
    r.suite = "tropical";
    r.check_id = o.check_id;
    r.anchor = o.anchor;
    r.parameters = p;
    r.cases = o.cases;
    r.failures = o.failures;
    r.counterexample = o.counterexample;
    r.elapsed_ms = share;
    out.push_back(r);
  }
  return out;
}

std::vector<Record> oracle_maps(const Env& env, int n, int k) {
  Check c("tropical", "oracle_symbolic_maps", "min-plus evaluation equals the valuation in Q(eps) on every map",
          nk(n, k));
  Rng rng = env.stream("tropical", "oracle_symbolic_maps", nk(n, k));
  SymbolicContext ctx(n, k);
  std::vector<std::pair<MapId, int>> ids = {{MapId::PR, 0},         {MapId::PRInverse, 0}, {MapId::Decoration, 0},
                                            {MapId::E1, 0},         {MapId::S, 0},         {MapId::D, 0},
                                            {MapId::GeometricPR, 0}};
  for (int i = 1; i <= n; ++i) ids.emplace_back(MapId::Gamma, i);
  for (int i = 0; i < n; ++i) {
    ids.emplace_back(MapId::Phi, i);
    ids.emplace_back(MapId::Epsilon, i);
  }
  const int points = std::max(env.cfg.trials, 1);
  for (auto [id, i] : ids) {
    const auto& m = ctx.map(id, i);
    for (int trial = 0; trial < points; ++trial) {
      TropicalEnv tenv;
      std::vector<long> pt;
      for (const auto& v : m.inputs) {
        long a = rng.uniform(-3, 3);
        tenv[v] = a;
        pt.push_back(a);
      }
      auto trop = trop_apply(m, pt);
      for (std::size_t o = 0; o < m.outputs.size(); ++o)
        c.expect(trop[o] == valuation_probe(m.outputs[o], tenv),
                 [&] { return m.name + " output " + std::to_string(o) + " at " + show(pt); });
    }
  }
  return {c.finish()};
}

std::vector<Record> oracle_dags(const Env& env) {
  const long count = std::max(10 * env.cfg.trials, 500);
  Params p = {{"count", count}, {"depth", 8}};
  Check c("tropical", "oracle_random_dags", "min-plus evaluation equals the valuation in Q(eps) on random DAGs", p);
  Rng rng = env.stream("tropical", "oracle_random_dags", p);
  for (long trial = 0; trial < count; ++trial) {
    ExprPool pool;
    std::vector<Expr> vars;
    for (int v = 0; v < 4; ++v) vars.push_back(pool.var("v" + std::to_string(v)));
    std::vector<Expr> made;  // earlier nodes, reused to create sharing
    auto gen = [&](auto&& self, int depth) -> Expr {
      if (depth == 0 || rng.uniform(0, 2) == 0) {
        long pick = rng.uniform(0, 9);
        if (pick == 0) return pool.constant(static_cast<std::uint32_t>(rng.uniform(1, 9)));
        if (pick == 1 && !made.empty()) return made[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(made.size()) - 1))];
        return vars[static_cast<std::size_t>(rng.uniform(0, 3))];
      }
      Expr a = self(self, depth - 1), b = self(self, depth - 1);
      Expr e = rng.uniform(0, 2) == 0 ? a + b : rng.uniform(0, 1) ? a * b : a / b;
      made.push_back(e);
      return e;
    };
    Expr e = gen(gen, 8);
    TropicalEnv tenv;
    for (int v = 0; v < 4; ++v) tenv["v" + std::to_string(v)] = rng.uniform(-4, 4);
    c.expect(eval_tropical(e, tenv) == valuation_probe(e, tenv), [&] { return pool.to_string(e); });
  }
  return {c.finish()};
}

// ---------------------------------------------------------------- loopgroup

std::vector<Record> loopgroup_nk(const Env& env, int n, int k) {
  const int trials = env.cfg.trials;
  std::vector<Record> out;
  auto run = [&](const std::string& id, const std::string& anchor, auto&& body) {
    Check c("loopgroup", id, anchor, nk(n, k));
    Rng rng = env.stream("loopgroup", id, nk(n, k));
    sample_points(c, rng, n, k, trials, [&](const CrystalPoint& p) { body(c, rng, p); });
    out.push_back(c.finish());
  };
  run("g_borel_span", "g lies in the lower Borel, is (n-k)-shifted unipotent, and its first k columns at 0 span M",
      [&](Check& c, Rng&, const CrystalPoint& p) {
        auto g = g_matrix(p);
        c.expect(in_lower_borel(g) && is_shifted_unipotent(g, n - k) &&
                     projectively_equal(GrassmannPoint(evaluate(g, 0).first_columns(k)), p.M),
                 [&] { return show(p); });
      });
  run("g_rank", "g has rank k at lambda = (-1)^(k-1) t", [&](Check& c, Rng&, const CrystalPoint& p) {
    c.expect(rank(evaluate(g_matrix(p), p.t * sign_pow(k - 1))) == static_cast<std::size_t>(k),
             [&] { return show(p); });
  });
  run("g_determinant", "det g = (t + (-1)^k lambda)^(n-k) as Laurent polynomials",
      [&](Check& c, Rng&, const CrystalPoint& p) {
        c.expect(determinant(g_matrix(p)) == beta(p.t, k).pow(n - k), [&] { return show(p); });
      });
  run("g_chart", "g at lambda = 0 is the chart matrix Phi", [&](Check& c, Rng& rng, const CrystalPoint&) {
    auto x = random_rectangle(rng, n, n - k);
    c.expect(evaluate(g_matrix(theta(x)), 0) == phi_matrix(x), [&] { return show(x); });
  });
  run("g_intertwines", "g intertwines the unipotent actions of every generator x_i(a)",
      [&](Check& c, Rng& rng, const CrystalPoint& p) {
        auto g = g_matrix(p);
        bool ok = g_matrix(cyclic_shift(p)) == shift(g);
        for (int i = 0; i < n; ++i) {
          Rat a = random_scalar(rng), cc = random_scalar(rng);
          ok = ok && g_matrix(u_action(i, a, p)) == u_action(i, a, g);
          ok = ok && g_matrix(apply_e(p, i, cc)) == induced_e(g, i, cc);
          ok = ok && induced_phi(g, i) == phi(p, i) && induced_epsilon(g, i) == epsilon(p, i);
        }
        for (int i = 1; i <= n; ++i) ok = ok && induced_gamma(g, i) == gamma(p, i);
        c.expect(ok, [&] { return show(p); });
      });
  run("chi_decoration", "chi(g) equals the decoration f", [&](Check& c, Rng&, const CrystalPoint& p) {
    c.expect(chi(g_matrix(p), n - k) == decoration(p), [&] { return show(p); });
  });
  run("h_times_g", "h g = (t + (-1)^k lambda) Id", [&](Check& c, Rng&, const CrystalPoint& p) {
    c.expect(h_matrix(p) * g_matrix(p) == scaled(LaurentMatrix::identity(n), beta(p.t, k)),
             [&] { return show(p); });
  });
  return out;
}

// ---------------------------------------------------------------- symmetry

std::vector<Record> symmetry_nk(const Env& env, int n, int k) {
  const int trials = env.cfg.trials;
  std::vector<Record> out;
  auto run = [&](const std::string& id, const std::string& anchor, auto&& body) {
    Check c("symmetry", id, anchor, nk(n, k));
    Rng rng = env.stream("symmetry", id, nk(n, k));
    sample_points(c, rng, n, k, trials, [&](const CrystalPoint& p) { body(c, rng, p); });
    out.push_back(c.finish());
  };
  run("S_involution", "S is an involution and g(S p) = fl(g(p))", [&](Check& c, Rng&, const CrystalPoint& p) {
    auto s = schutzenberger(p);
    c.expect(equivalent(schutzenberger(s), p) && g_matrix(s) == flip(g_matrix(p)), [&] { return show(p); });
  });
  run("S_promotion", "S PR = PR^-1 S", [&](Check& c, Rng&, const CrystalPoint& p) {
    c.expect(equivalent(schutzenberger(cyclic_shift(p)), cyclic_shift_inverse(schutzenberger(p))),
             [&] { return show(p); });
  });
  run("S_phi_epsilon", "phi_i S = epsilon_{n-i} and epsilon_i S = phi_{n-i}", [&](Check& c, Rng&, const CrystalPoint& p) {
    auto s = schutzenberger(p);
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && phi(s, i) == epsilon(p, n - i) && epsilon(s, i) == phi(p, n - i);
    c.expect(ok, [&] { return show(p); });
  });
  run("S_crystal_action", "S e_i^c = e_{n-i}^{1/c} S", [&](Check& c, Rng& rng, const CrystalPoint& p) {
    auto s = schutzenberger(p);
    for (int i = 0; i < n; ++i) {
      Rat cc = random_scalar(rng);
      c.expect(equivalent(schutzenberger(apply_e(p, i, cc)), apply_e(s, n - i, 1 / cc)),
               [&] { return show(p) + " i=" + std::to_string(i) + " c=" + to_string(cc); });
    }
  });
  run("S_basic_plucker", "basic Pluecker coordinates of S p in terms of those of p",
      [&](Check& c, Rng&, const CrystalPoint& p) {
        auto s = schutzenberger(p);
        for (int i = 1; i <= n - k; ++i)
          for (int j = i; j <= i + k - 1; ++j) {
            Rat lhs = s.M.plucker(basic_subset(n, k, i, j)) / s.M.plucker(interval(n - k + 1, n));
            Rat rhs = rat_pow(p.t, std::min(j, n - k) - i + 1) * p.M.plucker(basic_subset(n, k, n - k - i + 2, n - j)) /
                      p.M.plucker(interval(n - j - k + 1, n - j));
            c.expect(lhs == rhs, [&] { return show(p) + " i=" + std::to_string(i) + " j=" + std::to_string(j); });
          }
      });
  run("D_involution", "D is an involution into Gr(n-k, n)", [&](Check& c, Rng&, const CrystalPoint& p) {
    auto d = duality(p);
    c.expect(d.M.k() == n - k && equivalent(duality(d), p), [&] { return show(p); });
  });
  run("D_commutes", "D commutes with S and with PR", [&](Check& c, Rng&, const CrystalPoint& p) {
    auto d = duality(p);
    c.expect(equivalent(schutzenberger(d), duality(schutzenberger(p))) &&
                 equivalent(cyclic_shift(d), duality(cyclic_shift(p))),
             [&] { return show(p); });
  });
  run("D_phi_epsilon", "phi_i D = epsilon_i and epsilon_i D = phi_i", [&](Check& c, Rng&, const CrystalPoint& p) {
    auto d = duality(p);
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && phi(d, i) == epsilon(p, i) && epsilon(d, i) == phi(p, i);
    c.expect(ok, [&] { return show(p); });
  });
  run("D_crystal_action", "e_i^c D = D e_i^{1/c}", [&](Check& c, Rng& rng, const CrystalPoint& p) {
    auto d = duality(p);
    for (int i = 0; i < n; ++i) {
      Rat cc = random_scalar(rng);
      c.expect(equivalent(apply_e(d, i, cc), duality(apply_e(p, i, 1 / cc))),
               [&] { return show(p) + " i=" + std::to_string(i) + " c=" + to_string(cc); });
    }
  });
  run("D_loop_inverse", "beta^(n-k-1) g(D p) = inv(g(p))", [&](Check& c, Rng&, const CrystalPoint& p) {
    auto lhs = scaled(g_matrix(duality(p)), beta(p.t, k + n).pow(n - k - 1));
    c.expect(lhs == loop_inverse(g_matrix(p)), [&] { return show(p); });
  });
  return out;
}

std::vector<Record> symmetry_tableaux(const Env& env, int n, int k) {
  Params p = nk(n, k);
  p.emplace_back("L_max", env.cfg.L_max);
  Check rot("symmetry", "rot_reverses_crystal", "rot(e_i T) = f_{n-i}(rot T) on rectangular tableaux", p);
  Check refl("symmetry", "refl_dualizes_crystal", "refl(e_i T) = f_i(refl T) on rectangular tableaux", p);
  for (int L = 0; L <= env.cfg.L_max; ++L)
    for (const auto& T : rectangular_tableaux(n, k, L)) {
      auto b = KRectangle::from_tableau(T, k);
      auto rT = rot_tableau(T);
      auto fT = rect_refl(b).to_tableau();
      rot.expect(rect_rot(b).to_tableau() == rT, [&] { return "T=" + show(T); });
      refl.expect(fT == column_complement(T, k) && rect_refl(rect_refl(b)) == b, [&] { return "T=" + show(T); });
      for (int i = 0; i < n; ++i) {
        auto e = affine_op(T, i, Dir::Raise);
        auto via_rot = affine_op(rT, n - i, Dir::Lower);
        rot.expect(e.has_value() == via_rot.has_value() && (!e || rot_tableau(*e) == *via_rot),
                   [&] { return "T=" + show(T) + " i=" + std::to_string(i); });
        auto via_refl = affine_op(fT, i, Dir::Lower);
        refl.expect(e.has_value() == via_refl.has_value() &&
                        (!e || rect_refl(KRectangle::from_tableau(*e, k)) == KRectangle::from_tableau(*via_refl, n - k)),
                    [&] { return "T=" + show(T) + " i=" + std::to_string(i); });
      }
    }
  return {rot.finish(), refl.finish()};
}

std::vector<Record> jacobi(const Env& env, int n) {
  Params p = {{"n", n}};
  Check c("symmetry", "jacobi_complement", "minors of the twisted inverse are complementary minors over det",
          p);
  Rng rng = env.stream("symmetry", "jacobi_complement", p);
  for (int trial = 0; trial < env.cfg.trials; ++trial) {
    RatMatrix x(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = rng.uniform(-4, 4);
    } while (determinant(x) == 0);
    RatMatrix xi = inverse(x), xc(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) xc(i, j) = xi(i, j) * sign_pow(i + j);
    std::vector<std::size_t> I, J;
    for (int a = 0; a < n; ++a) {
      if (rng.uniform(0, 1)) I.push_back(a);
    }
    if (I.empty() || static_cast<int>(I.size()) == n) continue;
    std::vector<std::size_t> all(n);
    for (int a = 0; a < n; ++a) all[a] = a;
    // random column set of the same size
    std::vector<std::size_t> pool = all;
    for (std::size_t a = 0; a < I.size(); ++a) {
      auto at = static_cast<std::size_t>(rng.uniform(static_cast<long>(a), n - 1));
      std::swap(pool[a], pool[at]);
      J.push_back(pool[a]);
    }
    std::sort(J.begin(), J.end());
    auto comp = [&](const std::vector<std::size_t>& s) {
      std::vector<std::size_t> out;
      for (auto a : all)
        if (!std::binary_search(s.begin(), s.end(), a)) out.push_back(a);
      return out;
    };
    c.expect(determinant(xc.select(I, J)) == determinant(x.select(comp(J), comp(I))) / determinant(x),
             [&] { return show(x); });
  }
  return {c.finish()};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"combinatorial", "geometric", "parametrization",
                                                 "tropical",      "loopgroup", "symmetry"};
  return names;
}

void validate(const VerifyConfig& cfg) {
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw InvariantViolation("n range must satisfy 2 <= n_min <= n_max");
  if (cfg.n_max > 8) throw InvariantViolation("n above 8 is out of range");
  if (cfg.trials < 1) throw InvariantViolation("trials must be at least 1");
  if (cfg.L_max < 0) throw InvariantViolation("L_max must be nonnegative");
  for (int k : cfg.k_list)
    if (k < 1) throw InvariantViolation("k must be positive");
  for (const auto& s : cfg.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw InvariantViolation("unknown suite: " + s);
}

bool Report::passed() const {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.passed(); });
}

Report run_verify(const VerifyConfig& cfg) {
  validate(cfg);
  Env env{cfg, Rng(cfg.seed)};
  auto selected = [&](const std::string& s) {
    return cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
  };
  auto ks = [&](int n) {
    std::vector<int> out;
    for (int k = 1; k < n; ++k)
      if (cfg.k_list.empty() || std::find(cfg.k_list.begin(), cfg.k_list.end(), k) != cfg.k_list.end())
        out.push_back(k);
    return out;
  };

  std::vector<Task> tasks;
  auto per_nk = [&](const std::string& suite, auto fn) {
    if (!selected(suite)) return;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
      for (int k : ks(n)) tasks.push_back([&env, fn, n, k] { return fn(env, n, k); });
  };
  per_nk("combinatorial", combinatorial_nk);
  per_nk("geometric", geometric_nk);
  per_nk("parametrization", parametrization_nk);
  per_nk("tropical", tropical_nk);
  per_nk("tropical", oracle_maps);
  per_nk("loopgroup", loopgroup_nk);
  per_nk("symmetry", symmetry_nk);
  per_nk("symmetry", symmetry_tableaux);
  if (selected("combinatorial")) tasks.push_back([] { return worked_examples(); });
  if (selected("parametrization")) tasks.push_back([] { return network_example(); });
  if (selected("tropical")) tasks.push_back([&env] { return oracle_dags(env); });
  if (selected("symmetry"))
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) tasks.push_back([&env, n] { return jacobi(env, n); });

  std::vector<std::vector<Record>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next++) < tasks.size();) {
      auto start = std::chrono::steady_clock::now();
      try {
        results[t] = tasks[t]();
      } catch (const std::exception& e) {
        Record r;
        r.suite = "error";
        r.check_id = "task_" + std::to_string(t);
        r.anchor = "uncaught exception";
        r.cases = 1;
        r.failures = 1;
        r.counterexample = e.what();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        results[t] = {r};
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::min<std::size_t>(hw, tasks.size()); ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Report report;
  report.config = cfg;
  for (auto& rs : results)
    for (auto& r : rs) report.records.push_back(std::move(r));
  std::stable_sort(report.records.begin(), report.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.suite, a.check_id, a.parameters) < std::tie(b.suite, b.check_id, b.parameters);
  });
  return report;
}

}  // namespace geomcrystal

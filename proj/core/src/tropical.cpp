#include "geomcrystal/tropical.hpp"

#include <algorithm>
#include <sstream>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

std::string map_name(MapId id, int i) {
  switch (id) {
    case MapId::PR: return "PR";
    case MapId::PRInverse: return "PR_inv";
    case MapId::Gamma: return "gamma_" + std::to_string(i);
    case MapId::Phi: return "phi_" + std::to_string(i);
    case MapId::Epsilon: return "eps_" + std::to_string(i);
    case MapId::Decoration: return "f";
    case MapId::E1: return "e1_c";
    case MapId::S: return "S";
    case MapId::D: return "D";
    case MapId::GeometricPR: return "pr_birational";
  }
  return "?";
}

SymbolicContext::SymbolicContext(int n, int rows) : n_(n), rows_(rows), pool_(std::make_unique<ExprPool>()) {
  if (rows < 1 || rows > n - 1) throw InvariantViolation("chart needs 1 <= rows <= n-1");
  chart_ = symbolic_rectangle(*pool_, n, rows);
}

std::vector<std::string> SymbolicContext::chart_variables() const {
  std::vector<std::string> v;
  for (int i = 1; i <= rows_; ++i)
    for (int j = i; j <= i + dim() - 1; ++j) v.push_back(rect_var(i, j));
  v.push_back("t");
  return v;
}

Expr SymbolicContext::plucker(const Subset& J) {
  Subset s;
  for (int x : J) s.push_back(reduce_index(x, n_));
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end() || static_cast<int>(s.size()) != dim())
    throw DomainError("Pluecker coordinate is identically zero");
  auto it = plucker_cache_.find(s);
  if (it != plucker_cache_.end()) return it->second;
  auto v = plucker_via_jtableaux<Expr>(chart_, s, pool_->one());
  if (!v) throw DomainError("Pluecker coordinate has no tableau expansion");
  plucker_cache_.emplace(s, *v);
  return *v;
}

const SymbolicMap& SymbolicContext::map(MapId id, int i) {
  if (id == MapId::Gamma || id == MapId::Phi || id == MapId::Epsilon) i = reduce_index(i, n_) % n_;
  else i = 0;
  auto key = std::make_pair(id, i);
  auto it = maps_.find(key);
  if (it == maps_.end()) it = maps_.emplace(key, build(id, i)).first;
  return it->second;
}

SymbolicMap SymbolicContext::finish(std::string name, ChartShape out, std::vector<Expr> outputs, bool uses_c) {
  SymbolicMap m;
  m.name = std::move(name);
  m.input = {n_, rows_};
  m.output = out;
  m.inputs = chart_variables();
  if (uses_c) m.inputs.push_back("c");
  m.outputs = std::move(outputs);
  m.program = std::make_shared<Program>(*pool_, m.outputs, m.inputs);
  return m;
}

// Output chart coordinates X'_{ij} = P'(J_{i,j}) / P'(J_{i+1,j}) for a chart with out_rows rows.
std::vector<Expr> SymbolicContext::chart_ratios(int out_rows,
                                                const std::function<Expr(const Subset&)>& basic) {
  const int d = n_ - out_rows;
  std::vector<Expr> out;
  for (int i = 1; i <= out_rows; ++i)
    for (int j = i; j <= i + d - 1; ++j)
      out.push_back(basic(basic_subset(n_, d, i, j)) / basic(basic_subset(n_, d, i + 1, j)));
  return out;
}

namespace {

bool contains(const Subset& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

Subset shifted(const Subset& s, int by) {
  Subset r;
  for (int x : s) r.push_back(x + by);
  return r;
}

}  // namespace

SymbolicMap SymbolicContext::build(MapId id, int i) {
  ExprPool& P = *pool_;
  const int n = n_, d = dim(), k = rows_;
  const Expr t = chart_.t;
  auto ratio = [&](const Subset& a, const Subset& b) { return plucker(a) / plucker(b); };
  const std::string name = map_name(id, i);

  switch (id) {
    case MapId::PR:
      return finish(name, {n, k}, chart_ratios(k, [&](const Subset& J) {
                      Expr v = plucker(shifted(J, -1));
                      return contains(J, 1) ? t * v : v;
                    }),
                    false);
    case MapId::PRInverse:
      return finish(name, {n, k}, chart_ratios(k, [&](const Subset& J) {
                      Expr v = plucker(shifted(J, 1));
                      return contains(J, n) ? v / t : v;
                    }),
                    false);
    case MapId::E1: {
      const Expr c = P.var("c");
      const Subset j11 = basic_subset(n, d, 1, 1);
      return finish(name, {n, k}, chart_ratios(k, [&](const Subset& J) {
                      Expr v = plucker(J);
                      return J == j11 ? c * v : v;
                    }),
                    true);
    }
    case MapId::Gamma: {
      int r = i == 0 ? n : i;
      Expr v = ratio(interval(r - d + 1, r), interval(r - d, r - 1));
      return finish(name, {n, 0}, {r > d ? v * t : v}, false);
    }
    case MapId::Phi: {
      Expr v = ratio(join(interval(i - d + 1, i - 1), {i + 1}), interval(i - d + 1, i));
      return finish(name, {n, 0}, {i == 0 ? v / t : v}, false);
    }
    case MapId::Epsilon: {
      Expr num = plucker(join(interval(i - d + 1, i - 1), {i + 1})) * plucker(interval(i - d + 1, i));
      Expr den = plucker(interval(i - d, i - 1)) * plucker(interval(i - d + 2, i + 1));
      Expr v = num / den;
      return finish(name, {n, 0}, {reduce_index(i, n) == reduce_index(d, n) ? v / t : v}, false);
    }
    case MapId::Decoration: {
      std::vector<Expr> terms;
      for (int r = 1; r <= n; ++r)
        if (r != d) terms.push_back(ratio(join({r - d}, interval(r - d + 2, r)), interval(r - d + 1, r)));
      terms.push_back(t * ratio(join(interval(2, d), {n}), interval(1, d)));
      return finish(name, {n, 0}, {P.sum(terms)}, false);
    }
    case MapId::S: {
      // basic coordinates of the image, up to the common factor P_{[n-d+1,n]}(M')
      auto image = [&](int a, int b) {
        Expr v = plucker(basic_subset(n, d, k - a + 2, n - b)) / plucker(interval(n - b - d + 1, n - b));
        return P.mul(P.pow(t, std::min(b, k) - a + 1), v);
      };
      std::vector<Expr> out;
      for (int a = 1; a <= k; ++a)
        for (int b = a; b <= a + d - 1; ++b) out.push_back(image(a, b) / image(a + 1, b));
      return finish(name, {n, k}, out, false);
    }
    case MapId::D: {
      // D = S o T_{w0} o perp; the intermediate point lies in Gr(k, n), its image in the chart with d rows.
      auto via_perp = [&](const Subset& I) {
        std::vector<bool> in(n + 1, false);
        for (int x : I) in[n + 1 - reduce_index(x, n)] = true;
        Subset comp;
        for (int x = 1; x <= n; ++x)
          if (!in[x]) comp.push_back(x);
        return plucker(comp);
      };
      auto image = [&](int a, int b) {
        Expr v = via_perp(basic_subset(n, k, d - a + 2, n - b)) / via_perp(interval(n - b - k + 1, n - b));
        return P.mul(P.pow(t, std::min(b, d) - a + 1), v);
      };
      std::vector<Expr> out;
      for (int a = 1; a <= d; ++a)
        for (int b = a; b <= a + k - 1; ++b) out.push_back(image(a, b) / image(a + 1, b));
      return finish(name, {n, d}, out, false);
    }
    case MapId::GeometricPR: {
      auto y = geometric_pr(chart_);
      return finish(name, {n, k}, y.X, false);
    }
  }
  throw InvariantViolation("unknown map");
}

SymbolicMap compose(SymbolicContext& ctx, const SymbolicMap& outer, const SymbolicMap& inner) {
  if (outer.input.rows != inner.output.rows || inner.input.rows != ctx.rows() || outer.input.rows != ctx.rows())
    throw InvariantViolation("charts do not match for composition");
  std::map<std::string, Expr> repl;
  auto vars = ctx.chart_variables();
  for (std::size_t a = 0; a + 1 < vars.size(); ++a) repl.emplace(vars[a], inner.outputs[a]);
  SymbolicMap m;
  m.name = outer.name + "*" + inner.name;
  m.input = inner.input;
  m.output = outer.output;
  for (Expr e : outer.outputs) m.outputs.push_back(ctx.pool().substitute(e, repl));
  m.inputs = vars;
  bool uses_c = std::find(outer.inputs.begin(), outer.inputs.end(), "c") != outer.inputs.end() ||
                std::find(inner.inputs.begin(), inner.inputs.end(), "c") != inner.inputs.end();
  if (uses_c) m.inputs.push_back("c");
  m.program = std::make_shared<Program>(ctx.pool(), m.outputs, m.inputs);
  return m;
}

std::vector<long> trop_apply(const SymbolicMap& m, std::span<const long> point) {
  if (point.size() != m.inputs.size()) throw MissingBinding("point does not bind every input of " + m.name);
  return m.program->run_tropical(point);
}

TropicalCrystal::TropicalCrystal(int n, int k) : ctx_(n, k) {}

std::vector<long> TropicalCrystal::run(MapId id, int i, const std::vector<long>& B, long L, const long* m) {
  std::vector<long> in = B;
  in.push_back(L);
  if (m) in.push_back(*m);
  return trop_apply(ctx_.map(id, i), in);
}

std::vector<long> TropicalCrystal::pr(const std::vector<long>& B, long L) { return run(MapId::PR, 0, B, L); }
std::vector<long> TropicalCrystal::pr_inverse(const std::vector<long>& B, long L) {
  return run(MapId::PRInverse, 0, B, L);
}

std::vector<long> TropicalCrystal::e(int i, long m, const std::vector<long>& B, long L) {
  const int s = reduce_index(i, n()) % n() - 1;  // conjugate e_1 by pr^s, s in [-1, n-2]
  std::vector<long> x = B;
  for (int a = 0; a < s; ++a) x = pr_inverse(x, L);
  if (s < 0) x = pr(x, L);
  x = run(MapId::E1, 0, x, L, &m);
  for (int a = 0; a < s; ++a) x = pr(x, L);
  if (s < 0) x = pr_inverse(x, L);
  return x;
}

long TropicalCrystal::gamma(int i, const std::vector<long>& B, long L) { return run(MapId::Gamma, i, B, L)[0]; }
long TropicalCrystal::phi(int i, const std::vector<long>& B, long L) { return run(MapId::Phi, i, B, L)[0]; }
long TropicalCrystal::epsilon(int i, const std::vector<long>& B, long L) { return run(MapId::Epsilon, i, B, L)[0]; }
long TropicalCrystal::decoration(const std::vector<long>& B, long L) { return run(MapId::Decoration, 0, B, L)[0]; }
std::vector<long> TropicalCrystal::schutzenberger(const std::vector<long>& B, long L) { return run(MapId::S, 0, B, L); }
std::vector<long> TropicalCrystal::duality(const std::vector<long>& B, long L) { return run(MapId::D, 0, B, L); }
std::vector<long> TropicalCrystal::geometric_promotion(const std::vector<long>& B, long L) {
  return run(MapId::GeometricPR, 0, B, L);
}

bool TropReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const TheoremOutcome& o) { return o.failures == 0; });
}

namespace {

std::string show(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t a = 0; a < v.size(); ++a) os << (a ? "," : "") << v[a];
  os << ")";
  return os.str();
}

class Tally {
 public:
  Tally(std::string id, std::string anchor) { o_.check_id = std::move(id), o_.anchor = std::move(anchor); }
  void record(bool ok, const std::function<std::string()>& describe) {
    ++o_.cases;
    if (ok) return;
    if (o_.failures++ == 0) o_.counterexample = describe();
  }
  TheoremOutcome result() const { return o_; }

 private:
  TheoremOutcome o_;
};

}  // namespace

TropReport check_trop_theorems(int n, int k, int L_max, int box_L_max) {
  TropReport report;
  report.n = n;
  report.k = k;
  report.L_max = L_max;
  TropicalCrystal tc(n, k);

  Tally pr_t("trop_pr", "tropical cyclic shift equals promotion on k-rectangles");
  Tally bpr_t("trop_birational_pr", "tropical birational Bender-Knuth promotion equals promotion");
  Tally gamma_t("trop_gamma", "tropical weight equals tableau content");
  Tally phi_t("trop_phi_eps", "tropical phi_i, eps_i equal minus the combinatorial statistics");
  Tally e_t("trop_e", "e_i(1,b) matches the raising operator, defined iff the decoration stays nonnegative");
  Tally f_t("trop_f", "e_i(-1,b) matches the lowering operator, defined iff the decoration stays nonnegative");
  Tally dec_t("trop_decoration_on_rectangles", "tropical decoration is nonnegative on k-rectangles");
  Tally s_t("trop_S", "tropical Schutzenberger involution equals 180-degree rotation");
  Tally d_t("trop_D", "tropical duality equals column-complement reflection");
  Tally box_t("trop_decoration_box", "nonnegativity of the tropical decoration cuts out k-rectangles");

  for (int L = 0; L <= L_max; ++L) {
    for (const Tableau& T : rectangular_tableaux(n, k, L)) {
      const KRectangle b = KRectangle::from_tableau(T, k);
      const auto& B = b.entries();
      auto where = [&](const std::string& extra) {
        return "b=" + show(B) + " L=" + std::to_string(L) + (extra.empty() ? "" : " " + extra);
      };

      auto expect_pr = KRectangle::from_tableau(promote(T), k).entries();
      auto got_pr = tc.pr(B, L);
      pr_t.record(got_pr == expect_pr, [&] { return where("expected " + show(expect_pr) + " got " + show(got_pr)); });
      auto got_bpr = tc.geometric_promotion(B, L);
      bpr_t.record(got_bpr == expect_pr, [&] { return where("expected " + show(expect_pr) + " got " + show(got_bpr)); });

      auto content = T.content();
      for (int i = 1; i <= n; ++i) {
        long g = tc.gamma(i, B, L);
        gamma_t.record(g == content[i - 1], [&] {
          return where("i=" + std::to_string(i) + " expected " + std::to_string(content[i - 1]) + " got " +
                       std::to_string(g));
        });
      }

      long fb = tc.decoration(B, L);
      dec_t.record(fb >= 0, [&] { return where("f=" + std::to_string(fb)); });

      for (int i = 0; i < n; ++i) {
        auto st = affine_stats(T, i);
        long ph = tc.phi(i, B, L), ep = tc.epsilon(i, B, L);
        phi_t.record(ph == -st.phi && ep == -st.epsilon, [&] {
          return where("i=" + std::to_string(i) + " phi=" + std::to_string(ph) + " eps=" + std::to_string(ep) +
                       " combinatorial phi=" + std::to_string(st.phi) + " eps=" + std::to_string(st.epsilon));
        });
        for (long m : {1L, -1L}) {
          auto moved = tc.e(i, m, B, L);
          bool defined = tc.decoration(moved, L) >= 0;
          auto comb = affine_op(T, i, m > 0 ? Dir::Raise : Dir::Lower);
          bool ok = defined == comb.has_value();
          if (ok && defined) ok = moved == KRectangle::from_tableau(*comb, k).entries();
          bool bracket_ok = comb.has_value() == (m > 0 ? st.epsilon > 0 : st.phi > 0);
          (m > 0 ? e_t : f_t).record(ok && bracket_ok, [&] {
            return where("i=" + std::to_string(i) + " image " + show(moved) + (defined ? " defined" : " undefined") +
                         (comb ? " combinatorial " + show(KRectangle::from_tableau(*comb, k).entries())
                               : std::string(" combinatorial undefined")));
          });
        }
      }

      auto got_s = tc.schutzenberger(B, L);
      auto expect_s = rect_rot(b).entries();
      s_t.record(got_s == expect_s, [&] { return where("expected " + show(expect_s) + " got " + show(got_s)); });
      auto got_d = tc.duality(B, L);
      auto expect_d = rect_refl(b).entries();
      d_t.record(got_d == expect_d, [&] { return where("expected " + show(expect_d) + " got " + show(got_d)); });
    }
  }

  const int cells = k * (n - k);
  const auto& f_prog = *tc.context().map(MapId::Decoration).program;
  for (int L = 0; L <= box_L_max; ++L) {
    const long lo = -2, hi = L + 2;
    std::vector<long> point(cells + 1, lo);
    point[cells] = L;
    std::vector<long> B(cells);
    long out[1];
    for (;;) {
      f_prog.run_tropical(point, out);
      std::copy(point.begin(), point.begin() + cells, B.begin());
      bool valid = KRectangle::is_valid(n, k, B, L);
      box_t.record((out[0] >= 0) == valid, [&] {
        return "b=" + show(B) + " L=" + std::to_string(L) + " f=" + std::to_string(out[0]) +
               (valid ? " is" : " is not") + " a k-rectangle";
      });
      int pos = 0;
      while (pos < cells && point[pos] == hi) point[pos++] = lo;
      if (pos == cells) break;
      ++point[pos];
    }
  }

  for (const Tally* t : {&pr_t, &bpr_t, &gamma_t, &phi_t, &e_t, &f_t, &dec_t, &s_t, &d_t, &box_t})
    report.outcomes.push_back(t->result());
  return report;
}

}  // namespace geomcrystal

// Runs the seven acceptance criteria and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "geomcrystal/verify.hpp"

using namespace geomcrystal;

namespace {

struct Selection {
  std::vector<const Record*> records;
  long cases = 0;
  long failures = 0;
  const Record* first_failure = nullptr;
};

Selection pick(const Report& rep, const std::set<std::string>& ids) {
  Selection s;
  for (const auto& r : rep.records)
    if (ids.count(r.check_id)) {
      s.records.push_back(&r);
      s.cases += r.cases;
      s.failures += r.failures;
      if (!r.passed() && !s.first_failure) s.first_failure = &r;
    }
  return s;
}

std::string params(const Record& r) {
  std::string s;
  for (const auto& [k, v] : r.parameters) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  VerifyConfig cfg;
  std::set<std::string> ids;
  // extra requirement on the selected records, beyond every record passing
  std::function<std::string(const Selection&)> extra;
};

VerifyConfig config(std::vector<std::string> suites, int n_max, int trials, int L_max = 3) {
  VerifyConfig c;
  c.n_min = 2;
  c.n_max = n_max;
  c.L_max = L_max;
  c.box_L_max = L_max;
  c.trials = trials;
  c.seed = 20240601;
  c.suites = std::move(suites);
  return c;
}

std::string min_cases(const Selection& s, const std::string& id, long want) {
  for (const auto* r : s.records)
    if (r->check_id == id && r->cases < want)
      return id + " at " + params(*r) + " has " + std::to_string(r->cases) + " cases, want >= " + std::to_string(want);
  return {};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "combinatorial: pr^n = id, crystal axioms, evacuation = rot (n<=5, L<=3)", 60,
       config({"combinatorial"}, 5, 1), {"pr_order", "crystal_axioms", "evacuation_is_rot", "bk_piecewise_linear"}, {}},
      {2, "worked examples reproduce byte-exactly", 60, config({"combinatorial"}, 2, 1, 0), {"worked_examples"}, {}},
      {3, "parametrization: J-tableau sums, Theta roundtrips, network minor, basic monomials (n<=6)", 120,
       config({"parametrization"}, 6, 20),
       {"jtableau_sum", "theta_roundtrip", "network_minor_example", "basic_plucker_monomial"}, {}},
      {4, "tropical: PR = pr, crystal theorems, decoration box, S = rot, D = refl (n<=5, L<=3)", 600,
       config({"tropical"}, 5, 1),
       {"trop_pr", "trop_birational_pr", "trop_gamma", "trop_phi_eps", "trop_e", "trop_f",
        "trop_decoration_on_rectangles", "trop_decoration_box", "trop_S", "trop_D"},
       {}},
      {5, "loop group: g structure, det g, h g, intertwining, chi = f (50 points per n,k)", 120,
       config({"loopgroup"}, 5, 50),
       {"g_borel_span", "g_rank", "g_determinant", "g_chart", "g_intertwines", "chi_decoration", "h_times_g"},
       [](const Selection& s) {
         for (const char* id : {"g_borel_span", "g_determinant", "h_times_g", "chi_decoration"})
           if (auto m = min_cases(s, id, 50); !m.empty()) return m;
         return std::string();
       }},
      {6, "symmetry: S and D corollaries (50 points per n,k), rot/refl on tableaux", 600,
       config({"symmetry"}, 5, 50),
       {"S_involution", "S_promotion", "S_phi_epsilon", "S_crystal_action", "S_basic_plucker", "D_involution",
        "D_commutes", "D_phi_epsilon", "D_crystal_action", "D_loop_inverse", "rot_reverses_crystal",
        "refl_dualizes_crystal", "jacobi_complement"},
       [](const Selection& s) {
         for (const char* id : {"S_involution", "S_promotion", "D_involution", "D_commutes", "D_loop_inverse"})
           if (auto m = min_cases(s, id, 50); !m.empty()) return m;
         return std::string();
       }},
      {7, "oracle: min-plus = valuation on 500 random DAGs and every symbolic map output", 600,
       config({"tropical"}, 5, 50), {"oracle_random_dags", "oracle_symbolic_maps"},
       [](const Selection& s) {
         if (auto m = min_cases(s, "oracle_random_dags", 500); !m.empty()) return m;
         for (const auto* r : s.records)
           if (r->check_id == "oracle_symbolic_maps" && r->cases < 50)
             return "too few map evaluations at " + params(*r);
         return std::string();
       }},
  };

  int failed = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    Selection sel;
    try {
      auto rep = run_verify(c.cfg);
      sel = pick(rep, c.ids);
      std::set<std::string> seen;
      for (const auto* r : sel.records) seen.insert(r->check_id);
      for (const auto& id : c.ids)
        if (!seen.count(id)) problem = "no records for " + id;
      for (const auto& r : rep.records)
        if (r.suite == "error") problem = "task error: " + r.counterexample;
      if (problem.empty() && sel.first_failure)
        problem = sel.first_failure->check_id + " at " + params(*sel.first_failure) + ": " +
                  sel.first_failure->counterexample;
      if (problem.empty() && c.extra) problem = c.extra(sel);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && secs > c.budget_s)
      problem = "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s";
    const bool ok = problem.empty();
    if (!ok) ++failed;
    std::printf("[%s] criterion %d: %s | %zu checks, %ld cases, %ld failures, %.2f s%s%s\n", ok ? "PASS" : "FAIL",
                c.number, c.title.c_str(), sel.records.size(), sel.cases, sel.failures, secs, ok ? "" : " | ",
                problem.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

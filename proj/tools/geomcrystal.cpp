#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "geomcrystal/errors.hpp"
#include "geomcrystal/parametrization.hpp"
#include "geomcrystal/tableau.hpp"
#include "geomcrystal/tropical.hpp"
#include "geomcrystal/verify.hpp"

namespace gc = geomcrystal;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw UsageError("not an integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: " + s);
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string n = "2-5";
  std::string k = "all";
  int L_max = 3;
  int box_L_max = -1;
  int trials = 10;
  std::string seed;
  std::string suites = "all";
  std::string out;
  bool timing = false;
};

gc::VerifyConfig make_config(const VerifyArgs& a) {
  gc::VerifyConfig cfg;
  if (auto dash = a.n.find('-'); dash != std::string::npos) {
    cfg.n_min = to_int(a.n.substr(0, dash));
    cfg.n_max = to_int(a.n.substr(dash + 1));
  } else {
    cfg.n_min = cfg.n_max = to_int(a.n);
  }
  if (a.k != "all")
    for (const auto& s : split_list(a.k)) cfg.k_list.push_back(to_int(s));
  cfg.L_max = a.L_max;
  cfg.box_L_max = a.box_L_max;
  cfg.trials = a.trials;
  std::string seed = a.seed;
  if (seed.empty())
    if (const char* env = std::getenv("GEOMCRYSTAL_SEED")) seed = env;
  if (!seed.empty()) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(seed, &used, 0);
      if (used != seed.size()) throw UsageError("bad seed: " + seed);
    } catch (const std::logic_error&) {
      throw UsageError("bad seed: " + seed);
    }
  }
  if (a.suites != "all") cfg.suites = split_list(a.suites);
  try {
    gc::validate(cfg);
  } catch (const gc::InvariantViolation& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

json report_json(const gc::Report& rep, bool timing) {
  const auto& cfg = rep.config;
  json j;
  j["schema"] = "geomcrystal/1";
  json c;
  c["n_min"] = cfg.n_min;
  c["n_max"] = cfg.n_max;
  c["k"] = cfg.k_list.empty() ? json("all") : json(cfg.k_list);
  c["L_max"] = cfg.L_max;
  c["box_L_max"] = cfg.box_L_max < 0 ? cfg.L_max : cfg.box_L_max;
  c["trials"] = cfg.trials;
  c["seed"] = cfg.seed;
  c["suites"] = cfg.suites.empty() ? gc::suite_names() : cfg.suites;
  j["config"] = c;
  long failed = 0;
  json records = json::array();
  for (const auto& r : rep.records) {
    json x;
    x["suite"] = r.suite;
    x["check_id"] = r.check_id;
    x["anchor"] = r.anchor;
    json params = json::object();
    for (const auto& [key, v] : r.parameters) params[key] = v;
    x["parameters"] = params;
    x["status"] = r.passed() ? "pass" : "fail";
    x["cases"] = r.cases;
    x["failures"] = r.failures;
    if (!r.counterexample.empty()) x["counterexample"] = r.counterexample;
    if (timing) x["elapsed_ms"] = r.elapsed_ms;
    if (!r.passed()) ++failed;
    records.push_back(std::move(x));
  }
  j["passed"] = failed == 0;
  j["summary"] = {{"checks", rep.records.size()}, {"failed", failed}};
  j["records"] = std::move(records);
  return j;
}

int cmd_verify(const VerifyArgs& a) {
  auto cfg = make_config(a);
  auto rep = gc::run_verify(cfg);
  std::string text = report_json(rep, a.timing).dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + a.out);
    f << text;
  }
  for (const auto& r : rep.records)
    if (!r.passed()) std::cerr << "FAIL " << r.suite << "/" << r.check_id << ": " << r.counterexample << "\n";
  return rep.passed() ? kPass : kFail;
}

// ---------------------------------------------------------------- tableau

struct TableauArgs {
  std::string action;
  int n = 0;
  int i = 1;
  std::string input;
};

int cmd_tableau(const TableauArgs& a) {
  gc::Tableau t;
  try {
    t = gc::parse_tableau(read_input(a.input), a.n);
  } catch (const gc::ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what() << "\n";
    return kUsage;
  }
  std::optional<gc::Tableau> out;
  if (a.action == "promote") {
    out = gc::promote(t);
  } else if (a.action == "evacuate") {
    out = gc::evacuate(t);
  } else if (a.action == "bk") {
    if (a.i < 1 || a.i >= a.n) throw UsageError("bk needs 1 <= i <= n-1");
    out = gc::bender_knuth(t, a.i);
  } else {
    if (a.i < 0 || a.i >= a.n) throw UsageError("e and f need 0 <= i <= n-1");
    auto dir = a.action == "e" ? gc::Dir::Raise : gc::Dir::Lower;
    // index 0 only exists for rectangles
    out = a.i == 0 ? gc::affine_op(t, 0, dir) : gc::crystal_op(t, a.i, dir);
  }
  std::cout << (out ? gc::format_tableau(*out) : "undefined\n");
  return kPass;
}

// ---------------------------------------------------------------- trop

struct TropArgs {
  std::string map;
  std::string input;
};

int cmd_trop(const TropArgs& a) {
  json in;
  try {
    in = json::parse(read_input(a.input));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("bad JSON: ") + e.what());
  }
  for (const char* key : {"B", "L", "n", "k"})
    if (!in.contains(key)) throw UsageError(std::string("missing field ") + key);
  std::vector<long> B;
  long L;
  int n, k;
  try {
    B = in["B"].get<std::vector<long>>();
    L = in["L"].get<long>();
    n = in["n"].get<int>();
    k = in["k"].get<int>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad field: ") + e.what());
  }
  if (n < 2 || k < 1 || k >= n) throw UsageError("need 1 <= k <= n-1");
  if (static_cast<int>(B.size()) != k * (n - k))
    throw UsageError("B has " + std::to_string(B.size()) + " entries, expected k(n-k) = " + std::to_string(k * (n - k)));

  gc::TropicalCrystal tc(n, k);
  json out;
  const std::string& m = a.map;
  if (m == "f") {
    long f = tc.decoration(B, L);
    out["f"] = f;
    out["k_rectangle"] = f >= 0;
  } else {
    std::vector<long> r;
    int out_k = k;
    if (m == "PR") {
      r = tc.pr(B, L);
    } else if (m == "PRinv") {
      r = tc.pr_inverse(B, L);
    } else if (m == "S") {
      r = tc.schutzenberger(B, L);
    } else if (m == "D") {
      r = tc.duality(B, L);
      out_k = n - k;
    } else if (m.size() >= 3 && m[0] == 'e' && (m.back() == '+' || m.back() == '-')) {
      int i = to_int(m.substr(1, m.size() - 2));
      r = tc.e(i, m.back() == '+' ? 1 : -1, B, L);
    } else {
      throw UsageError("unknown map " + m + " (PR, PRinv, e<i>+, e<i>-, S, D, f)");
    }
    out["B"] = r;
    out["L"] = L;
    if (m == "D") out["k"] = out_k;
  }
  std::cout << out.dump() << "\n";
  return kPass;
}

// ---------------------------------------------------------------- net

int cmd_net(int n, int k) {
  if (n < 2 || k < 1 || k >= n) throw UsageError("need 1 <= k <= n-1");
  std::cout << gc::standard_network(n, k, nullptr).to_dot("N" + std::to_string(k));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine geometric crystals on Grassmannians: checks and tools"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the verification suites and print a JSON report");
  verify->add_option("--n", va.n, "n or range lo-hi")->capture_default_str();
  verify->add_option("--k", va.k, "comma-separated k values or 'all'")->capture_default_str();
  verify->add_option("--L-max", va.L_max, "largest rectangle width")->capture_default_str();
  verify->add_option("--box-L-max", va.box_L_max, "largest width for the decoration box check (default L-max)");
  verify->add_option("--trials", va.trials, "random samples per check")->capture_default_str();
  verify->add_option("--seed", va.seed, "64-bit seed (default $GEOMCRYSTAL_SEED, else 0)");
  verify->add_option("--suites", va.suites, "comma-separated suites or 'all'")->capture_default_str();
  verify->add_option("--out", va.out, "write the report here instead of stdout");
  verify->add_flag("--timing", va.timing, "include elapsed_ms per record");

  TableauArgs ta;
  auto* tableau = app.add_subcommand("tableau", "apply a crystal operator to a tableau (one row per line)");
  tableau->add_option("action", ta.action, "promote, evacuate, e, f, bk")
      ->required()
      ->check(CLI::IsMember({"promote", "evacuate", "e", "f", "bk"}));
  tableau->add_option("--n", ta.n, "alphabet size")->required();
  tableau->add_option("--i", ta.i, "operator index")->capture_default_str();
  tableau->add_option("--input", ta.input, "file to read (default stdin)");

  TropArgs tr;
  auto* trop = app.add_subcommand("trop", "apply a tropicalized map to {\"B\",\"L\",\"n\",\"k\"}");
  trop->add_option("map", tr.map, "PR, PRinv, e<i>+, e<i>-, S, D, f")->required();
  trop->add_option("--input", tr.input, "file to read (default stdin)");

  int net_n = 0, net_k = 0;
  auto* net = app.add_subcommand("net", "print the planar network N_k as DOT");
  net->add_option("--n", net_n)->required();
  net->add_option("--k", net_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*tableau) return cmd_tableau(ta);
    if (*trop) return cmd_trop(tr);
    if (*net) return cmd_net(net_n, net_k);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

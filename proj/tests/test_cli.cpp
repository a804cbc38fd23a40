#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
};

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("geomcrystal_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the CLI with the given argument string; stdin comes from `input`.
// stderr is folded into the output when `merge` is set.
Result run(const std::string& args, const std::string& input = "", bool merge = false, const std::string& env = "") {
  auto in = scratch() / "stdin.txt";
  std::ofstream(in) << input;
  std::string cmd = env + " \"" GEOMCRYSTAL_EXE "\" " + args + " < \"" + in.string() + "\"" + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliVerify, TropicalSuiteAtNThree) {
  auto r = run("verify --n 3 --L-max 3 --suites tropical");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "geomcrystal/1");
  EXPECT_TRUE(j["passed"].get<bool>());
  bool saw_pr = false;
  for (const auto& rec : j["records"]) {
    EXPECT_EQ(rec["status"], "pass") << rec.dump();
    EXPECT_FALSE(rec["anchor"].get<std::string>().empty());
    EXPECT_FALSE(rec.contains("elapsed_ms"));
    saw_pr = saw_pr || rec["check_id"] == "trop_pr";
  }
  EXPECT_TRUE(saw_pr);
}

TEST(CliVerify, CombinatorialAtNTwo) {
  auto r = run("verify --suites combinatorial --n 2");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["config"]["n_max"], 2);
}

TEST(CliVerify, SameSeedGivesIdenticalBytes) {
  auto a = scratch() / "a.json", b = scratch() / "b.json", c = scratch() / "c.json";
  ASSERT_EQ(run("verify --seed 42 --out \"" + a.string() + "\"").code, 0);
  ASSERT_EQ(run("verify --seed 42 --out \"" + b.string() + "\"").code, 0);
  ASSERT_EQ(run("verify --out \"" + c.string() + "\"", "", false, "GEOMCRYSTAL_SEED=42").code, 0);
  auto sa = slurp(a);
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, slurp(b));
  EXPECT_EQ(sa, slurp(c));
  EXPECT_EQ(json::parse(sa)["config"]["seed"], 42);
}

TEST(CliVerify, TimingIsOptIn) {
  auto r = run("verify --n 2 --suites loopgroup --trials 1 --timing");
  ASSERT_EQ(r.code, 0);
  for (const auto& rec : json::parse(r.out)["records"]) EXPECT_TRUE(rec.contains("elapsed_ms"));
}

TEST(CliVerify, UsageErrorsExitTwo) {
  EXPECT_EQ(run("verify --n 1").code, 2);
  EXPECT_EQ(run("verify --n 2-x").code, 2);
  EXPECT_EQ(run("verify --suites nonsense").code, 2);
  EXPECT_EQ(run("verify --trials 0").code, 2);
  EXPECT_EQ(run("verify --no-such-flag").code, 2);
  EXPECT_EQ(run("verify --seed banana").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify --help").code, 0);
}

TEST(CliTableau, PromoteRectangle) {
  auto r = run("tableau promote --n 4", "1,1,2,2,2,3\n2,3,3,4,4,4\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,1,1,2,3,3\n2,3,3,4,4,4\n");
}

TEST(CliTableau, UndefinedOperator) {
  auto r = run("tableau e --n 3 --i 1", "1,1\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "undefined\n");
}

TEST(CliTableau, BenderKnuthTwiceIsIdentity) {
  const std::string t = "1,1,1,2,2,2,3,3,3\n2,3,3,3\n";
  auto once = run("tableau bk --n 3 --i 2", t);
  ASSERT_EQ(once.code, 0);
  EXPECT_EQ(once.out, "1,1,1,2,2,2,2,3,3\n2,2,3,3\n");
  EXPECT_EQ(run("tableau bk --n 3 --i 2", once.out).out, t);
}

TEST(CliTableau, CrystalOperatorsAndEvacuation) {
  const std::string t = "1,1,1,2,2,2,3,3,3\n2,3,3,3\n";
  EXPECT_EQ(run("tableau e --n 3 --i 2", t).out, "1,1,1,2,2,2,2,3,3\n2,3,3,3\n");
  EXPECT_EQ(run("tableau f --n 3 --i 2", t).out, "1,1,1,2,2,2,3,3,3\n3,3,3,3\n");
  auto ev = run("tableau evacuate --n 4", "1,1,2,2,2,3\n2,3,3,4,4,4\n");
  ASSERT_EQ(ev.code, 0);
  EXPECT_EQ(run("tableau evacuate --n 4", ev.out).out, "1,1,2,2,2,3\n2,3,3,4,4,4\n");
}

TEST(CliTableau, ParseErrorReportsPosition) {
  auto r = run("tableau promote --n 3", "1,2\n3,x\n", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 2, column 3"), std::string::npos) << r.out;
  EXPECT_EQ(run("tableau promote --n 3", "2,1\n").code, 2);
}

TEST(CliTrop, PromotionExample) {
  auto r = run("trop PR", R"({"B":[2,5,1,3],"L":6,"n":4,"k":2})");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"B\":[3,4,1,3],\"L\":6}\n");
  EXPECT_EQ(run("trop PRinv", R"({"B":[3,4,1,3],"L":6,"n":4,"k":2})").out, "{\"B\":[2,5,1,3],\"L\":6}\n");
}

TEST(CliTrop, DecorationVerdict) {
  auto good = json::parse(run("trop f", R"({"B":[2,5,1,3],"L":6,"n":4,"k":2})").out);
  EXPECT_GE(good["f"].get<long>(), 0);
  EXPECT_TRUE(good["k_rectangle"].get<bool>());
  auto bad = json::parse(run("trop f", R"({"B":[2,7,1,3],"L":6,"n":4,"k":2})").out);
  EXPECT_LT(bad["f"].get<long>(), 0);
  EXPECT_FALSE(bad["k_rectangle"].get<bool>());
}

TEST(CliTrop, InvolutionsAndCrystalSteps) {
  const std::string in = R"({"B":[2,5,1,3],"L":6,"n":4,"k":2})";
  auto s = json::parse(run("trop S", in).out);
  s["n"] = 4;
  s["k"] = 2;
  auto ss = json::parse(run("trop S", s.dump()).out);
  EXPECT_EQ(ss["B"], json::parse(in)["B"]);
  auto d = json::parse(run("trop D", in).out);
  EXPECT_EQ(d["k"], 2);
  d["n"] = 4;
  auto dd = json::parse(run("trop D", d.dump()).out);
  EXPECT_EQ(dd["B"], json::parse(in)["B"]);
  auto up = json::parse(run("trop e1+", in).out);
  EXPECT_EQ(up["B"], json::parse("[3,5,1,3]"));
  up["n"] = 4;
  up["k"] = 2;
  EXPECT_EQ(json::parse(run("trop e1-", up.dump()).out)["B"], json::parse(in)["B"]);
}

TEST(CliTrop, DimensionMismatchExitsTwo) {
  EXPECT_EQ(run("trop PR", R"({"B":[2,5,1],"L":6,"n":4,"k":2})").code, 2);
  EXPECT_EQ(run("trop PR", R"({"B":[2,5,1,3],"L":6,"n":4,"k":4})").code, 2);
  EXPECT_EQ(run("trop PR", R"({"B":[2,5,1,3],"L":6})").code, 2);
  EXPECT_EQ(run("trop XY", R"({"B":[2,5,1,3],"L":6,"n":4,"k":2})").code, 2);
  EXPECT_EQ(run("trop PR", "not json").code, 2);
}

TEST(CliNet, SingleEdge) {
  auto r = run("net --n 2 --k 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  std::size_t labels = 0;
  for (std::size_t at = 0; (at = r.out.find("label=\"x_", at)) != std::string::npos; ++at) ++labels;
  EXPECT_EQ(labels, 1u);
  EXPECT_NE(r.out.find("x_{1,1}"), std::string::npos);
}

TEST(CliNet, FiveTwoNetwork) {
  auto r = run("net --n 5 --k 2");
  ASSERT_EQ(r.code, 0);
  std::size_t edges = 0, labels = 0, sinks = 0;
  for (std::size_t at = 0; (at = r.out.find("->", at)) != std::string::npos; ++at) ++edges;
  for (std::size_t at = 0; (at = r.out.find("label=\"x_", at)) != std::string::npos; ++at) ++labels;
  for (std::size_t at = 0; (at = r.out.find("'\"]", at)) != std::string::npos; ++at) ++sinks;
  EXPECT_EQ(edges, 2u * 2 * 3);
  EXPECT_EQ(labels, 6u);
  EXPECT_EQ(sinks, 2u);
  EXPECT_NE(r.out.find("x_{3,4}"), std::string::npos);
  EXPECT_EQ(run("net --n 3 --k 3").code, 2);
}

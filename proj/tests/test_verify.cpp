#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "geomcrystal/errors.hpp"
#include "geomcrystal/verify.hpp"

using namespace geomcrystal;

namespace {

VerifyConfig small(std::vector<std::string> suites) {
  VerifyConfig c;
  c.n_min = 2;
  c.n_max = 3;
  c.L_max = 2;
  c.trials = 3;
  c.seed = 7;
  c.suites = std::move(suites);
  return c;
}

bool same(const Record& a, const Record& b) {
  return a.suite == b.suite && a.check_id == b.check_id && a.parameters == b.parameters && a.cases == b.cases &&
         a.failures == b.failures && a.counterexample == b.counterexample;
}

}  // namespace

TEST(Verify, RejectsBadConfig) {
  auto c = small({});
  c.trials = 0;
  EXPECT_THROW(validate(c), InvariantViolation);
  c = small({"nonsense"});
  EXPECT_THROW(validate(c), InvariantViolation);
  c = small({});
  c.n_min = 1;
  EXPECT_THROW(run_verify(c), InvariantViolation);
}

TEST(Verify, AllSuitesPassOnSmallInputs) {
  auto rep = run_verify(small({}));
  EXPECT_TRUE(rep.passed());
  std::set<std::string> suites;
  for (const auto& r : rep.records) {
    suites.insert(r.suite);
    EXPECT_FALSE(r.anchor.empty()) << r.check_id;
    EXPECT_GT(r.cases, 0) << r.check_id;
  }
  EXPECT_EQ(suites.size(), suite_names().size());
}

TEST(Verify, RecordsAreSorted) {
  auto rep = run_verify(small({"geometric", "combinatorial"}));
  EXPECT_TRUE(std::is_sorted(rep.records.begin(), rep.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.suite, a.check_id, a.parameters) < std::tie(b.suite, b.check_id, b.parameters);
  }));
}

TEST(Verify, SuiteSelectionDoesNotShiftSamples) {
  auto alone = run_verify(small({"loopgroup"}));
  auto together = run_verify(small({"geometric", "loopgroup"}));
  std::vector<Record> lg;
  for (const auto& r : together.records)
    if (r.suite == "loopgroup") lg.push_back(r);
  ASSERT_EQ(lg.size(), alone.records.size());
  for (std::size_t i = 0; i < lg.size(); ++i) EXPECT_TRUE(same(lg[i], alone.records[i])) << lg[i].check_id;
}

TEST(Verify, KListRestrictsRecords) {
  auto c = small({"loopgroup"});
  c.k_list = {1};
  for (const auto& r : run_verify(c).records) {
    auto it = std::find_if(r.parameters.begin(), r.parameters.end(), [](const auto& p) { return p.first == "k"; });
    ASSERT_NE(it, r.parameters.end());
    EXPECT_EQ(it->second, 1);
  }
}

TEST(Verify, CombinatorialAtNTwo) {
  auto c = small({"combinatorial"});
  c.n_max = 2;
  auto rep = run_verify(c);
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(std::any_of(rep.records.begin(), rep.records.end(), [](const Record& r) { return r.check_id == "pr_order"; }));
}

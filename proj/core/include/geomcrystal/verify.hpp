#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace geomcrystal {

struct VerifyConfig {
  int n_min = 2;
  int n_max = 5;
  std::vector<int> k_list;  // empty: every k in [1, n-1]
  int L_max = 3;
  int box_L_max = -1;  // negative: same as L_max
  int trials = 50;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;  // empty: all
};

// Throws InvariantViolation describing the first problem.
void validate(const VerifyConfig& cfg);

const std::vector<std::string>& suite_names();

struct Record {
  std::string suite;
  std::string check_id;
  std::string anchor;
  std::vector<std::pair<std::string, long>> parameters;
  long cases = 0;
  long failures = 0;
  std::string counterexample;  // first failure
  double elapsed_ms = 0;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct Report {
  VerifyConfig config;
  std::vector<Record> records;  // sorted by suite, check_id, parameters
  bool passed() const;
};

// Runs the selected suites. Samples depend only on the seed and the check's own
// parameters, so the report does not change with suite selection or scheduling.
Report run_verify(const VerifyConfig& cfg);

}  // namespace geomcrystal

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace altruism {

struct SuiteOptions {
  bool fast = false;  ///< replicas / 10 and tolerances x 2
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Criterion ids of a named group; throws ConfigError for an unknown name.
std::vector<int> suite_criteria(const std::string& group);

/// Runs one acceptance criterion (1..12) with its pinned seed.
CriterionResult run_criterion(int id, const SuiteOptions& opt);

/// One line per criterion.
std::string format_result(const CriterionResult& r);

/// Runs a group and prints a summary table. 0 if every criterion passes, 1 otherwise,
/// 2 for an unknown group.
int run_suite(const std::string& group, const SuiteOptions& opt, std::ostream& out);

}  // namespace altruism

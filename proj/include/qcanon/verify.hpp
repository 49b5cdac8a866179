#pragma once

// Property suites over every weight space of every product V_l1 (x) ... (x) V_ln
// with positive l_i and sum(l_i) <= max_weight_sum.

#include <cstddef>
#include <string>
#include <vector>

namespace qcanon {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

/// Suite names accepted by run_suite, in execution order.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, int max_weight_sum);
/// "all" runs every suite.
std::vector<SuiteResult> run_suites(const std::string& name, int max_weight_sum);

/// Tuples of positive integers with sum at most max_sum, ordered by sum, then
/// length, then lexicographically.
std::vector<std::vector<int>> compositions(int max_sum);

}  // namespace qcanon

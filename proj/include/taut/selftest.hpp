#pragma once

#include <functional>
#include <string>
#include <vector>

namespace taut {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // wall-clock limit for the check
};

struct SelftestCheck {
  std::string name;
  double budget_seconds;
  // Returns an empty string on success, otherwise a failure description.
  std::function<std::string()> run;
};

/// The invariant suite: the omega_1^3 omega_2^2 worked example, genus-0 normalization, oracle
/// validation, expansion/evaluation consistency, pushforward identity, golden
/// values, and the property checks. Each check uses fresh oracles.
std::vector<SelftestCheck> selftest_checks();

/// Runs every check; exceptions are reported as failures. A check that
/// overruns its budget fails.
std::vector<CheckResult> run_selftest();

}  // namespace taut

#pragma once

// Named self-check suites run by `coxspec verify`.

#include <string>
#include <vector>

namespace coxspec {

struct CheckResult {
  std::string id;
  double measured;
  double tolerance;
  bool pass;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// {"suite": ..., "passed": ..., "checks": [{"id", "measured", "tolerance", "verdict"}]}
  std::string to_json() const;
};

/// closed_forms, invariants, theorem2 (critical iff equilateral), curves or all.
std::vector<std::string> suite_names();

/// Throws UsageError for an unknown suite name.
VerifyReport run_suite(const std::string& name);

}  // namespace coxspec

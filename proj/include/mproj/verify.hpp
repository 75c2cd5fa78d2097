#pragma once

// Randomized property suite over the identities and inequalities the
// library relies on. Shared by `mproj verify` and the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

namespace mproj {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// Largest observed violation measure (scaled so that <= 1 means within
  /// tolerance), or an informational statistic for report-only checks.
  double worst = 0.0;
  std::string detail;
  bool informational = false;
};

struct VerifyOptions {
  std::uint64_t seed = 20241016;
  int instances = 240;
};

std::vector<CheckResult> run_property_suite(const VerifyOptions& options = {});

}  // namespace mproj

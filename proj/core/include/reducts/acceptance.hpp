#pragma once

#include <string>
#include <vector>

namespace reducts {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  /// Summary lines; on failure they name what went wrong.
  std::vector<std::string> details;
  /// Reported observations that do not decide pass/fail.
  std::vector<std::string> findings;
};

inline constexpr int kCriterionCount = 8;

/// Runs one acceptance criterion, 1..kCriterionCount. Throws Error for
/// other ids.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// "[PASS] 3 title (1.23 s)" followed by indented details and findings.
std::string render_result(const CriterionResult& r);

} // namespace reducts

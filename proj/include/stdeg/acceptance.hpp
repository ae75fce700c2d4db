#pragma once

// The end-to-end acceptance suite: ten criteria, each an exact check with a
// wall-clock budget.  Shared by the acceptance test binary and `verify-all`.

#include <string>
#include <vector>

namespace stdeg {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> failures;  // one line per failed sub-check
  std::string detail;                 // summary of what was checked

  bool within_limit() const { return seconds <= limit_seconds; }
  bool ok() const { return passed && within_limit(); }
};

/// Runs the requested criteria (all when empty) in order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});
CriterionResult run_criterion(int id);
int criterion_count();

/// "PASS  3 SL4 seed matrix and quiver (0.01 s / 1 s): ..."
std::string result_line(const CriterionResult& r);

}  // namespace stdeg

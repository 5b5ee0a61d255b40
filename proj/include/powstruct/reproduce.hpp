#pragma once

#include <string>
#include <vector>

namespace powstruct {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool diagnostic = false;  // reported, never counted as a failure
  std::string detail;
};

/// Runs the full identity suite (worked examples, axioms, coherence checks).
/// `order` sets the truncation of the order-parameterized checks (at least 10 is typical).
std::vector<CheckResult> reproduce_checks(int order);

}  // namespace powstruct

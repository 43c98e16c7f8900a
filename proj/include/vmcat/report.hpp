#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace vmcat {

/// Outcome of checking one named identity over a family of cases. On
/// failure the first counterexample is kept.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string name) : identity(std::move(name)) {}

  std::string identity;
  std::size_t cases = 0;
  bool passed = true;
  std::string failing_case;
  std::string lhs;
  std::string rhs;

  /// Records one case; only the first failure is retained.
  template <class L, class R, class Show>
  void check(const L& lhs_value, const R& rhs_value, const std::string& case_label, Show&& show) {
    ++cases;
    if (passed && !(lhs_value == rhs_value)) {
      passed = false;
      failing_case = case_label;
      lhs = show(lhs_value);
      rhs = show(rhs_value);
    }
  }
};

using Report = std::vector<CheckResult>;

inline bool all_passed(const Report& r) {
  for (const auto& c : r) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace vmcat

#pragma once

// The acceptance checks, shared by `schwarz verify` and the acceptance test.

#include "schwarz/specfun.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schwarz::tools {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  double worst = 0.0;      // largest observed error in the check's own metric
  double tolerance = 0.0;
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;
};

/// Restricts the parameterized checks to a single (n, alpha). Checks tied
/// to specific parameters (the figure reproduction and the p = 1 cap
/// sequence) ignore it.
struct CheckScope {
  std::optional<ModelParams> params;
};

const std::vector<std::string>& check_ids();
bool is_check_id(std::string_view id);

/// Throws InvalidParameter for an unknown id.
CheckResult run_check(std::string_view id, const CheckScope& scope = {});
std::vector<CheckResult> run_all(const CheckScope& scope = {});

/// One status line: "PASS  closed-p1  worst=... tol=... time=...s/10s  detail".
std::string format_result(const CheckResult& result);

} // namespace schwarz::tools

#pragma once

#include "schwarz/extremal.hpp"
#include "schwarz_tools/table.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace schwarz::tools {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kBadParameters = 2, kNumericFailure = 3 };

enum class Command { gp_curve, figure1, verify, kernel, schwarz };

struct RunConfig {
  Command command = Command::gp_curve;
  int n = 3;
  double alpha = 0.0;
  Exponent p{2.0};
  double r_max = 0.99;
  int steps = 200;
  std::string output_path; // empty: table goes to the output stream
  Format format = Format::csv;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> checks;
  /// verify only: restrict parameterized checks to (n, alpha).
  bool restrict_params = false;
};

/// Throws InvalidParameter unless r_max in (0, 1), steps >= 2 and (n, alpha) valid.
void validate(const RunConfig& config);

/// Runs one command. The table goes to `output_path` if set, else to `out`;
/// summaries go to `out` when writing a file and to `log` otherwise.
/// Exceptions are mapped to exit codes.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Rows r, g_value, a_star, method for G_p on `steps` points of [0, r_max].
Table curve_table(const GpCurve& curve);

} // namespace schwarz::tools

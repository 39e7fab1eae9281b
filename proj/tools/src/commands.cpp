#include "schwarz_tools/commands.hpp"

#include "schwarz/errors.hpp"
#include "schwarz/kernel.hpp"
#include "schwarz/poisson.hpp"
#include "schwarz_tools/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace schwarz::tools {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Writes the table and returns the stream that should receive summaries.
std::ostream& emit(const RunConfig& config, const Table& table, std::ostream& out,
                   std::ostream& log) {
  const std::string text = render(table, config.format);
  if (config.output_path.empty()) {
    out << text;
    return log;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw InvalidParameter("cannot open output file '" + config.output_path + "'");
  file << text;
  return out;
}

// Independent cross-checks of numerically computed curve values.
std::optional<std::string> consistency_failure(const ModelParams& params, const GpCurve& curve) {
  for (const auto& s : curve.samples) {
    double reference = 0.0;
    double tolerance = 0.0;
    if (curve.p == 2.0) {
      reference = g2_closed(params, s.r);
      tolerance = 1e-8;
    } else if (std::isinf(curve.p) && s.r <= 0.999) {
      reference = ginf_closed(params, s.r);
      tolerance = 1e-7;
    } else {
      continue;
    }
    if (std::abs(s.g_value - reference) > tolerance * std::abs(reference) + 1e-14) {
      return "G(" + fmt(s.r) + ") = " + fmt(s.g_value) + " disagrees with closed form " +
             fmt(reference);
    }
  }
  return std::nullopt;
}

int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& log, bool figure) {
  const ModelParams params(config.n, config.alpha);
  const auto radii = uniform_radii(config.r_max, config.steps);
  const auto curve = sample_curve(params, config.p, radii);
  std::ostream& summary = emit(config, curve_table(curve), out, log);
  const auto failure = consistency_failure(params, curve);
  if (figure) {
    std::vector<double> values;
    for (const auto& s : curve.samples) values.push_back(s.g_value);
    const auto report = check_monotonicity(values, 1e-6);
    summary << "n=" << config.n << " alpha=" << config.alpha << " p=" << config.p.token()
            << ": argmax r*=" << fmt(radii[report.argmax])
            << " G(r*)=" << fmt(values[report.argmax]) << " largest drop " << fmt(report.largest_drop)
            << "; verdict: " << (report.non_monotone ? "non-monotone" : "monotone") << "\n";
  }
  if (failure) {
    log << "consistency failure: " << *failure << "\n";
    return kNumericFailure;
  }
  return kOk;
}

int cmd_kernel(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const ModelParams params(config.n, config.alpha);
  const double r = config.r_max;
  Table table{{"t", "kernel"}, {}};
  for (int i = 0; i < config.steps; ++i) {
    const double t = std::clamp(-1.0 + 2.0 * i / (config.steps - 1), -1.0, 1.0);
    table.rows.push_back({t, kernel_zonal(params, r, t)});
  }
  std::ostream& summary = emit(config, table, out, log);
  summary << "n=" << config.n << " alpha=" << config.alpha << " r=" << fmt(r)
          << ": C=" << fmt(c_n_alpha(params)) << " mass=" << fmt(kernel_mass(params, r))
          << " min=" << fmt(kernel_zonal(params, r, -1.0))
          << " max=" << fmt(kernel_zonal(params, r, 1.0)) << "\n";
  return kOk;
}

ZonalFunction seeded_polynomial(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(1, 8);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(degree(rng)) + 1);
  for (double& x : c) x = coef(rng);
  return ZonalFunction::polynomial(std::move(c));
}

int cmd_schwarz(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const ModelParams params(config.n, config.alpha);
  const auto f = config.seed ? centered(params, seeded_polynomial(*config.seed))
                             : ZonalFunction::hemisphere_sign();
  const auto report = schwarz_verify(params, f, config.p, uniform_radii(config.r_max, config.steps));
  Table table{{"r", "value", "bound", "margin"}, {}};
  for (const auto& s : report.samples) table.rows.push_back({s.r, s.value, s.bound, s.margin});
  std::ostream& summary = emit(config, table, out, log);
  summary << "datum: " << (config.seed ? "random centered polynomial, seed " + std::to_string(*config.seed)
                                        : std::string("hemisphere sign"))
          << ", ||f||_" << config.p.token() << " = " << fmt(report.norm) << "; "
          << (report.holds ? "inequality holds at every radius"
                           : "VIOLATED at r=" + fmt(*report.violation_radius))
          << "\n";
  return report.holds ? kOk : kVerificationFailed;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  CheckScope scope;
  if (config.restrict_params) scope.params = ModelParams(config.n, config.alpha);
  std::vector<std::string> ids = config.checks.empty() ? check_ids() : config.checks;
  for (const auto& id : ids) {
    if (!is_check_id(id)) throw InvalidParameter("unknown check '" + id + "'");
  }
  bool all = true;
  for (const auto& id : ids) {
    const auto result = run_check(id, scope);
    out << format_result(result) << std::endl;
    all = all && result.passed;
  }
  out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kOk : kVerificationFailed;
}

} // namespace

void validate(const RunConfig& config) {
  (void)ModelParams(config.n, config.alpha);
  if (!(config.r_max > 0.0 && config.r_max < 1.0)) throw InvalidParameter("--r-max must lie in (0, 1)");
  if (config.steps < 2) throw InvalidParameter("--steps must be >= 2");
}

Table curve_table(const GpCurve& curve) {
  Table table{{"r", "g_value", "a_star", "method"}, {}};
  for (const auto& s : curve.samples) {
    table.rows.push_back({s.r, s.g_value, s.a_star, std::string(to_string(s.method))});
  }
  return table;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& log) {
  try {
    validate(config);
    switch (config.command) {
      case Command::gp_curve: return cmd_curve(config, out, log, false);
      case Command::figure1: return cmd_curve(config, out, log, true);
      case Command::kernel: return cmd_kernel(config, out, log);
      case Command::schwarz: return cmd_schwarz(config, out, log);
      case Command::verify: return cmd_verify(config, out);
    }
  } catch (const InvalidParameter& e) {
    log << "invalid parameter: " << e.what() << "\n";
    return kBadParameters;
  } catch (const DomainError& e) {
    log << "invalid parameter: " << e.what() << "\n";
    return kBadParameters;
  } catch (const std::exception& e) {
    log << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  }
  return kBadParameters;
}

} // namespace schwarz::tools

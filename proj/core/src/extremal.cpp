#include "schwarz/extremal.hpp"

#include "schwarz/errors.hpp"
#include "schwarz/kernel.hpp"
#include "schwarz/quadrature.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <thread>

namespace schwarz {

Exponent::Exponent(double p) : p_(p) {
  if (!(p >= 1.0)) throw InvalidParameter("exponent p must lie in [1, inf]");
}

Exponent Exponent::infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

Exponent Exponent::parse(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity") return infinity();
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw InvalidParameter("cannot parse exponent '" + std::string(token) + "'");
  }
  return Exponent(value);
}

bool Exponent::is_infinite() const noexcept { return std::isinf(p_); }

double Exponent::conjugate() const noexcept {
  if (is_infinite()) return 1.0;
  if (p_ == 1.0) return std::numeric_limits<double>::infinity();
  return p_ / (p_ - 1.0);
}

std::string Exponent::token() const {
  if (is_infinite()) return "inf";
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p_);
  return std::string(buf, end);
}

std::string_view to_string(Method method) {
  return method == Method::closed_form ? "closed_form" : "numeric";
}

namespace {

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
}

// (1 - r^2)^{1 + 2 alpha}
double radial_factor(const ModelParams& params, double r) {
  return std::exp((1.0 + 2.0 * params.alpha()) * std::log1p(-r * r));
}

std::optional<double> crossing_for(const ModelParams& params, double r, double a) {
  if (!(a > 0.0) || r == 0.0) return std::nullopt;
  return crossing_point(singular_locus(params, r, a));
}

QuadratureRule split_rule(const ModelParams& params, double r, std::optional<double> crossing,
                          double exponent) {
  RuleOptions options;
  if (crossing) options.breakpoints.push_back(*crossing);
  options.breakpoint_exponent = crossing ? exponent : 0.0;
  options.peak_radius = r;
  return build_rule(params, options);
}

double lq_distance(const ModelParams& params, double r, double a, double q,
                   std::optional<double> crossing) {
  const double c = c_n_alpha(params);
  const auto rule = split_rule(params, r, crossing, q);
  const double integral = rule.integrate([&](double t) {
    return std::pow(std::abs(kernel_zonal_unchecked(params, c, r, t) - a), q);
  });
  return q == 1.0 ? integral : std::pow(integral, 1.0 / q);
}

} // namespace

double phi_q(const ModelParams& params, double r, double a, double q) {
  require_radius(r);
  if (!(q >= 1.0) || std::isinf(q)) throw InvalidParameter("phi_q: q must lie in [1, inf)");
  if (r == 0.0) return std::abs(c_n_alpha(params) - a);
  return lq_distance(params, r, a, q, crossing_for(params, r, a));
}

double big_f(const ModelParams& params, double r, double a, double q) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("big_f: r must lie in (0, 1)");
  if (!(q > 1.0) || std::isinf(q)) throw InvalidParameter("big_f: q must lie in (1, inf)");
  const double c = c_n_alpha(params);
  const auto rule = split_rule(params, r, crossing_for(params, r, a), q - 1.0);
  return rule.integrate([&](double t) {
    const double d = kernel_zonal_unchecked(params, c, r, t) - a;
    return std::copysign(std::pow(std::abs(d), q - 1.0), d);
  });
}

double a_star(const ModelParams& params, double r, double q) {
  require_radius(r);
  if (!(q > 1.0) || std::isinf(q)) throw InvalidParameter("a_star: q must lie in (1, inf)");
  if (r == 0.0) return c_n_alpha(params);

  // The root lies strictly between the kernel's minimum and maximum: F is
  // positive below the range and negative above it.
  double lo = kernel_zonal(params, r, -1.0);
  double hi = kernel_zonal(params, r, 1.0);
  double f_lo = big_f(params, r, lo, q);
  double f_hi = big_f(params, r, hi, q);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw ConvergenceError("a_star: first-order condition is not bracketed");
  }
  const double tolerance = 1e-11 * big_f(params, r, 0.0, q);

  // Geometric bisection first: the range spans many orders of magnitude as r -> 1.
  while (hi > lo * (1.0 + 1e-3)) {
    const double mid = std::sqrt(lo * hi);
    const double f_mid = big_f(params, r, mid, q);
    if (std::abs(f_mid) <= tolerance) return mid;
    if (f_mid > 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  // Illinois variant of regula falsi.
  int last_side = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const double c = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    const double f_c = big_f(params, r, c, q);
    if (std::abs(f_c) <= tolerance) return c;
    if (f_c > 0.0) {
      lo = c;
      f_lo = f_c;
      if (last_side == 1) f_hi *= 0.5;
      last_side = 1;
    } else {
      hi = c;
      f_hi = f_c;
      if (last_side == -1) f_lo *= 0.5;
      last_side = -1;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) return 0.5 * (lo + hi);
  }
  throw ConvergenceError("a_star: root iteration did not converge");
}

double g1_closed(const ModelParams& params, double r) {
  require_radius(r);
  if (r == 0.0) return 0.0;
  const double m = params.n() + 2.0 * params.alpha();
  // (1-r)^{-m} - (1+r)^{-m} = 2 e^{(A+B)/2} sinh((A-B)/2), stable for small r.
  const double A = -m * std::log1p(-r);
  const double B = -m * std::log1p(r);
  const double bracket = 2.0 * std::exp(0.5 * (A + B)) * std::sinh(0.5 * (A - B));
  return 0.5 * c_n_alpha(params) * radial_factor(params, r) * bracket;
}

double a_star_midpoint(const ModelParams& params, double r) {
  require_radius(r);
  const double m = params.n() + 2.0 * params.alpha();
  const double sum = std::pow(1.0 - r, -m) + std::pow(1.0 + r, -m);
  return 0.5 * c_n_alpha(params) * radial_factor(params, r) * sum;
}

double a_star_p2_closed(const ModelParams& params, double r) {
  require_radius(r);
  const double half_n = 0.5 * params.n();
  const double alpha = params.alpha();
  return c_n_alpha(params) * radial_factor(params, r) *
         hyp2f1(half_n + alpha, alpha + 1.0, half_n, r * r);
}

double g2_closed(const ModelParams& params, double r) {
  require_radius(r);
  if (r == 0.0) return 0.0;
  const double n = params.n();
  const double alpha = params.alpha();
  const double s = r * r;
  const double second = hyp2f1(0.5 * n + 2.0 * alpha + 1.0, n + 2.0 * alpha, 0.5 * n, s);
  const double first = hyp2f1(0.5 * n + alpha, alpha + 1.0, 0.5 * n, s);
  const double variance = std::max(0.0, second - first * first);
  return c_n_alpha(params) * radial_factor(params, r) * std::sqrt(variance);
}

double ginf_closed(const ModelParams& params, double r) {
  if (!(r >= 0.0 && r <= 0.999)) throw DomainError("ginf_closed: r must lie in [0, 0.999]");
  if (r == 0.0) return 0.0;
  const double n = params.n();
  const double alpha = params.alpha();
  const double s = r * r;
  const double log_prefactor =
      std::log(2.0) + log_gamma(1.0 + alpha) + log_gamma(1.0 + alpha + 0.5 * n) + std::log(r) +
      (1.0 + 2.0 * alpha) * std::log1p(-s) - 0.5 * std::log(std::numbers::pi) -
      log_gamma(1.0 + 2.0 * alpha) - log_gamma(0.5 * (1.0 + n)) -
      (1.0 + alpha + 0.5 * n) * std::log1p(s);
  const double z = 4.0 * s / ((1.0 + s) * (1.0 + s));
  // Terms decay only like k^{-(3+2 alpha)/2} near z = 1; r = 0.999 needs ~2.5e7 of them.
  SeriesPolicy policy;
  policy.max_terms = 100'000'000;
  const double series = hyp3f2(1.0, 0.25 * (n + 2.0 + 2.0 * alpha), 0.25 * (n + 4.0 + 2.0 * alpha),
                               1.5, 0.5 * (n + 1.0), z, policy);
  return std::exp(log_prefactor) * series;
}

double a_star_median(const ModelParams& params, double r) { return kernel_zonal(params, r, 0.0); }

double a_star_doubled_exponent(const ModelParams& params, double r) {
  require_radius(r);
  const double m = params.n() + 2.0 * params.alpha();
  return c_n_alpha(params) * radial_factor(params, r) * std::pow(1.0 + r * r, -m);
}

ExtremalResult extremal(const ModelParams& params, double r, Exponent p) {
  require_radius(r);
  ExtremalResult result;
  result.r = r;
  result.p = p.value();
  result.q = p.conjugate();
  if (p.value() == 1.0) {
    result.method = Method::closed_form;
    result.a_star = a_star_midpoint(params, r);
    result.g_value = g1_closed(params, r);
  } else if (p.is_infinite()) {
    // Any median minimizes the L^1 distance; the kernel is monotone in t and
    // the equator splits the sphere in half.
    result.method = Method::numeric;
    result.a_star = a_star_median(params, r);
    result.g_value = r == 0.0 ? 0.0 : lq_distance(params, r, result.a_star, 1.0, 0.0);
  } else {
    result.method = Method::numeric;
    result.a_star = a_star(params, r, result.q);
    result.g_value = r == 0.0 ? 0.0 : phi_q(params, r, result.a_star, result.q);
  }
  return result;
}

double g_p(const ModelParams& params, double r, Exponent p) {
  return extremal(params, r, p).g_value;
}

double gradient_bound_constant(const ModelParams& params, double q) {
  if (!(q >= 1.0)) throw InvalidParameter("gradient_bound_constant: q must be >= 1");
  const double base = c_n_alpha(params) * (params.n() + 2.0 * params.alpha());
  if (std::isinf(q)) return base;
  return base * std::pow(abs_moment(params.n(), q), 1.0 / q);
}

GpCurve sample_curve(const ModelParams& params, Exponent p, std::span<const double> radii) {
  if (radii.empty() || radii.front() != 0.0) {
    throw InvalidParameter("sample_curve: radii must start at 0");
  }
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) {
      throw InvalidParameter("sample_curve: radii must be strictly increasing");
    }
  }
  require_radius(radii.back());

  GpCurve curve{params, p.value(), std::vector<ExtremalResult>(radii.size())};
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, radii.size());
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < radii.size(); i += workers) {
        curve.samples[i] = extremal(params, radii[i], p);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return curve;
}

std::vector<double> uniform_radii(double r_max, int steps) {
  if (steps < 2) throw InvalidParameter("uniform_radii: steps must be >= 2");
  if (!(r_max > 0.0 && r_max < 1.0)) throw InvalidParameter("uniform_radii: r_max must lie in (0, 1)");
  std::vector<double> radii(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) radii[i] = r_max * i / (steps - 1);
  radii.back() = r_max;
  return radii;
}

MonotonicityReport check_monotonicity(std::span<const double> values, double drop_tolerance) {
  MonotonicityReport report;
  if (values.empty()) return report;
  double running_max = values[0];
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) report.strictly_increasing = false;
    if (values[i] > running_max) {
      running_max = values[i];
      report.argmax = i;
    }
    report.largest_drop = std::max(report.largest_drop, running_max - values[i]);
  }
  report.non_monotone = report.largest_drop > drop_tolerance;
  return report;
}

} // namespace schwarz

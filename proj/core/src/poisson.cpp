#include "schwarz/poisson.hpp"

#include "schwarz/errors.hpp"
#include "schwarz/quadrature.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace schwarz {
namespace {

constexpr int kScanPoints = 2001;

// Points of [-1, 1] uniformly spaced in the polar angle.
std::vector<double> polar_grid(int count) {
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) t[i] = -std::cos(std::numbers::pi * i / (count - 1));
  t.front() = -1.0;
  t.back() = 1.0;
  return t;
}

bool near_any(double t, const std::vector<double>& points, double distance) {
  return std::any_of(points.begin(), points.end(),
                     [&](double b) { return std::abs(t - b) <= distance; });
}

// Sign changes of the profile away from its declared jumps.
std::vector<double> profile_zeros(const std::function<double(double)>& g,
                                  const std::vector<double>& jumps) {
  const auto grid = polar_grid(kScanPoints);
  std::vector<double> zeros;
  double prev = g(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = g(grid[i]);
    if (cur == 0.0 && i + 1 < grid.size()) {
      zeros.push_back(grid[i]);
    } else if (prev != 0.0 && cur != 0.0 && std::signbit(prev) != std::signbit(cur)) {
      boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 2);
      std::uintmax_t iterations = 200;
      const auto [lo, hi] =
          boost::math::tools::toms748_solve(g, grid[i - 1], grid[i], prev, cur, tol, iterations);
      const double root = 0.5 * (lo + hi);
      if (!near_any(root, jumps, 1e-10)) zeros.push_back(root);
    }
    prev = cur;
  }
  return zeros;
}

double sup_abs(const std::function<double(double)>& g, const std::vector<double>& jumps) {
  const auto grid = polar_grid(kScanPoints);
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = std::abs(g(grid[i]));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  // One-sided values at jumps.
  for (double b : jumps) {
    for (double side : {-1e-12, 1e-12}) {
      const double t = std::clamp(b + side, -1.0, 1.0);
      best_value = std::max(best_value, std::abs(g(t)));
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  const auto [t_opt, neg] = boost::math::tools::brent_find_minima(
      [&](double t) { return -std::abs(g(t)); }, lo, hi, std::numeric_limits<double>::digits / 2);
  return std::max(best_value, -neg);
}

// L^p norm of a zonal profile with known jumps.
double profile_norm(const ModelParams& params, const std::function<double(double)>& g,
                    const std::vector<double>& jumps, Exponent p) {
  if (p.is_infinite()) return sup_abs(g, jumps);
  const double pv = p.value();
  RuleOptions options;
  options.breakpoints = jumps;
  options.breakpoint_exponents.assign(jumps.size(), 0.0);
  for (double z : profile_zeros(g, jumps)) {
    options.breakpoints.push_back(z);
    options.breakpoint_exponents.push_back(pv);
  }
  const auto rule = build_rule(params, options);
  const double integral = rule.integrate([&](double t) { return std::pow(std::abs(g(t)), pv); });
  return std::pow(integral, 1.0 / pv);
}

QuadratureRule data_rule(const ModelParams& params, const ZonalFunction& f, double peak_radius,
                         int order = kDefaultOrder) {
  RuleOptions options;
  options.order = order;
  options.breakpoints = f.breakpoints;
  options.peak_radius = peak_radius;
  return build_rule(params, options);
}

// Phi_k(rho^2) / Phi_k(1) rho^k for k = 0..K.
std::vector<double> radial_multipliers(const ModelParams& params, int degree, double rho) {
  std::vector<double> out(static_cast<std::size_t>(degree) + 1);
  double power = 1.0;
  for (int k = 0; k <= degree; ++k) {
    const double at_one = phi_k_alpha(params, k, 1.0);
    if (std::abs(at_one) < 1e-12) {
      throw DegeneracyError("radial factor Phi_" + std::to_string(k) + "(1) vanishes");
    }
    out[k] = power == 0.0 ? 0.0 : phi_k_alpha(params, k, rho * rho) / at_one * power;
    power *= rho;
  }
  return out;
}

std::vector<double> zonal_harmonics_at(const ModelParams& params, int degree, double t) {
  const double lambda = params.gegenbauer_index();
  auto values = gegenbauer_all(degree, lambda, t);
  const auto at_pole = gegenbauer_all(degree, lambda, 1.0);
  for (int k = 0; k <= degree; ++k) values[k] /= at_pole[k];
  return values;
}

double series_sum(const std::vector<double>& multipliers, const std::vector<double>& coefficients,
                  const std::vector<double>& harmonics) {
  double sum = 0.0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    sum += multipliers[k] * coefficients[k] * harmonics[k];
  }
  return sum;
}

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
}

} // namespace

ZonalFunction ZonalFunction::constant(double c) {
  return {[c](double) { return c; }, {}};
}

ZonalFunction ZonalFunction::polynomial(std::vector<double> coefficients) {
  return {[c = std::move(coefficients)](double t) {
            double sum = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) sum = sum * t + *it;
            return sum;
          },
          {}};
}

ZonalFunction ZonalFunction::hemisphere_sign() {
  return {[](double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }, {0.0}};
}

double sphere_mean(const ModelParams& params, const ZonalFunction& f) {
  return data_rule(params, f, 0.0).integrate(f.profile);
}

ZonalFunction centered(const ModelParams& params, ZonalFunction f) {
  const double mean = sphere_mean(params, f);
  return {[g = std::move(f.profile), mean](double t) { return g(t) - mean; },
          std::move(f.breakpoints)};
}

double lp_norm(const ModelParams& params, const ZonalFunction& f, Exponent p) {
  return profile_norm(params, f.profile, f.breakpoints, p);
}

double solve_axis(const ModelParams& params, const ZonalFunction& f, double r) {
  require_radius(r);
  const double c = c_n_alpha(params);
  if (r == 0.0) return c * sphere_mean(params, f);
  return data_rule(params, f, r).integrate(
      [&](double t) { return kernel_zonal_unchecked(params, c, r, t) * f(t); });
}

double zonal_harmonic(const ModelParams& params, int k, double t) {
  if (k < 0) throw InvalidParameter("zonal_harmonic: degree must be >= 0");
  const double lambda = params.gegenbauer_index();
  return gegenbauer(k, lambda, t) / gegenbauer(k, lambda, 1.0);
}

double harmonic_dimension(int n, int k) {
  if (k == 0) return 1.0;
  return (2.0 * k + n - 2.0) *
         std::exp(log_gamma(k + n - 2.0) - log_gamma(k + 1.0) - log_gamma(n - 1.0));
}

double ZonalExpansion::evaluate(const ModelParams& params, double t) const {
  const auto y = zonal_harmonics_at(params, degree, t);
  double sum = 0.0;
  for (int k = 0; k <= degree; ++k) sum += coefficients[k] * y[k];
  return sum;
}

ZonalExpansion project_zonal(const ModelParams& params, const ZonalFunction& f, int degree) {
  if (degree < 0) throw InvalidParameter("project_zonal: degree must be >= 0");
  const int order = std::max(kDefaultOrder, degree + 32);
  const auto rule = data_rule(params, f, 0.0, order);
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();

  ZonalExpansion e;
  e.degree = degree;
  e.ill_conditioned = degree > 60;
  e.coefficients.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double fw = weights[i] * f(nodes[i]);
    const auto y = zonal_harmonics_at(params, degree, nodes[i]);
    for (int k = 0; k <= degree; ++k) e.coefficients[k] += fw * y[k];
  }
  for (int k = 0; k <= degree; ++k) {
    e.coefficients[k] *= rule.normalization() * harmonic_dimension(params.n(), k);
  }
  for (double t : polar_grid(201)) {
    if (near_any(t, f.breakpoints, 1e-9)) continue;
    e.reconstruction_error = std::max(e.reconstruction_error, std::abs(f(t) - e.evaluate(params, t)));
  }
  return e;
}

double solve_series(const ModelParams& params, const ZonalExpansion& expansion,
                    const BallPoint& x) {
  if (x.dimension() != params.n()) throw InvalidParameter("solve_series: dimension mismatch");
  const double rho = x.norm();
  const auto m = radial_multipliers(params, expansion.degree, rho);
  const double t = rho == 0.0 ? 1.0 : std::clamp(x.coords().back() / rho, -1.0, 1.0);
  return series_sum(m, expansion.coefficients, zonal_harmonics_at(params, expansion.degree, t));
}

std::pair<double, double> eigen_check(const ModelParams& params, int k, double r) {
  if (k < 0 || k > 20) throw InvalidParameter("eigen_check: k must lie in [0, 20]");
  require_radius(r);
  const double c = c_n_alpha(params);
  double lhs = 0.0;
  if (r == 0.0) {
    lhs = k == 0 ? c : 0.0;
  } else {
    RuleOptions options;
    options.peak_radius = r;
    lhs = build_rule(params, options).integrate([&](double t) {
      return kernel_zonal_unchecked(params, c, r, t) * zonal_harmonic(params, k, t);
    });
  }
  const double rhs = radial_multipliers(params, k, r)[k];
  return {lhs, rhs};
}

SchwarzReport schwarz_verify(const ModelParams& params, const ZonalFunction& f, Exponent p,
                             const std::vector<double>& radii) {
  const double mean = sphere_mean(params, f);
  const double l1 = lp_norm(params, f, Exponent(1.0));
  if (std::abs(mean) > 1e-12 * std::max(1.0, l1)) {
    throw InvalidParameter("schwarz_verify: boundary datum must have zero mean");
  }
  SchwarzReport report;
  report.norm = lp_norm(params, f, p);
  for (double r : radii) {
    SchwarzSample s;
    s.r = r;
    s.value = std::abs(solve_axis(params, f, r));
    s.bound = g_p(params, r, p) * report.norm;
    s.margin = s.bound + kSchwarzSlack - s.value;
    if (s.margin < 0.0 && report.holds) {
      report.holds = false;
      report.violation_radius = r;
    }
    report.samples.push_back(s);
  }
  return report;
}

ZonalFunction near_extremizer_p1(const ModelParams& params, int i) {
  if (i < 1) throw InvalidParameter("near_extremizer_p1: i must be >= 1");
  // |eta - e_n| <= 1/i  <=>  eta_n >= 1 - 1/(2 i^2).
  const double gap = 1.0 / (2.0 * i * i);
  const double t0 = 1.0 - gap;
  const double cap = 0.5 * boost::math::ibeta(0.5 * (params.n() - 1), 0.5, gap * (1.0 + t0));
  const double height = 1.0 / (2.0 * cap);
  return {[t0, height](double t) { return t >= t0 ? height : (t <= -t0 ? -height : 0.0); },
          {-t0, t0}};
}

double hardy_mean(const ModelParams& params, const ZonalExpansion& expansion, double r,
                  Exponent p) {
  require_radius(r);
  const auto m = radial_multipliers(params, expansion.degree, r);
  auto u = [&](double t) {
    return series_sum(m, expansion.coefficients, zonal_harmonics_at(params, expansion.degree, t));
  };
  return profile_norm(params, u, {}, p);
}

} // namespace schwarz

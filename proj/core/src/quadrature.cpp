#include "schwarz/quadrature.hpp"

#include "schwarz/errors.hpp"
#include "schwarz/gauss_jacobi.hpp"
#include "schwarz/kernel.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace schwarz {
namespace {

enum class Edge { sphere, split, plain };

struct Boundary {
  double t;
  Edge kind;
  double exponent = 0.0; // algebraic behaviour |t - b|^exponent of split ends
};

// Boundaries closer than this are merged; keeps panels non-degenerate.
constexpr double kMergeDistance = 1e-13;

std::vector<Boundary> collect_boundaries(const RuleOptions& options) {
  std::vector<Boundary> points{{-1.0, Edge::sphere}, {1.0, Edge::sphere}};
  for (std::size_t i = 0; i < options.breakpoints.size(); ++i) {
    const double b = options.breakpoints[i];
    const double e = options.breakpoint_exponents.empty() ? options.breakpoint_exponent
                                                          : options.breakpoint_exponents[i];
    if (b > -1.0 && b < 1.0) points.push_back({b, Edge::split, e});
  }
  const double r = options.peak_radius;
  if (r > 0.0 && r < 1.0) {
    const double scale = (1.0 - r) * (1.0 - r) / (2.0 * r);
    for (double d = scale; d < 1.5; d *= 4.0) points.push_back({1.0 - d, Edge::plain});
  }
  std::sort(points.begin(), points.end(),
            [](const Boundary& l, const Boundary& r) { return l.t < r.t; });

  std::vector<Boundary> merged;
  for (const Boundary& p : points) {
    if (!merged.empty() && p.t - merged.back().t < kMergeDistance) {
      // Sphere endpoints win, then splits.
      if (p.kind == Edge::sphere ||
          (p.kind == Edge::split && merged.back().kind == Edge::plain)) {
        merged.back() = p;
      }
      continue;
    }
    merged.push_back(p);
  }
  // A split swallowed by +-1 must not leave a zero-length panel behind.
  merged.front() = {-1.0, Edge::sphere};
  merged.back() = {1.0, Edge::sphere};
  return merged;
}

} // namespace

SingularLocus singular_locus(const ModelParams& params, double r, double a) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("singular_locus: r must lie in (0, 1)");
  if (!(a > 0.0)) throw DomainError("singular_locus: a must be > 0");
  const double alpha = params.alpha();
  const double m = params.n() + 2.0 * alpha;
  // Value of 1 + r^2 - 2 r t at which the kernel equals a.
  const double level = std::pow(c_n_alpha(params) / a, 2.0 / m) *
                       std::pow((1.0 - r) * (1.0 + r), (2.0 + 4.0 * alpha) / m);
  const double lambda1 = (1.0 + r * r - level) / (2.0 * r);
  const double lambda2 = -lambda1;
  SingularLocus locus;
  if (lambda1 >= 0.0 && lambda1 <= 1.0) locus.lambda1 = lambda1;
  if (lambda2 >= 0.0 && lambda2 <= 1.0) locus.lambda2 = lambda2;
  return locus;
}

std::optional<double> crossing_point(const SingularLocus& locus) {
  if (locus.lambda1) return *locus.lambda1;
  if (locus.lambda2) return -*locus.lambda2;
  return std::nullopt;
}

double sphere_normalization(int n) {
  if (n < 2) throw InvalidParameter("sphere_normalization: n must be >= 2");
  if (n == 2) return 1.0 / std::numbers::pi;
  return boost::math::tgamma_ratio(0.5 * n, 0.5 * (n - 1)) / std::sqrt(std::numbers::pi);
}

QuadratureRule build_rule(const ModelParams& params, const RuleOptions& options) {
  if (options.order < 1) throw InvalidParameter("build_rule: order must be >= 1");
  if (!(options.breakpoint_exponent >= 0.0)) {
    throw InvalidParameter("build_rule: breakpoint exponent must be >= 0");
  }
  if (!options.breakpoint_exponents.empty()) {
    if (options.breakpoint_exponents.size() != options.breakpoints.size()) {
      throw InvalidParameter("build_rule: one exponent per breakpoint required");
    }
    for (double e : options.breakpoint_exponents) {
      if (!(e >= 0.0)) throw InvalidParameter("build_rule: breakpoint exponent must be >= 0");
    }
  }
  const double beta = 0.5 * (params.n() - 3);
  const double gamma = options.breakpoint_exponent;
  const auto boundaries = collect_boundaries(options);

  QuadratureRule rule;
  rule.dimension_ = params.n();
  rule.order_ = options.order;
  rule.split_exponent_ = gamma;
  rule.normalization_ = sphere_normalization(params.n());
  for (const Boundary& b : boundaries) {
    rule.boundaries_.push_back(b.t);
    if (b.kind == Edge::split) rule.split_points_.push_back(b.t);
  }

  auto exponent_of = [&](const Boundary& b) {
    switch (b.kind) {
      case Edge::sphere: return beta;
      case Edge::split: return b.exponent;
      case Edge::plain: return 0.0;
    }
    return 0.0;
  };

  const std::size_t panels = boundaries.size() - 1;
  rule.nodes_.reserve(panels * options.order);
  rule.weights_.reserve(panels * options.order);
  for (std::size_t p = 0; p < panels; ++p) {
    const Boundary lo = boundaries[p];
    const Boundary hi = boundaries[p + 1];
    const double a = exponent_of(hi); // Jacobi (1 - x)^a sits at the upper end
    const double b = exponent_of(lo);
    const auto base = cached_gauss_jacobi(options.order, a, b);
    const double half = 0.5 * (hi.t - lo.t);
    const double scale = std::pow(half, 1.0 + a + b);
    for (int i = 0; i < options.order; ++i) {
      const double x = base->nodes[i];
      const double to_hi = half * (1.0 - x);
      const double from_lo = half * (1.0 + x);
      const double t = (x <= 0.0) ? lo.t + from_lo : hi.t - to_hi;
      double w = scale * base->weights[i];
      // Sphere weight factors not absorbed by the Jacobi weight.
      if (beta != 0.0) {
        if (hi.kind != Edge::sphere) w *= std::pow(1.0 - t, beta);
        if (lo.kind != Edge::sphere) w *= std::pow(1.0 + t, beta);
      }
      // Algebraic factors at split ends are part of the integrand.
      if (hi.kind == Edge::split && a != 0.0) w /= std::pow(to_hi, a);
      if (lo.kind == Edge::split && b != 0.0) w /= std::pow(from_lo, b);
      rule.nodes_.push_back(t);
      rule.weights_.push_back(w);
    }
  }
  return rule;
}

QuadratureRule build_rule(const ModelParams& params, int order,
                          const std::optional<SingularLocus>& splits) {
  if (order < 8) throw InvalidParameter("build_rule: order must be >= 8");
  RuleOptions options;
  options.order = order;
  if (splits) {
    if (splits->lambda1) options.breakpoints.push_back(*splits->lambda1);
    if (splits->lambda2) options.breakpoints.push_back(-*splits->lambda2);
  }
  return build_rule(params, options);
}

double zonal_integral(const ModelParams& params, const std::function<double(double)>& f,
                      const QuadratureRule& rule) {
  if (rule.dimension() != params.n()) {
    throw InvalidParameter("zonal_integral: rule was built for a different dimension");
  }
  return rule.integrate(f);
}

} // namespace schwarz

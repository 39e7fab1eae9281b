#pragma once

// Integration of zonal functions g(eta_n) over the unit sphere S^{n-1}
// with respect to the normalized surface measure, reduced to
//
//   c_n \int_{-1}^{1} g(t) (1 - t^2)^{(n-3)/2} dt,   c_n = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)).
//
// Rules are composite Gauss-Jacobi: the sphere weight is absorbed as a
// Jacobi weight on panels touching t = +-1, and panels ending at a
// declared breakpoint may absorb an algebraic factor |t - b|^gamma so that
// integrands like |P - a|^q stay spectrally accurate across the crossing
// P = a.

#include "schwarz/specfun.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace schwarz {

inline constexpr int kDefaultOrder = 96;

/// Level crossings of the zonal kernel with a constant a, in the form used
/// by the split integrals on [0, 1]: lambda1 is a crossing at t = lambda1,
/// lambda2 a crossing at t = -lambda2. Each is present only inside [0, 1].
struct SingularLocus {
  std::optional<double> lambda1;
  std::optional<double> lambda2;
};

/// Requires r in (0, 1) and a > 0.
SingularLocus singular_locus(const ModelParams& params, double r, double a);

/// The crossing as a point of [-1, 1], if the locus has one.
std::optional<double> crossing_point(const SingularLocus& locus);

struct RuleOptions {
  /// Nodes per panel.
  int order = kDefaultOrder;
  /// Interior points where the integrand is not smooth.
  std::vector<double> breakpoints;
  /// Integrands behave like |t - b|^gamma * smooth next to each breakpoint.
  /// The rule then integrates such functions to full accuracy; gamma = 0
  /// gives an ordinary composite rule.
  double breakpoint_exponent = 0.0;
  /// Per-breakpoint exponents; if non-empty it must match `breakpoints`
  /// and overrides `breakpoint_exponent`.
  std::vector<double> breakpoint_exponents;
  /// If > 0, panels are graded geometrically toward t = 1 on the length
  /// scale (1-r)^2 / (2r) of the kernel peak at radius r.
  double peak_radius = 0.0;
};

class QuadratureRule {
public:
  int dimension() const noexcept { return dimension_; }
  int order() const noexcept { return order_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  /// Weights against (1 - t^2)^{(n-3)/2} dt, before surface normalization.
  std::span<const double> weights() const noexcept { return weights_; }
  /// Singular breakpoints, sorted, strictly inside (-1, 1).
  std::span<const double> split_points() const noexcept { return split_points_; }
  double split_exponent() const noexcept { return split_exponent_; }
  /// All panel boundaries including -1 and 1.
  std::span<const double> panel_boundaries() const noexcept { return boundaries_; }
  /// c_n, so that normalization() * sum(weights) == 1 for gamma == 0.
  double normalization() const noexcept { return normalization_; }

  /// Normalized surface integral of g(eta_n).
  template <class F>
  double integrate(F&& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * g(nodes_[i]);
    return normalization_ * sum;
  }

private:
  friend QuadratureRule build_rule(const ModelParams&, const RuleOptions&);

  int dimension_ = 0;
  int order_ = 0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> split_points_;
  std::vector<double> boundaries_;
  double split_exponent_ = 0.0;
  double normalization_ = 1.0;
};

QuadratureRule build_rule(const ModelParams& params, const RuleOptions& options);

/// Composite rule with panel boundaries at the crossings in `splits`.
/// Requires order >= 8.
QuadratureRule build_rule(const ModelParams& params, int order = kDefaultOrder,
                          const std::optional<SingularLocus>& splits = std::nullopt);

/// Normalized surface integral of f(eta_n) with the given rule.
double zonal_integral(const ModelParams& params, const std::function<double(double)>& f,
                      const QuadratureRule& rule);

/// c_n = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)).
double sphere_normalization(int n);

} // namespace schwarz

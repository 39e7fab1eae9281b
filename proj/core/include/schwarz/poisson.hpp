#pragma once

// Dirichlet problem for the invariant Laplacian with zonal boundary data:
// solutions by direct integration against the kernel and by the
// spherical-harmonic series, plus checks of the sharp Schwarz inequality.

#include "schwarz/extremal.hpp"
#include "schwarz/kernel.hpp"
#include "schwarz/specfun.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace schwarz {

/// Boundary data f(eta) = profile(eta_n).
struct ZonalFunction {
  std::function<double(double)> profile;
  /// Points of [-1, 1] where the profile jumps or has a kink.
  std::vector<double> breakpoints;

  double operator()(double t) const { return profile(t); }

  static ZonalFunction constant(double c);
  /// sum_j coefficients[j] t^j.
  static ZonalFunction polynomial(std::vector<double> coefficients);
  /// +1 on the upper hemisphere, -1 on the lower one.
  static ZonalFunction hemisphere_sign();
};

/// Normalized surface mean of f.
double sphere_mean(const ModelParams& params, const ZonalFunction& f);

/// f minus its surface mean, so that the solution vanishes at the origin.
ZonalFunction centered(const ModelParams& params, ZonalFunction f);

/// ||f||_{L^p(S^{n-1})} with respect to normalized surface measure.
double lp_norm(const ModelParams& params, const ZonalFunction& f, Exponent p);

/// u(r e_n) = integral P(r e_n, zeta) f(zeta) dsigma(zeta).
double solve_axis(const ModelParams& params, const ZonalFunction& f, double r);

/// Zonal harmonic of degree k normalized to 1 at the pole:
/// C_k^lambda(t) / C_k^lambda(1), lambda = (n-2)/2.
double zonal_harmonic(const ModelParams& params, int k, double t);

/// Dimension of the space of degree-k spherical harmonics on S^{n-1};
/// the reciprocal of the mean square of the normalized zonal harmonic.
double harmonic_dimension(int n, int k);

struct ZonalExpansion {
  std::vector<double> coefficients; // c_0 ... c_K against zonal_harmonic
  int degree = 0;
  /// Largest deviation from the profile on a 201-point grid.
  double reconstruction_error = 0.0;
  /// Degrees above 60 lose accuracy in the Gegenbauer recurrence weights.
  bool ill_conditioned = false;

  double evaluate(const ModelParams& params, double t) const;
};

ZonalExpansion project_zonal(const ModelParams& params, const ZonalFunction& f, int degree);

/// u(x) = sum_k Phi_k(|x|^2)/Phi_k(1) |x|^k c_k Y_k(x/|x|).
/// Throws DegeneracyError if some |Phi_k(1)| < 1e-12.
double solve_series(const ModelParams& params, const ZonalExpansion& expansion,
                    const BallPoint& x);

/// Quadrature of the kernel against Y_k at r e_n, and the eigenvalue
/// Phi_k(r^2)/Phi_k(1) r^k predicted for it.
std::pair<double, double> eigen_check(const ModelParams& params, int k, double r);

struct SchwarzSample {
  double r = 0.0;
  double value = 0.0; // |u(r e_n)|
  double bound = 0.0; // G_p(r) ||f||_p
  double margin = 0.0; // bound + slack - value
};

struct SchwarzReport {
  bool holds = true;
  double norm = 0.0;
  std::vector<SchwarzSample> samples;
  std::optional<double> violation_radius;
};

inline constexpr double kSchwarzSlack = 1e-9;

/// Checks |u(r e_n)| <= G_p(r) ||f||_p + 1e-9 at every radius. The datum
/// must have zero mean (InvalidParameter otherwise).
SchwarzReport schwarz_verify(const ModelParams& params, const ZonalFunction& f, Exponent p,
                             const std::vector<double>& radii);

/// Unit L^1 datum spread evenly over the caps |eta -+ e_n| <= 1/i with
/// opposite signs.
ZonalFunction near_extremizer_p1(const ModelParams& params, int i);

/// Integral mean M_p(r, u) of the series solution over the sphere of radius r.
double hardy_mean(const ModelParams& params, const ZonalExpansion& expansion, double r,
                  Exponent p);

} // namespace schwarz

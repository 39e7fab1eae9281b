#pragma once

// Scalar special functions used throughout the library: log-gamma,
// Pochhammer symbols, truncated hypergeometric series, Gegenbauer
// polynomials and the model constants that depend on (n, alpha).

#include <cstddef>
#include <span>
#include <vector>

namespace schwarz {

/// Dimension n and parameter alpha of the operator and its kernel.
///
/// Construction validates n >= 3 and alpha > -1/2 and throws
/// InvalidParameter otherwise.
class ModelParams {
public:
  ModelParams(int n, double alpha);

  int n() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }

  /// n/2 + alpha, half the kernel's distance exponent.
  double half_exponent() const noexcept { return 0.5 * n_ + alpha_; }
  /// Gegenbauer index (n-2)/2 of zonal harmonics on the sphere.
  double gegenbauer_index() const noexcept { return 0.5 * (n_ - 2); }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
  int n_;
  double alpha_;
};

/// Termination policy shared by the hypergeometric series.
struct SeriesPolicy {
  double relative_tolerance = 1e-16;
  int consecutive_small_terms = 3;
  std::size_t max_terms = 200'000;
};

/// Parameters of a generalized hypergeometric series pFq(upper; lower; z).
struct HypergeometricArgs {
  std::vector<double> upper;
  std::vector<double> lower;
  double z = 0.0;
};

double log_gamma(double x);

/// Rising factorial a (a+1) ... (a+k-1); 1 when k == 0.
double pochhammer(double a, unsigned k);

/// Generalized hypergeometric series, summed term by term.
///
/// Terminating series (an upper parameter is a non-positive integer) are
/// summed exactly. Otherwise summation stops once `consecutive_small_terms`
/// successive terms fall below `relative_tolerance` times the partial sum;
/// ConvergenceError is thrown if `max_terms` is reached first.
double hypergeometric_pfq(const HypergeometricArgs& args,
                          const SeriesPolicy& policy = {});

/// Gauss 2F1(a, b; c; z) for z in [0, 1]. At z == 1 the Gauss summation
/// theorem is used (requires c - a - b > 0 unless the series terminates).
double hyp2f1(double a, double b, double c, double z);

/// 3F2(a1, a2, a3; b1, b2; z) for z in [0, 1].
double hyp3f2(double a1, double a2, double a3, double b1, double b2, double z,
              const SeriesPolicy& policy = {});

/// Normalizing constant of the Poisson-type kernel,
/// Gamma(n/2 + alpha) Gamma(1 + alpha) / (Gamma(n/2) Gamma(1 + 2 alpha)).
double c_n_alpha(const ModelParams& params);

/// Radial factor 2F1(-alpha, k + n/2 - 1 - alpha; k + n/2; s) of the
/// degree-k term in the harmonic expansion of a solution, s = |x|^2.
double phi_k_alpha(const ModelParams& params, int k, double s);

/// Gegenbauer polynomial C_k^lambda(t) by three-term recurrence.
double gegenbauer(int k, double lambda, double t);

/// C_0^lambda(t) ... C_K^lambda(t) in one pass.
std::vector<double> gegenbauer_all(int max_degree, double lambda, double t);

/// Integral of |t|^q over the normalized sphere in R^n:
/// Gamma(n/2) Gamma((1+q)/2) / (sqrt(pi) Gamma((n+q)/2)).
double abs_moment(int n, double q);

} // namespace schwarz

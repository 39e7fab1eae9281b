#include "schwarz/specfun.hpp"

#include "schwarz/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace schwarz {
namespace {

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::floor(x) == x;
}

// Neumaier compensated summation.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Number of the last non-zero term if some upper parameter is a
// non-positive integer, i.e. the series is a polynomial in z.
std::optional<std::size_t> terminating_degree(std::span<const double> upper) {
  std::optional<std::size_t> degree;
  for (double a : upper) {
    if (is_nonpositive_integer(a)) {
      const auto m = static_cast<std::size_t>(-a);
      if (!degree || m < *degree) degree = m;
    }
  }
  return degree;
}

double term_ratio(std::span<const double> upper, std::span<const double> lower,
                  double z, std::size_t k) {
  const double kk = static_cast<double>(k);
  double ratio = z / (kk + 1.0);
  for (double a : upper) ratio *= a + kk;
  for (double b : lower) ratio /= b + kk;
  return ratio;
}

// Gamma(x) as (log|Gamma(x)|, sign); sign == 0 flags a pole.
struct SignedLogGamma {
  double log_abs;
  int sign;
};

SignedLogGamma signed_lgamma(double x) {
  if (is_nonpositive_integer(x)) return {0.0, 0};
  int sign = 1;
  const double lg = boost::math::lgamma(x, &sign);
  return {lg, sign};
}

} // namespace

ModelParams::ModelParams(int n, double alpha) : n_(n), alpha_(alpha) {
  if (n < 3) {
    throw InvalidParameter("dimension n must be >= 3, got " + std::to_string(n));
  }
  if (!(alpha > -0.5) || !std::isfinite(alpha)) {
    throw InvalidParameter("alpha must be a finite value > -1/2, got " +
                           std::to_string(alpha));
  }
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma requires a finite x > 0");
  }
  return boost::math::lgamma(x);
}

double pochhammer(double a, unsigned k) {
  double product = 1.0;
  for (unsigned i = 0; i < k; ++i) product *= a + static_cast<double>(i);
  return product;
}

double hypergeometric_pfq(const HypergeometricArgs& args,
                          const SeriesPolicy& policy) {
  for (double b : args.lower) {
    if (is_nonpositive_integer(b)) {
      throw DomainError("hypergeometric series: lower parameter is a non-positive integer");
    }
  }
  const std::span<const double> upper(args.upper);
  const std::span<const double> lower(args.lower);
  const double z = args.z;

  CompensatedSum sum;
  sum.add(1.0);
  double term = 1.0;

  if (const auto degree = terminating_degree(upper)) {
    for (std::size_t k = 0; k < *degree; ++k) {
      term *= term_ratio(upper, lower, z, k);
      sum.add(term);
    }
    return sum.value();
  }

  if (upper.size() == lower.size() + 1) {
    if (std::abs(z) > 1.0) {
      throw DomainError("hypergeometric series: |z| > 1 is outside the disc of convergence");
    }
    if (std::abs(z) == 1.0) {
      double balance = 0.0;
      for (double b : lower) balance += b;
      for (double a : upper) balance -= a;
      if (!(balance > 0.0)) {
        throw DomainError("hypergeometric series diverges at |z| = 1 for these parameters");
      }
    }
  } else if (upper.size() > lower.size() + 1 && z != 0.0) {
    throw DomainError("hypergeometric series with p > q + 1 diverges for z != 0");
  }

  int small_run = 0;
  for (std::size_t k = 0; k < policy.max_terms; ++k) {
    term *= term_ratio(upper, lower, z, k);
    sum.add(term);
    if (std::abs(term) <= policy.relative_tolerance * std::abs(sum.value())) {
      if (++small_run >= policy.consecutive_small_terms) return sum.value();
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("hypergeometric series did not converge within " +
                         std::to_string(policy.max_terms) + " terms (z = " +
                         std::to_string(z) + ")");
}

double hyp2f1(double a, double b, double c, double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw DomainError("hyp2f1: z must lie in [0, 1]");
  }
  if (is_nonpositive_integer(c)) {
    throw DomainError("hyp2f1: c must not be a non-positive integer");
  }
  const double upper[] = {a, b};
  if (z == 1.0 && !terminating_degree(upper)) {
    // Gauss: Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
    const double balance = c - a - b;
    if (!(balance > 0.0)) {
      throw DomainError("hyp2f1: divergent at z = 1 (c - a - b <= 0)");
    }
    const auto g_c = signed_lgamma(c);
    const auto g_bal = signed_lgamma(balance);
    const auto g_ca = signed_lgamma(c - a);
    const auto g_cb = signed_lgamma(c - b);
    if (g_ca.sign == 0 || g_cb.sign == 0) return 0.0;
    const int sign = g_c.sign * g_bal.sign * g_ca.sign * g_cb.sign;
    return sign * std::exp(g_c.log_abs + g_bal.log_abs - g_ca.log_abs - g_cb.log_abs);
  }
  return hypergeometric_pfq({{a, b}, {c}, z});
}

double hyp3f2(double a1, double a2, double a3, double b1, double b2, double z,
              const SeriesPolicy& policy) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw DomainError("hyp3f2: z must lie in [0, 1]");
  }
  return hypergeometric_pfq({{a1, a2, a3}, {b1, b2}, z}, policy);
}

double c_n_alpha(const ModelParams& params) {
  const double half_n = 0.5 * params.n();
  const double alpha = params.alpha();
  return std::exp(log_gamma(half_n + alpha) + log_gamma(1.0 + alpha) -
                  log_gamma(half_n) - log_gamma(1.0 + 2.0 * alpha));
}

double phi_k_alpha(const ModelParams& params, int k, double s) {
  if (k < 0) throw InvalidParameter("phi_k_alpha: degree k must be >= 0");
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("phi_k_alpha: s must lie in [0, 1]");
  const double half_n = 0.5 * params.n();
  const double alpha = params.alpha();
  return hyp2f1(-alpha, k + half_n - 1.0 - alpha, k + half_n, s);
}

double gegenbauer(int k, double lambda, double t) {
  if (k < 0) throw InvalidParameter("gegenbauer: degree must be >= 0");
  if (!(lambda > 0.0)) throw DomainError("gegenbauer: lambda must be > 0");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * lambda * t;
  for (int m = 2; m <= k; ++m) {
    const double next =
        (2.0 * t * (m + lambda - 1.0) * curr - (m + 2.0 * lambda - 2.0) * prev) / m;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> gegenbauer_all(int max_degree, double lambda, double t) {
  if (max_degree < 0) throw InvalidParameter("gegenbauer_all: degree must be >= 0");
  if (!(lambda > 0.0)) throw DomainError("gegenbauer_all: lambda must be > 0");
  std::vector<double> values(static_cast<std::size_t>(max_degree) + 1);
  values[0] = 1.0;
  if (max_degree >= 1) values[1] = 2.0 * lambda * t;
  for (int m = 2; m <= max_degree; ++m) {
    values[m] = (2.0 * t * (m + lambda - 1.0) * values[m - 1] -
                 (m + 2.0 * lambda - 2.0) * values[m - 2]) / m;
  }
  return values;
}

double abs_moment(int n, double q) {
  if (n < 2) throw InvalidParameter("abs_moment: n must be >= 2");
  if (!(q >= 0.0)) throw DomainError("abs_moment: q must be >= 0");
  return std::exp(log_gamma(0.5 * n) + log_gamma(0.5 * (1.0 + q)) -
                  0.5 * std::log(std::numbers::pi) - log_gamma(0.5 * (n + q)));
}

} // namespace schwarz

#include "schwarz/errors.hpp"
#include "schwarz/specfun.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace schwarz;

TEST(ModelParams, AcceptsValidRange) {
  const ModelParams p(5, -0.25);
  EXPECT_EQ(p.n(), 5);
  EXPECT_DOUBLE_EQ(p.alpha(), -0.25);
  EXPECT_DOUBLE_EQ(p.half_exponent(), 2.25);
  EXPECT_DOUBLE_EQ(p.gegenbauer_index(), 1.5);
  EXPECT_EQ(p, ModelParams(5, -0.25));
}

TEST(ModelParams, RejectsOutOfRange) {
  EXPECT_THROW(ModelParams(2, 0.0), InvalidParameter);
  EXPECT_THROW(ModelParams(3, -0.5), InvalidParameter);
  EXPECT_THROW(ModelParams(3, -0.6), InvalidParameter);
  EXPECT_THROW(ModelParams(3, std::nan("")), InvalidParameter);
  EXPECT_THROW(ModelParams(3, INFINITY), InvalidParameter);
}

TEST(LogGamma, MatchesStdLgamma) {
  for (double x : {1e-8, 0.1, 0.5, 1.0, 1.5, 2.0, 7.25, 33.3, 170.5, 1e4}) {
    EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-13 * std::max(1.0, std::abs(std::lgamma(x)))) << x;
  }
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.5), DomainError);
}

TEST(Pochhammer, Values) {
  EXPECT_EQ(pochhammer(3.7, 0), 1.0);
  EXPECT_DOUBLE_EQ(pochhammer(1.0, 5), 120.0);
  EXPECT_DOUBLE_EQ(pochhammer(-2.0, 3), 0.0);
  for (double a : {0.3, 1.7, 4.5}) {
    for (unsigned k : {1u, 4u, 9u}) {
      EXPECT_NEAR(pochhammer(a, k), std::exp(std::lgamma(a + k) - std::lgamma(a)),
                  1e-13 * pochhammer(a, k));
    }
  }
}

TEST(Hypergeometric, MatchesBoostPfqOnRandomParameters) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> par(-2.5, 4.0);
  std::uniform_real_distribution<double> low(0.3, 5.0);
  std::uniform_real_distribution<double> zd(0.0, 0.9);
  for (int i = 0; i < 200; ++i) {
    const double a = par(rng), b = par(rng), c = low(rng), z = zd(rng);
    const double ref = oracle::pfq({a, b}, {c}, z);
    EXPECT_NEAR(hyp2f1(a, b, c, z), ref, 1e-12 * std::max(1.0, std::abs(ref)))
        << a << " " << b << " " << c << " " << z;
  }
  for (int i = 0; i < 100; ++i) {
    const double a1 = par(rng), a2 = par(rng), a3 = par(rng), b1 = low(rng), b2 = low(rng),
                 z = zd(rng);
    const double ref = oracle::pfq({a1, a2, a3}, {b1, b2}, z);
    EXPECT_NEAR(hyp3f2(a1, a2, a3, b1, b2, z), ref, 1e-11 * std::max(1.0, std::abs(ref)));
  }
}

TEST(Hypergeometric, TerminatingSeriesIsExactPolynomial) {
  // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1) z^2 / (c(c+1))
  const double b = 1.3, c = 2.1, z = 0.7;
  EXPECT_NEAR(hyp2f1(-2.0, b, c, z), 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0)),
              1e-15);
  // Terminating series may be evaluated at z = 1 even with c - a - b < 0.
  EXPECT_NEAR(hypergeometric_pfq({{-1.0, 5.0}, {2.0}, 1.0}), 1.0 - 2.5, 1e-15);
}

TEST(Hypergeometric, GaussSummationAtUnitArgument) {
  for (auto [a, b, c] : {std::tuple{0.5, 1.0, 3.0}, {-0.3, 1.2, 2.5}, {2.0, 0.25, 4.0}}) {
    const double ref = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
    EXPECT_NEAR(hyp2f1(a, b, c, 1.0), ref, 1e-13 * std::abs(ref));
  }
  EXPECT_THROW(hyp2f1(1.0, 1.0, 1.5, 1.0), DomainError);
}

TEST(Hypergeometric, DilogarithmIdentity) {
  // 3F2(1,1,1;2,2;z) = Li2(z)/z and Li2(1/2) = pi^2/12 - log(2)^2/2.
  const double li2 = std::numbers::pi * std::numbers::pi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0);
  EXPECT_NEAR(hyp3f2(1, 1, 1, 2, 2, 0.5), li2 / 0.5, 1e-15);
  EXPECT_NEAR(hyp3f2(1, 1, 1, 2, 2, 0.5), 1.164481052930025, 1e-15);
}

TEST(Hypergeometric, BudgetAndDomainErrors) {
  SeriesPolicy tight;
  tight.max_terms = 50;
  EXPECT_THROW(hyp3f2(1.0, 1.5, 2.0, 1.5, 3.5, 0.999, tight), ConvergenceError);
  EXPECT_THROW(hyp2f1(1.0, 1.0, 2.0, 1.5), DomainError);
  EXPECT_THROW(hyp2f1(1.0, 1.0, -2.0, 0.5), DomainError);
  EXPECT_THROW(hypergeometric_pfq({{1.0, 1.0, 1.0}, {2.0}, 0.1}), DomainError);
}

TEST(KernelConstant, Values) {
  EXPECT_NEAR(c_n_alpha(ModelParams(3, 0.0)), 1.0, 1e-15);
  EXPECT_NEAR(c_n_alpha(ModelParams(6, 1.0)), 1.5, 1e-14);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> alpha(-0.49, 6.0);
  for (int i = 0; i < 50; ++i) {
    const ModelParams p(3 + i % 6, alpha(rng));
    EXPECT_NEAR(c_n_alpha(p), oracle::kernel_constant(p.n(), p.alpha()), 1e-12 * c_n_alpha(p));
  }
}

TEST(KernelConstant, IsReciprocalOfRadialFactorAtOne) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> alpha(-0.49, 6.0);
  for (int i = 0; i < 50; ++i) {
    const ModelParams p(3 + i % 7, alpha(rng));
    EXPECT_NEAR(c_n_alpha(p) * phi_k_alpha(p, 0, 1.0), 1.0, 1e-12);
  }
}

TEST(RadialFactor, Values) {
  // 2F1(-1, -1/2; 3/2; 1/4) = 1 + 1/12
  EXPECT_NEAR(phi_k_alpha(ModelParams(3, 1.0), 0, 0.25), 13.0 / 12.0, 1e-15);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(phi_k_alpha(ModelParams(4, 0.0), k, 0.6), 1.0);
  EXPECT_THROW(phi_k_alpha(ModelParams(3, 0.0), -1, 0.5), InvalidParameter);
  EXPECT_THROW(phi_k_alpha(ModelParams(3, 0.0), 0, 1.5), DomainError);
}

TEST(RadialFactor, NeverVanishesAtOne) {
  // Gauss: Phi_k(1) = Gamma(k+n/2) Gamma(1+2a) / (Gamma(k+n/2+a) Gamma(1+a)) > 0.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> alpha(-0.499, 8.0);
  for (int i = 0; i < 300; ++i) {
    const ModelParams p(3 + i % 8, alpha(rng));
    const int k = i % 31;
    const double hn = 0.5 * p.n(), a = p.alpha();
    const double ref = std::exp(std::lgamma(k + hn) + std::lgamma(1 + 2 * a) -
                                std::lgamma(k + hn + a) - std::lgamma(1 + a));
    const double value = phi_k_alpha(p, k, 1.0);
    EXPECT_GT(value, 1e-12);
    EXPECT_NEAR(value, ref, 1e-11 * ref);
  }
}

TEST(Gegenbauer, MatchesExplicitSum) {
  for (double lambda : {0.5, 1.0, 1.5, 2.5}) {
    for (int k = 0; k <= 12; ++k) {
      for (double t : {-1.0, -0.73, 0.0, 0.31, 0.9, 1.0}) {
        const double ref = oracle::gegenbauer_sum(k, lambda, t);
        EXPECT_NEAR(gegenbauer(k, lambda, t), ref, 1e-12 * std::max(1.0, std::abs(ref)));
      }
    }
  }
  for (int k = 0; k <= 10; ++k) EXPECT_NEAR(gegenbauer(k, 0.5, 0.4), std::legendre(k, 0.4), 1e-14);
}

TEST(Gegenbauer, AllDegreesAgreeWithSingle) {
  const auto all = gegenbauer_all(20, 1.5, -0.37);
  ASSERT_EQ(all.size(), 21u);
  for (int k = 0; k <= 20; ++k) EXPECT_DOUBLE_EQ(all[k], gegenbauer(k, 1.5, -0.37));
  EXPECT_THROW(gegenbauer(-1, 1.0, 0.0), InvalidParameter);
  EXPECT_THROW(gegenbauer_all(3, 0.0, 0.0), DomainError);
}

TEST(AbsMoment, Values) {
  EXPECT_NEAR(abs_moment(3, 1.0), 0.5, 1e-15);
  EXPECT_NEAR(abs_moment(3, 2.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(abs_moment(5, 0.0), 1.0, 1e-15);
  for (int n : {3, 4, 7}) {
    for (double q : {0.5, 1.0, 2.5, 4.0}) {
      const double ref = oracle::sphere_integral(n, [q](double t) { return std::pow(std::abs(t), q); }, {0.0});
      EXPECT_NEAR(abs_moment(n, q), ref, 1e-12) << n << " " << q;
    }
  }
}

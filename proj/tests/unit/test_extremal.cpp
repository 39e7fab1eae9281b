#include "schwarz/errors.hpp"
#include "schwarz/extremal.hpp"
#include "schwarz/kernel.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <future>
#include <random>

using namespace schwarz;

namespace {

const Exponent kInf = Exponent::infinity();

double lq_oracle(const ModelParams& p, double r, double a, double q) {
  const int n = p.n();
  const double alpha = p.alpha();
  const double integral = oracle::sphere_integral(
      n, [&](double t) { return std::pow(std::abs(oracle::kernel(n, alpha, r, t) - a), q); },
      oracle::kernel_crossing(n, alpha, r, a));
  return std::pow(integral, 1.0 / q);
}

std::vector<ModelParams> standard_configs() {
  return {ModelParams(3, 0.0), ModelParams(3, 1.0), ModelParams(4, 0.5), ModelParams(6, 1.0)};
}

} // namespace

TEST(Exponent, ParsingAndConjugates) {
  EXPECT_TRUE(Exponent::parse("inf").is_infinite());
  EXPECT_TRUE(Exponent::parse("INF").is_infinite());
  EXPECT_EQ(Exponent::parse("2.5").value(), 2.5);
  EXPECT_THROW(Exponent::parse("0.5"), InvalidParameter);
  EXPECT_THROW(Exponent::parse("two"), InvalidParameter);
  EXPECT_THROW(Exponent(std::nan("")), InvalidParameter);
  EXPECT_TRUE(std::isinf(Exponent(1.0).conjugate()));
  EXPECT_EQ(kInf.conjugate(), 1.0);
  EXPECT_DOUBLE_EQ(Exponent(4.0).conjugate(), 4.0 / 3.0);
  EXPECT_EQ(kInf.token(), "inf");
  EXPECT_EQ(Exponent(1.5).token(), "1.5");
}

TEST(PhiQ, SpecialValues) {
  const ModelParams p(4, 0.5);
  EXPECT_DOUBLE_EQ(phi_q(p, 0.0, 0.3, 2.0), std::abs(c_n_alpha(p) - 0.3));
  for (double r : {0.2, 0.7, 0.95}) EXPECT_NEAR(phi_q(ModelParams(5, 0.0), r, 0.0, 1.0), 1.0, 1e-13);
  // (1 - r^2) sqrt(2F1(3, 5/2; 3/2; r^2)) for n = 3, alpha = 0.
  const double r = 0.5;
  const double ref = (1.0 - r * r) * std::sqrt(oracle::pfq({3.0, 2.5}, {1.5}, r * r));
  EXPECT_NEAR(phi_q(ModelParams(3, 0.0), r, 0.0, 2.0), ref, 1e-13 * ref);
  EXPECT_THROW(phi_q(p, 0.5, 1.0, 0.5), InvalidParameter);
  EXPECT_THROW(phi_q(p, 1.0, 1.0, 2.0), DomainError);
}

TEST(PhiQ, MatchesAdaptiveOracleAcrossCrossings) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const ModelParams p(3 + trial % 5, -0.4 + 2.5 * u(rng));
    const double r = 0.05 + 0.85 * u(rng);
    const double lo = kernel_zonal(p, r, -1.0), hi = kernel_zonal(p, r, 1.0);
    const double a = lo + (hi - lo) * u(rng);
    const double q = 1.0 + 4.0 * u(rng);
    const double ref = lq_oracle(p, r, a, q);
    EXPECT_NEAR(phi_q(p, r, a, q), ref, 1e-9 * ref) << p.n() << " " << p.alpha() << " r=" << r << " q=" << q;
  }
}

TEST(BigF, SignsAndLinearCase) {
  const ModelParams p(4, 1.0);
  const double r = 0.6;
  EXPECT_GT(big_f(p, r, 0.0, 1.5), 0.0);
  EXPECT_LT(big_f(p, r, 1.001 * kernel_zonal(p, r, 1.0), 3.0), 0.0);
  for (double a : {0.0, 0.4, 1.3, 5.0}) EXPECT_NEAR(big_f(p, r, a, 2.0), kernel_mass(p, r) - a, 1e-13);
  EXPECT_THROW(big_f(p, 0.0, 1.0, 2.0), DomainError);
  EXPECT_THROW(big_f(p, 0.5, 1.0, 1.0), InvalidParameter);
}

TEST(BigF, StrictlyDecreasingInA) {
  const ModelParams p(6, 1.0);
  for (double q : {1.2, 2.0, 5.0}) {
    double prev = big_f(p, 0.7, 0.0, q);
    for (int i = 1; i <= 50; ++i) {
      const double v = big_f(p, 0.7, 0.2 * i, q);
      EXPECT_LT(v, prev);
      prev = v;
    }
  }
}

TEST(AStar, CenterAndQuadraticCase) {
  for (const auto& p : standard_configs()) {
    EXPECT_EQ(a_star(p, 0.0, 3.0), c_n_alpha(p));
    for (double r : {0.1, 0.5, 0.9}) {
      EXPECT_NEAR(a_star(p, r, 2.0), a_star_p2_closed(p, r), 1e-10 * a_star_p2_closed(p, r));
    }
  }
  EXPECT_NEAR(a_star(ModelParams(3, 0.0), 0.5, 2.0), 1.0, 1e-11);
}

TEST(AStar, FirstOrderConditionAndSignChange) {
  for (const auto& p : standard_configs()) {
    for (double q : {1.3, 2.0, 3.0, 6.0}) {
      for (double r : {0.1, 0.5, 0.9}) {
        const double a = a_star(p, r, q);
        EXPECT_GT(a, 0.0);
        const double scale = big_f(p, r, 0.0, q);
        EXPECT_LE(std::abs(big_f(p, r, a, q)), 1e-10 * scale);
        EXPECT_GT(big_f(p, r, a * (1.0 - 1e-6), q), 0.0);
        EXPECT_LT(big_f(p, r, a * (1.0 + 1e-6), q), 0.0);
      }
    }
  }
}

TEST(AStar, AgreesWithGridSearchMinimum) {
  const ModelParams p(4, 0.5);
  for (double q : {1.5, 2.0, 3.0}) {
    for (int i = 1; i <= 9; ++i) {
      const double r = 0.1 * i;
      const double lo = kernel_zonal(p, r, -1.0), hi = kernel_zonal(p, r, 1.0);
      const auto [a_grid, min_grid] =
          oracle::grid_minimum([&](double a) { return phi_q(p, r, a, q); }, lo, hi, 101, 5);
      const double at_star = phi_q(p, r, a_star(p, r, q), q);
      EXPECT_LE(at_star, min_grid * (1.0 + 1e-12));
      EXPECT_NEAR(at_star, min_grid, 1e-6 * min_grid) << "q=" << q << " r=" << r;
    }
  }
}

TEST(G1, ClosedFormValues) {
  const ModelParams p(3, 0.0);
  EXPECT_EQ(g1_closed(p, 0.0), 0.0);
  EXPECT_NEAR(g1_closed(p, 0.5), 26.0 / 9.0, 1e-15);
  EXPECT_NEAR(a_star_midpoint(p, 0.5), 0.5 * (6.0 + 2.0 / 9.0), 1e-15);
  for (const auto& q : standard_configs()) {
    const double h = 1e-7;
    EXPECT_NEAR(g1_closed(q, h) / h, c_n_alpha(q) * (q.n() + 2.0 * q.alpha()), 1e-6);
  }
}

TEST(G1, MatchesInfSupGridOracle) {
  for (const auto& p : standard_configs()) {
    for (double r : {0.1, 0.4, 0.9}) {
      double lo = INFINITY, hi = -INFINITY;
      for (int j = 0; j < 10000; ++j) {
        const double v = oracle::kernel(p.n(), p.alpha(), r, -1.0 + 2.0 * j / 9999.0);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      const auto [a, g] = oracle::grid_minimum(
          [&](double a) { return std::max(hi - a, a - lo); }, lo, hi, 10000, 3);
      EXPECT_NEAR(g1_closed(p, r), g, 1e-8 * g);
      EXPECT_NEAR(a_star_midpoint(p, r), a, 1e-8 * a);
    }
  }
}

TEST(G2, VarianceFormAgainstOracle) {
  const ModelParams p(3, 0.0);
  const double r = 0.3;
  EXPECT_EQ(g2_closed(p, 0.0), 0.0);
  // alpha = 0: the mass factor is 2F1(3/2, 1; 3/2; r^2) = 1 / (1 - r^2).
  const double mass = 1.0 / (1.0 - r * r);
  EXPECT_NEAR(g2_closed(p, r), (1 - r * r) * std::sqrt(oracle::pfq({3.0, 2.5}, {1.5}, r * r) - mass * mass), 1e-14);
  for (const auto& q : standard_configs()) {
    for (double s : {0.2, 0.6, 0.85}) {
      const int n = q.n();
      const double alpha = q.alpha();
      const double m1 = oracle::sphere_integral(n, [&](double t) { return oracle::kernel(n, alpha, s, t); });
      const double m2 = oracle::sphere_integral(
          n, [&](double t) { return std::pow(oracle::kernel(n, alpha, s, t), 2); });
      const double ref = std::sqrt(m2 - m1 * m1);
      EXPECT_NEAR(g2_closed(q, s), ref, 1e-9 * ref);
      EXPECT_NEAR(g_p(q, s, Exponent(2.0)), g2_closed(q, s), 1e-8 * ref);
    }
  }
}

TEST(GInf, ClosedFormAgainstMedianConstruction) {
  for (const auto& p : standard_configs()) {
    EXPECT_EQ(ginf_closed(p, 0.0), 0.0);
    for (double r : {0.05, 0.3, 0.6, 0.9, 0.99}) {
      const auto e = extremal(p, r, kInf);
      EXPECT_EQ(e.q, 1.0);
      EXPECT_EQ(e.a_star, kernel_zonal(p, r, 0.0));
      EXPECT_NEAR(e.g_value, ginf_closed(p, r), 1e-7 * e.g_value);
      EXPECT_NEAR(e.g_value, lq_oracle(p, r, e.a_star, 1.0), 1e-9 * e.g_value);
    }
  }
  EXPECT_THROW(ginf_closed(ModelParams(3, 0.0), 0.9995), DomainError);
}

TEST(GInf, ReferenceCurveValues) {
  // Computed independently with arbitrary-precision arithmetic.
  const ModelParams p(6, 1.0);
  EXPECT_NEAR(ginf_closed(p, 0.5), 1.25555440303243, 1e-12);
  EXPECT_NEAR(ginf_closed(p, 0.9), 1.09461220782066, 1e-12);
  EXPECT_NEAR(ginf_closed(p, 0.999), 1.0009994996969, 1e-9);
}

TEST(GInf, ApproachesOneAtBoundaryInMonotoneRange) {
  EXPECT_GT(g_p(ModelParams(3, 0.0), 0.999, kInf), 0.99);
  EXPECT_GT(ginf_closed(ModelParams(3, 0.0), 0.999), 0.99);
}

TEST(GInf, SupremumOutsideMonotoneRangeIsReported) {
  const ModelParams p(6, 1.0);
  double sup = 0.0;
  for (const auto& s : sample_curve(p, kInf, uniform_radii(0.999, 400)).samples) sup = std::max(sup, s.g_value);
  RecordProperty("observed_sup_G_inf_n6_alpha1", std::to_string(sup));
  EXPECT_TRUE(std::isfinite(sup));
}

TEST(GradientConstant, Values) {
  EXPECT_NEAR(gradient_bound_constant(ModelParams(3, 0.0), 1.0), 1.5, 1e-15);
  EXPECT_NEAR(gradient_bound_constant(ModelParams(3, 0.0), 2.0), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(gradient_bound_constant(ModelParams(6, 1.0), INFINITY), 12.0, 1e-13);
  EXPECT_THROW(gradient_bound_constant(ModelParams(3, 0.0), 0.5), InvalidParameter);
}

TEST(GradientConstant, IsDerivativeAtZero) {
  for (const auto& p : {ModelParams(3, 0.0), ModelParams(4, 1.0), ModelParams(5, -0.25)}) {
    for (const auto& e : {Exponent(1.0), Exponent(1.5), Exponent(2.0), Exponent(4.0), kInf}) {
      const double h = 1e-4;
      const double c = gradient_bound_constant(p, e.conjugate());
      EXPECT_NEAR(g_p(p, h, e) / h, c, 1e-3 * c) << p.n() << " " << p.alpha() << " p=" << e.token();
    }
  }
}

TEST(ExtremalResult, Invariants) {
  for (const auto& e : {Exponent(1.0), Exponent(3.0), kInf}) {
    const auto at_zero = extremal(ModelParams(4, 0.5), 0.0, e);
    EXPECT_EQ(at_zero.g_value, 0.0);
    EXPECT_GT(at_zero.a_star, 0.0);
    const auto res = extremal(ModelParams(4, 0.5), 0.4, e);
    EXPECT_GT(res.g_value, 0.0);
    EXPECT_GT(res.a_star, 0.0);
    EXPECT_EQ(res.method, e.value() == 1.0 ? Method::closed_form : Method::numeric);
  }
  EXPECT_EQ(to_string(Method::closed_form), "closed_form");
  EXPECT_THROW(g_p(ModelParams(3, 0.0), -0.1, kInf), DomainError);
}

TEST(Monotonicity, IncreasingInProvenParameterRange) {
  for (int n : {3, 4}) {
    for (double alpha : {-0.25, 0.0, 0.5 * n - 1.0, 0.5 * n}) {
      const ModelParams p(n, alpha);
      for (const auto& e : {Exponent(1.0), Exponent(2.0), Exponent(4.0), kInf}) {
        const auto curve = sample_curve(p, e, uniform_radii(0.99, 200));
        std::vector<double> values;
        for (const auto& s : curve.samples) values.push_back(s.g_value);
        EXPECT_TRUE(check_monotonicity(values, 0.0).strictly_increasing)
            << "n=" << n << " alpha=" << alpha << " p=" << e.token();
      }
    }
  }
}

TEST(Monotonicity, CounterexampleForSixDimensionsAlphaOne) {
  const auto radii = uniform_radii(0.99, 200);
  const auto curve = sample_curve(ModelParams(6, 1.0), kInf, radii);
  std::vector<double> values;
  for (const auto& s : curve.samples) values.push_back(s.g_value);
  const auto report = check_monotonicity(values, 1e-6);
  EXPECT_TRUE(report.non_monotone);
  EXPECT_GT(report.largest_drop, 0.1);
  EXPECT_NEAR(radii[report.argmax], 0.57, 0.02);
}

TEST(Curves, SamplingContract) {
  const auto radii = uniform_radii(0.8, 5);
  ASSERT_EQ(radii.size(), 5u);
  EXPECT_EQ(radii.front(), 0.0);
  EXPECT_EQ(radii.back(), 0.8);
  const auto curve = sample_curve(ModelParams(3, 0.0), Exponent(1.0), radii);
  EXPECT_EQ(curve.samples.front().g_value, 0.0);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    EXPECT_EQ(curve.samples[i].r, radii[i]);
    EXPECT_DOUBLE_EQ(curve.samples[i].g_value, g1_closed(ModelParams(3, 0.0), radii[i]));
  }
  const std::vector<double> bad_start{0.1, 0.2};
  const std::vector<double> unsorted{0.0, 0.3, 0.2};
  EXPECT_THROW(sample_curve(ModelParams(3, 0.0), kInf, bad_start), InvalidParameter);
  EXPECT_THROW(sample_curve(ModelParams(3, 0.0), kInf, unsorted), InvalidParameter);
  EXPECT_THROW(uniform_radii(1.0, 5), InvalidParameter);
  EXPECT_THROW(uniform_radii(0.5, 1), InvalidParameter);
}

TEST(Curves, MonotonicityReport) {
  const std::vector<double> rising{0.0, 1.0, 2.0};
  const std::vector<double> bump{0.0, 2.0, 1.5, 1.9};
  EXPECT_TRUE(check_monotonicity(rising, 1e-6).strictly_increasing);
  const auto r = check_monotonicity(bump, 1e-6);
  EXPECT_FALSE(r.strictly_increasing);
  EXPECT_TRUE(r.non_monotone);
  EXPECT_EQ(r.argmax, 1u);
  EXPECT_DOUBLE_EQ(r.largest_drop, 0.5);
}

TEST(Concurrency, IndependentRadiiEvaluateConsistently) {
  const ModelParams p(4, 1.0);
  std::vector<double> radii{0.15, 0.35, 0.55, 0.75, 0.95};
  std::vector<double> serial;
  for (double r : radii) serial.push_back(g_p(p, r, Exponent(3.0)));
  std::vector<std::future<double>> futures;
  for (double r : radii) futures.push_back(std::async(std::launch::async, [&p, r] { return g_p(p, r, Exponent(3.0)); }));
  for (std::size_t i = 0; i < radii.size(); ++i) EXPECT_EQ(futures[i].get(), serial[i]);
}

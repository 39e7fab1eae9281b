#include "schwarz/extremal.hpp"
#include "schwarz/gauss_jacobi.hpp"
#include "schwarz/poisson.hpp"
#include "schwarz/quadrature.hpp"
#include "schwarz/specfun.hpp"

#include <benchmark/benchmark.h>

using namespace schwarz;

static void BM_GInfClosed(benchmark::State& state) {
  const ModelParams p(6, 1.0);
  const double r = state.range(0) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(ginf_closed(p, r));
}
BENCHMARK(BM_GInfClosed)->Arg(500)->Arg(900)->Arg(990)->Arg(999);

static void BM_GaussJacobi(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi(order, 1.5, 0.25));
}
BENCHMARK(BM_GaussJacobi)->Arg(32)->Arg(96)->Arg(256);

static void BM_BuildRule(benchmark::State& state) {
  const ModelParams p(5, 0.5);
  RuleOptions options;
  options.breakpoints = {0.3};
  options.breakpoint_exponent = 1.5;
  options.peak_radius = 0.99;
  for (auto _ : state) benchmark::DoNotOptimize(build_rule(p, options));
}
BENCHMARK(BM_BuildRule);

static void BM_AStar(benchmark::State& state) {
  const ModelParams p(6, 1.0);
  const double q = state.range(0) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(a_star(p, 0.8, q));
}
BENCHMARK(BM_AStar)->Arg(12)->Arg(20)->Arg(50);

static void BM_GpCurve(benchmark::State& state) {
  const ModelParams p(4, 1.0);
  const auto radii = uniform_radii(0.99, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_curve(p, Exponent(3.0), radii));
}
BENCHMARK(BM_GpCurve)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_SolveSeries(benchmark::State& state) {
  const ModelParams p(3, 1.0);
  const auto e = project_zonal(p, ZonalFunction::polynomial({0.1, -0.4, 0.3, 0.7}), 16);
  const auto x = BallPoint::on_axis(3, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_series(p, e, x));
}
BENCHMARK(BM_SolveSeries);
BENCHMARK_MAIN();

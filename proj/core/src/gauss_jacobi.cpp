#include "schwarz/gauss_jacobi.hpp"

#include "schwarz/errors.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace schwarz {
namespace {

struct JacobiValue {
  double p;     // P_N^{(a,b)}(x)
  double dp;    // derivative
};

JacobiValue evaluate_jacobi(int order, double a, double b, double x) {
  double p_prev = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  if (order == 0) return {1.0, 0.0};
  for (int k = 2; k <= order; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = next;
  }
  const double n = order;
  const double s = 2.0 * n + a + b;
  const double dp = (n * (a - b - s * x) * p + 2.0 * (n + a) * (n + b) * p_prev) /
                    (s * (1.0 - x * x));
  return {p, dp};
}

} // namespace

JacobiRule gauss_jacobi(int order, double a, double b) {
  if (order < 1) throw InvalidParameter("gauss_jacobi: order must be >= 1");
  if (!(a > -1.0 && b > -1.0)) throw InvalidParameter("gauss_jacobi: exponents must be > -1");

  const double ab = a + b;
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(std::max(order - 1, 1));
  for (int k = 0; k < order; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < order; ++k) {
    const double s = 2.0 * k + ab;
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                        (s * s * (s + 1.0) * (s - 1.0));
    sub[k - 1] = std::sqrt(beta);
  }

  JacobiRule rule;
  rule.order = order;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  if (order == 1) {
    rule.nodes[0] = diag[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(order - 1), Eigen::EigenvaluesOnly);
    for (int i = 0; i < order; ++i) rule.nodes[i] = solver.eigenvalues()[i];
  }

  using boost::math::lgamma;
  const double log_scale = lgamma(order + a + 1.0) + lgamma(order + b + 1.0) -
                           lgamma(order + ab + 1.0) - lgamma(order + 1.0) +
                           (ab + 1.0) * std::log(2.0);
  for (int i = 0; i < order; ++i) {
    double x = rule.nodes[i];
    JacobiValue v = evaluate_jacobi(order, a, b, x);
    for (int it = 0; it < 4; ++it) {
      const double dx = v.p / v.dp;
      x -= dx;
      v = evaluate_jacobi(order, a, b, x);
      if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_scale) / ((1.0 - x * x) * v.dp * v.dp);
  }
  // The lgamma-based scale is only good to ~1e-14; the zeroth moment pins it exactly.
  const double mu0 = std::pow(2.0, ab + 1.0) * boost::math::beta(a + 1.0, b + 1.0);
  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w *= mu0 / total;

  std::vector<std::size_t> idx(order);
  for (int i = 0; i < order; ++i) idx[i] = static_cast<std::size_t>(i);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t l, std::size_t r) { return rule.nodes[l] < rule.nodes[r]; });
  JacobiRule sorted = rule;
  for (int i = 0; i < order; ++i) {
    sorted.nodes[i] = rule.nodes[idx[i]];
    sorted.weights[i] = rule.weights[idx[i]];
  }
  return sorted;
}

std::shared_ptr<const JacobiRule> cached_gauss_jacobi(int order, double a, double b) {
  using Key = std::tuple<int, double, double>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const JacobiRule>> cache;

  const Key key{order, a, b};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const JacobiRule>(gauss_jacobi(order, a, b));
  std::lock_guard lock(mutex);
  if (cache.size() >= 512) cache.clear(); // bound memory under long exponent sweeps
  return cache.try_emplace(key, std::move(rule)).first->second;
}

} // namespace schwarz

#pragma once

#include <memory>
#include <vector>

namespace schwarz {

/// Gauss-Jacobi rule for the weight (1 - x)^a (1 + x)^b on [-1, 1],
/// nodes ascending.
struct JacobiRule {
  int order = 0;
  double a = 0.0;
  double b = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch eigen-decomposition followed by Newton refinement of the
/// nodes on the three-term recurrence; weights from the Christoffel formula.
/// Requires order >= 1 and a, b > -1.
JacobiRule gauss_jacobi(int order, double a, double b);

/// Memoized gauss_jacobi. Thread-safe; the returned rule is immutable.
std::shared_ptr<const JacobiRule> cached_gauss_jacobi(int order, double a, double b);

} // namespace schwarz

#pragma once

// The Poisson-type kernel
//
//   P(x, zeta) = C_{n,alpha} (1 - |x|^2)^{1 + 2 alpha} / |x - zeta|^{n + 2 alpha},
//
// which reproduces solutions of the invariant Laplacian from their
// boundary values, plus a finite-difference applier for the operator
// itself.

#include "schwarz/specfun.hpp"

#include <functional>
#include <span>
#include <vector>

namespace schwarz {

/// A point of the open unit ball. Throws DomainError if |x| >= 1.
class BallPoint {
public:
  explicit BallPoint(std::vector<double> coords);

  /// r e_n in R^n.
  static BallPoint on_axis(int n, double r);

  std::span<const double> coords() const noexcept { return coords_; }
  int dimension() const noexcept { return static_cast<int>(coords_.size()); }
  double norm() const noexcept { return norm_; }

private:
  std::vector<double> coords_;
  double norm_;
};

/// A point of the unit sphere, |coords| = 1 within 1e-12.
class SpherePoint {
public:
  explicit SpherePoint(std::vector<double> coords);

  /// Normalizes an arbitrary non-zero vector onto the sphere.
  static SpherePoint normalized(std::vector<double> v);
  /// The point whose last coordinate is t (and whose first is sqrt(1 - t^2)).
  static SpherePoint with_height(int n, double t);

  std::span<const double> coords() const noexcept { return coords_; }
  int dimension() const noexcept { return static_cast<int>(coords_.size()); }
  /// Last coordinate, the zonal variable.
  double height() const noexcept { return coords_.back(); }

private:
  std::vector<double> coords_;
};

/// Householder reflection H = I - 2 v v^T / (v^T v) sending the direction
/// e_n to a prescribed unit vector. H is orthogonal and self-inverse, so it
/// also sends that vector back to e_n.
class AxisReflection {
public:
  /// Reflection taking e_n to `target / |target|`; identity if already aligned.
  explicit AxisReflection(std::span<const double> target);

  std::vector<double> apply(std::span<const double> x) const;

private:
  std::vector<double> v_;
  double scale_ = 0.0; // 2 / (v^T v), zero for the identity
};

double poisson_kernel(const ModelParams& params, const BallPoint& x, const SpherePoint& zeta);

/// P(r e_n, eta) as a function of t = eta_n:
/// C (1 - r^2)^{1+2 alpha} / (1 + r^2 - 2 r t)^{n/2 + alpha}.
/// Requires r in [0, 1) and t in [-1, 1].
double kernel_zonal(const ModelParams& params, double r, double t);

/// Same as kernel_zonal without argument checks or recomputing C_{n,alpha};
/// for inner loops of the quadrature code.
double kernel_zonal_unchecked(const ModelParams& params, double c_norm, double r, double t) noexcept;

/// Gradient of P in its first argument at a general interior point.
std::vector<double> kernel_gradient(const ModelParams& params, const BallPoint& x,
                                    const SpherePoint& eta);

/// Gradient of P in its first argument at x = r e_n.
std::vector<double> kernel_gradient_axis(const ModelParams& params, double r,
                                         const SpherePoint& eta);

/// Surface integral of P(r zeta, .), closed form C 2F1(-alpha, n/2-1-alpha; n/2; r^2).
double kernel_mass(const ModelParams& params, double r);

using ScalarField = std::function<double(std::span<const double>)>;

struct FiniteDifference {
  double step = 1e-3;
  /// Combine steps h and 2h to cancel the O(h^2) term.
  bool richardson = false;
};

/// Central-difference approximation of the invariant Laplacian
///   (1-|x|^2) [ (1-|x|^2)/4 Lap u + alpha x.grad u + alpha (n/2 - 1 - alpha) u ]
/// at x. Throws DomainError if the stencil leaves the ball (|x| + 2h >= 1).
double apply_invariant_laplacian(const ModelParams& params, const ScalarField& u,
                                 const BallPoint& x, FiniteDifference fd = {});

} // namespace schwarz

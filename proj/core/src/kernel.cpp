#include "schwarz/kernel.hpp"

#include "schwarz/errors.hpp"

#include <cmath>
#include <numeric>

namespace schwarz {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void require_same_dimension(const ModelParams& params, int dim) {
  if (dim != params.n()) {
    throw InvalidParameter("point dimension " + std::to_string(dim) +
                           " does not match n = " + std::to_string(params.n()));
  }
}

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
}

} // namespace

BallPoint::BallPoint(std::vector<double> coords)
    : coords_(std::move(coords)), norm_(std::sqrt(dot(coords_, coords_))) {
  if (coords_.empty()) throw InvalidParameter("BallPoint: empty coordinate vector");
  if (!(norm_ < 1.0)) throw DomainError("BallPoint: |x| must be < 1");
}

BallPoint BallPoint::on_axis(int n, double r) {
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  c.back() = r;
  return BallPoint(std::move(c));
}

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidParameter("SpherePoint: empty coordinate vector");
  const double norm = std::sqrt(dot(coords_, coords_));
  if (std::abs(norm - 1.0) > 1e-12) throw DomainError("SpherePoint: |zeta| must be 1");
}

SpherePoint SpherePoint::normalized(std::vector<double> v) {
  const double norm = std::sqrt(dot(v, v));
  if (!(norm > 0.0)) throw DomainError("SpherePoint::normalized: zero vector");
  for (double& c : v) c /= norm;
  return SpherePoint(std::move(v));
}

SpherePoint SpherePoint::with_height(int n, double t) {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("SpherePoint::with_height: t outside [-1, 1]");
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  c.front() = std::sqrt(std::max(0.0, 1.0 - t * t));
  c.back() = t;
  return SpherePoint(std::move(c));
}

AxisReflection::AxisReflection(std::span<const double> target) {
  const double norm = std::sqrt(dot(target, target));
  if (!(norm > 0.0)) throw DomainError("AxisReflection: zero target");
  v_.assign(target.begin(), target.end());
  for (double& c : v_) c = -c / norm;
  v_.back() += 1.0; // v = e_n - target/|target|
  const double vv = dot(v_, v_);
  scale_ = vv > 1e-30 ? 2.0 / vv : 0.0;
}

std::vector<double> AxisReflection::apply(std::span<const double> x) const {
  std::vector<double> out(x.begin(), x.end());
  if (scale_ == 0.0) return out;
  const double s = scale_ * dot(v_, x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= s * v_[i];
  return out;
}

double poisson_kernel(const ModelParams& params, const BallPoint& x, const SpherePoint& zeta) {
  require_same_dimension(params, x.dimension());
  require_same_dimension(params, zeta.dimension());
  const auto xc = x.coords();
  const auto zc = zeta.coords();
  double dist2 = 0.0;
  for (std::size_t i = 0; i < xc.size(); ++i) {
    const double d = xc[i] - zc[i];
    dist2 += d * d;
  }
  const double alpha = params.alpha();
  const double one_minus = 1.0 - x.norm() * x.norm();
  return c_n_alpha(params) * std::pow(one_minus, 1.0 + 2.0 * alpha) /
         std::pow(dist2, params.half_exponent());
}

double kernel_zonal_unchecked(const ModelParams& params, double c_norm, double r,
                              double t) noexcept {
  // 1 + r^2 - 2 r t written as (1 - r)^2 + 2 r (1 - t) to keep precision near t = 1.
  const double dist2 = (1.0 - r) * (1.0 - r) + 2.0 * r * (1.0 - t);
  const double alpha = params.alpha();
  return c_norm * std::pow((1.0 - r) * (1.0 + r), 1.0 + 2.0 * alpha) /
         std::pow(dist2, params.half_exponent());
}

double kernel_zonal(const ModelParams& params, double r, double t) {
  require_radius(r);
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("kernel_zonal: t must lie in [-1, 1]");
  return kernel_zonal_unchecked(params, c_n_alpha(params), r, t);
}

std::vector<double> kernel_gradient(const ModelParams& params, const BallPoint& x,
                                    const SpherePoint& eta) {
  require_same_dimension(params, x.dimension());
  require_same_dimension(params, eta.dimension());
  const auto xc = x.coords();
  const auto ec = eta.coords();
  const double alpha = params.alpha();
  const double m = params.n() + 2.0 * alpha;
  const double one_minus = 1.0 - x.norm() * x.norm();

  std::vector<double> diff(xc.size());
  double dist2 = 0.0;
  for (std::size_t i = 0; i < xc.size(); ++i) {
    diff[i] = ec[i] - xc[i];
    dist2 += diff[i] * diff[i];
  }
  const double scale = c_n_alpha(params) * std::pow(one_minus, 2.0 * alpha) /
                       std::pow(dist2, 0.5 * m + 1.0);
  std::vector<double> grad(xc.size());
  for (std::size_t i = 0; i < xc.size(); ++i) {
    grad[i] = scale * (m * one_minus * diff[i] - 2.0 * (1.0 + 2.0 * alpha) * xc[i] * dist2);
  }
  return grad;
}

std::vector<double> kernel_gradient_axis(const ModelParams& params, double r,
                                         const SpherePoint& eta) {
  require_radius(r);
  return kernel_gradient(params, BallPoint::on_axis(params.n(), r), eta);
}

double kernel_mass(const ModelParams& params, double r) {
  require_radius(r);
  const double half_n = 0.5 * params.n();
  const double alpha = params.alpha();
  return c_n_alpha(params) * hyp2f1(-alpha, half_n - 1.0 - alpha, half_n, r * r);
}

namespace {

struct Derivatives {
  double laplacian = 0.0;
  double radial = 0.0; // x . grad u
};

Derivatives central_differences(const ScalarField& u, std::span<const double> x, double h,
                                double center) {
  Derivatives d;
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const double xi = probe[i];
    probe[i] = xi + h;
    const double up = u(probe);
    probe[i] = xi - h;
    const double down = u(probe);
    probe[i] = xi;
    d.laplacian += (up - 2.0 * center + down) / (h * h);
    d.radial += xi * (up - down) / (2.0 * h);
  }
  return d;
}

} // namespace

double apply_invariant_laplacian(const ModelParams& params, const ScalarField& u,
                                 const BallPoint& x, FiniteDifference fd) {
  require_same_dimension(params, x.dimension());
  const double h = fd.step;
  if (!(h > 0.0)) throw InvalidParameter("apply_invariant_laplacian: step must be > 0");
  if (!(x.norm() + 2.0 * h < 1.0)) {
    throw DomainError("apply_invariant_laplacian: stencil leaves the unit ball");
  }
  const auto xc = x.coords();
  const double center = u(xc);
  Derivatives d = central_differences(u, xc, h, center);
  if (fd.richardson) {
    const Derivatives coarse = central_differences(u, xc, 2.0 * h, center);
    d.laplacian = (4.0 * d.laplacian - coarse.laplacian) / 3.0;
    d.radial = (4.0 * d.radial - coarse.radial) / 3.0;
  }
  const double alpha = params.alpha();
  const double one_minus = 1.0 - x.norm() * x.norm();
  return one_minus * (0.25 * one_minus * d.laplacian + alpha * d.radial +
                      alpha * (0.5 * params.n() - 1.0 - alpha) * center);
}

} // namespace schwarz

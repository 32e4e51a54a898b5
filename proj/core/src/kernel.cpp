#include "alpharm/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alpharm/special.hpp"

namespace alpharm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryMargin = 1e-12;
constexpr double kQuadAgreeTol = 1e-12;
constexpr int kQuadMaxNodes = 65536;

void check_alpha(double alpha) {
  if (!(alpha > -1.0))
    throw std::domain_error("kernel: requires alpha > -1");
}

void check_radius(double r) {
  if (!(r >= 0.0) || r >= 1.0 - kBoundaryMargin)
    throw std::domain_error("kernel: radius must lie in [0, 1 - 1e-12)");
}

}  // namespace

DiskPoint::DiskPoint(std::complex<double> z) : value(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      std::abs(z) >= 1.0 - kBoundaryMargin)
    throw std::domain_error("DiskPoint: |z| must be below 1 - 1e-12");
}

double kernel_value(double alpha, const DiskPoint& z, double t) {
  check_alpha(alpha);
  const double one_minus = 1.0 - std::norm(z.value);
  const double d2 = std::norm(1.0 - z.value * std::polar(1.0, -t));
  return c_alpha(alpha) * std::pow(one_minus, alpha + 1.0) *
         std::pow(d2, -0.5 * (alpha + 2.0));
}

KernelGradient kernel_gradients(double alpha, const DiskPoint& z, double t) {
  check_alpha(alpha);
  const std::complex<double> eit = std::polar(1.0, t);
  const std::complex<double> emit = std::conj(eit);
  const std::complex<double> zb = std::conj(z.value);
  const double one_minus = 1.0 - std::norm(z.value);
  const double d2 = std::norm(1.0 - z.value * emit);
  // |1 - z e^{-it}|^(4+alpha) = d2^((4+alpha)/2)
  const double denom = std::pow(d2, 0.5 * (4.0 + alpha));
  const std::complex<double> dz =
      c_alpha(alpha) * std::pow(one_minus, alpha) *
      ((1.0 + 0.5 * alpha) * emit * (1.0 - zb * eit) * one_minus -
       (alpha + 1.0) * zb * d2) /
      denom;
  return KernelGradient{dz, std::conj(dz)};
}

double kernel_mean_closed(double alpha, double r) {
  check_alpha(alpha);
  check_radius(r);
  return c_alpha(alpha) * hyp2f1_profile(alpha, 0, r * r);
}

double kernel_mean_trapezoid(double alpha, double r, int n) {
  check_alpha(alpha);
  check_radius(r);
  if (n < 16) throw std::domain_error("kernel_mean_trapezoid: n must be >= 16");
  // |1 - r e^{i eps}|^2 = 1 - 2 r cos(eps) + r^2; uniform nodes make the
  // trapezoid rule a plain average for this periodic integrand.
  const double expo = -0.5 * (alpha + 2.0);
  const double r2 = r * r;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double eps = 2.0 * kPi * j / n;
    sum += std::pow(1.0 - 2.0 * r * std::cos(eps) + r2, expo);
  }
  return c_alpha(alpha) * std::pow(1.0 - r2, alpha + 1.0) * sum / n;
}

double kernel_mean_quadrature(double alpha, double r, int n) {
  if (n < 16) n = 16;
  double coarse = kernel_mean_trapezoid(alpha, r, n);
  while (n < kQuadMaxNodes) {
    n *= 2;
    const double fine = kernel_mean_trapezoid(alpha, r, n);
    if (std::fabs(fine - coarse) <= kQuadAgreeTol * std::fmax(1.0, std::fabs(fine)))
      return fine;
    coarse = fine;
  }
  return coarse;
}

double kernel_mean_slope(double alpha, double r) {
  check_alpha(alpha);
  check_radius(r);
  const double half = 1.0 - 0.5 * alpha;
  return 0.5 * alpha * alpha * c_alpha(alpha) * r *
         hyp2f1(HypParams(half, half, 2.0), r * r);
}

double kernel_mean_slope_limit(double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("kernel_mean_slope_limit: requires alpha > 0");
  const double half = 1.0 - 0.5 * alpha;
  return 0.5 * alpha * alpha * c_alpha(alpha) *
         hyp2f1(HypParams(half, half, 2.0), 1.0);
}

}  // namespace alpharm

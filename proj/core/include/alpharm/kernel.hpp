#pragma once

#include <complex>

namespace alpharm {

// Point of the open unit disk.  The constructor rejects |z| >= 1 - 1e-12
// (and non-finite input) so downstream formulas never divide by zero.
struct DiskPoint {
  explicit DiskPoint(std::complex<double> z);
  std::complex<double> value;
};

// Wirtinger gradient of the disk kernel at fixed boundary angle.  The kernel
// is real-valued, so dzbar is always the conjugate of dz; both are stored so
// callers can consume them symmetrically.
struct KernelGradient {
  std::complex<double> dz;
  std::complex<double> dzbar;
};

// Weighted disk kernel c_alpha (1-|z|^2)^(alpha+1) / |1 - z e^{-it}|^(alpha+2);
// positive on the open disk for alpha > -1.
double kernel_value(double alpha, const DiskPoint& z, double t);

// Closed-form Wirtinger derivatives of kernel_value with respect to z and
// conj(z) at fixed t.
KernelGradient kernel_gradients(double alpha, const DiskPoint& z, double t);

// Angular mean (1/2pi) \int_0^{2pi} K_alpha(r e^{i eps}) d eps.
//
// kernel_mean_closed evaluates c_alpha F(-alpha/2,-alpha/2;1;r^2) through
// hyp2f1_profile, which stays accurate arbitrarily close to the boundary.
//
// kernel_mean_trapezoid is a single uniform trapezoid pass with n nodes
// (n >= 16; spectrally accurate since the integrand is periodic analytic).
// kernel_mean_quadrature refines the trapezoid by doubling n until two
// successive passes agree to 1e-12 or n reaches 65536.
double kernel_mean_closed(double alpha, double r);
double kernel_mean_trapezoid(double alpha, double r, int n);
double kernel_mean_quadrature(double alpha, double r, int n = 256);

// Radial slope of the mean: (alpha^2/2) c_alpha r F(1-alpha/2,1-alpha/2;2;r^2)
// for r in [0, 1).  kernel_mean_slope_limit evaluates the r -> 1- limit via
// the x = 1 value of the same series; it equals alpha/2 and requires alpha > 0.
double kernel_mean_slope(double alpha, double r);
double kernel_mean_slope_limit(double alpha);

}  // namespace alpharm

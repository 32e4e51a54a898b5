#pragma once

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "alpharm/kernel.hpp"

namespace alpharm {

// Uniform boundary samples f(e^{i theta_j}) at theta_j = 2 pi j / N,
// j = 0..N-1.  At least 16 samples, all finite.
class BoundaryData {
 public:
  explicit BoundaryData(std::vector<std::complex<double>> samples);
  int size() const { return static_cast<int>(samples_.size()); }
  const std::vector<std::complex<double>>& samples() const { return samples_; }

 private:
  std::vector<std::complex<double>> samples_;
};

// Truncated two-sided series
//   f(z) = sum_{k=0..K} c_k F(-a/2, k-a/2; k+1; |z|^2) z^k
//        + sum_{k=1..K} c_{-k} F(-a/2, k-a/2; k+1; |z|^2) conj(z)^k
// over the unit disk, with alpha > -1 and order K >= 1.
//
// Construction validates that every index satisfies |k| <= K, that all
// coefficients are finite, and the growth guard
// max(|c_{-K}|, |c_K|)^(1/K) <= 1.5 (a sanity check on the top modes;
// admissible boundary data keeps this near or below 1).
class SeriesSolution {
 public:
  SeriesSolution(double alpha, int order,
                 const std::map<int, std::complex<double>>& coeffs);
  double alpha() const { return alpha_; }
  int order() const { return order_; }
  std::complex<double> coeff(int k) const;

 private:
  double alpha_;
  int order_;
  std::vector<std::complex<double>> c_;  // packed c_{-K}..c_K
};

// Wirtinger derivative pair of a solution at a point.
struct WirtingerPair {
  std::complex<double> fz;
  std::complex<double> fzbar;
  // Operator norm |f_z| + |f_zbar| of the real-linear differential.
  double operator_norm() const { return std::abs(fz) + std::abs(fzbar); }
  // Smallest singular value | |f_z| - |f_zbar| |.
  double lower_norm() const { return std::fabs(std::abs(fz) - std::abs(fzbar)); }
  // Jacobian determinant |f_z|^2 - |f_zbar|^2.
  double jacobian() const { return std::norm(fz) - std::norm(fzbar); }
};

// Hypergeometric radial factors F(-a/2, k-a/2; k+1; w), k = 0..K, and their
// w-derivatives, shared by evaluation routines (w = |z|^2 in [0, 1)).
std::vector<double> radial_factors(const SeriesSolution& sol, double w);
std::vector<double> radial_factor_derivatives(const SeriesSolution& sol,
                                              double w);

// Least-squares-free boundary fit: DFT the samples, divide mode k by the
// boundary value F(-a/2,|k|-a/2;|k|+1;1) of its radial factor.  Requires
// N >= 4K+1 samples so modes up to K are alias-free with margin.
SeriesSolution from_boundary(const BoundaryData& data, double alpha, int order);

std::complex<double> evaluate(const SeriesSolution& sol, const DiskPoint& z);

// Term-wise Wirtinger derivatives (the k = 0 term contributes
// c_0 F'(w) conj(z) to f_z and c_0 F'(w) z to f_zbar).
WirtingerPair wirtinger_derivatives(const SeriesSolution& sol,
                                    const DiskPoint& z);

// Direct kernel integral (1/2pi) \int K_alpha(z e^{-i tau}) f*(e^{i tau}) dtau
// with f* the trigonometric interpolant of the samples; uniform trapezoid
// with quad_n nodes.  Requires |z| <= 0.99 (the integrand peaks too sharply
// beyond that for fixed-n quadrature).
std::complex<double> poisson_integral(double alpha, const BoundaryData& data,
                                      const DiskPoint& z, int quad_n = 256);

// Finite-difference residual of the disk operator
//   T f = -(a^2/4)(1-|z|^2)^{-a-1} f
//         + (a/2)(1-|z|^2)^{-a-1} (z f_z + conj(z) f_zbar)
//         + (1/4)(1-|z|^2)^{-a} Laplacian(f)
// using a 5-point Laplacian and centered first differences with step h.
// Requires |z| + 2h < 1 and h in [1e-5, 1e-2].  True solutions give
// residuals of size O(h^2).
std::complex<double> pde_residual(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    double alpha, std::complex<double> z, double h);
std::complex<double> pde_residual(const SeriesSolution& sol,
                                  std::complex<double> z, double h);

// Grid maximum of |f| over radial x angular polar nodes with radii up to
// 1 - 1e-4; a lower estimate of the true sup.  Counts must be >= 16.
double sup_estimate(const SeriesSolution& sol, int radial = 64,
                    int angular = 256);
double sup_estimate(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    int radial = 64, int angular = 256);

// Integral p-mean on the circle |z| = r:
//   M_p(r) = ((1/2pi) \int |f(r e^{i t})|^p dt)^(1/p),  p in [1, inf].
// p = inf takes the angular grid max.  angular = 0 picks max(512, 4K+8)
// nodes, which integrates the band-limited integrand of p = 2 exactly.
double hardy_mean(const SeriesSolution& sol, double p, double r,
                  int angular = 0);
// p-mean of raw boundary samples (the r -> 1 limit of the above).
double hardy_mean(const BoundaryData& data, double p);

// Hardy norm estimate sup_r M_p(r, f), scanned over r = 1 - 2^-j, j = 1..12.
// A lower estimate: the scan stops short of the boundary.
double hardy_norm(const SeriesSolution& sol, double p);

}  // namespace alpharm

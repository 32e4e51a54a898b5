#pragma once

#include <array>
#include <complex>
#include <string>

#include "alpharm/kernel.hpp"
#include "alpharm/solution.hpp"

namespace alpharm {

// One evaluated inequality, stored as the pair of sides.  slack = rhs - lhs;
// the check passes when slack >= -tolerance (absolute).  The default 1e-9 is
// for analytically exact comparisons; verification sweeps pass a looser
// tolerance scaled by the sup bound of the solution under test.
struct BoundReport {
  BoundReport(std::string label_, double lhs_, double rhs_,
              double tolerance = 1e-9);
  std::string label;
  double lhs;
  double rhs;
  double slack;
  bool satisfied;
};

// Right side of the center-deviation estimate
//   |f(z) - (1-|z|)^(alpha+1)/(1+|z|) f(0)|
//     <= m [ M_alpha(|z|) - (1-|z|)^(alpha+1)/(1+|z|) c_alpha ]
// for solutions with sup |f| <= m.  Nonnegative on the disk (checked
// numerically in the test suite, not asserted here).
double center_deviation_bound(double alpha, double m, const DiskPoint& z);

// Right side of the derivative estimate
//   |f_z| + |f_zbar| <= m M_alpha(r) (2 + alpha + (4+3alpha) r) / (1 - r^2).
// tight=false drops the mean factor M_alpha(r) <= 1, giving the weaker form
// that needs no hypergeometric evaluation.
double gradient_bound(double alpha, double m, double r, bool tight = true);

// Lower bound on the boundary stretch |f_z| + |f_zbar| for C^2 self-maps of
// the closed disk fixing the origin and mapping boundary onto boundary:
// 2/pi when alpha = 0, alpha/2 when alpha > 0.  Rejects alpha < 0.
double heinz_boundary_bound(double alpha);

// The three coefficient estimates for index k >= 1 against the sup bound m:
//   [0] "coefficient_pair":   |c_k| F_k(1) + |c_-k| F_k(1) <= 4m/pi
//   [1] "coefficient_center": |c_0| F_0(1) <= m
//   [2] "coefficient_raw":    |c_k| + |c_-k| <=
//         4m Gamma(1+alpha/2) Gamma(k+1+alpha/2) / (k! Gamma(alpha+1) pi)
// where F_k(1) is the radial factor at the boundary.  The raw right side is
// assembled from log-gammas, so large k cannot overflow.
std::array<BoundReport, 3> coefficient_bounds(const SeriesSolution& sol,
                                              double m, int k);

// Bound on |f_z(z) - f_z(0)| + |f_zbar(z) - f_zbar(0)| at |z| = r for
// solutions with f(0) = 0 and sup |f| <= m:
//   (4m/pi) r(2-r)/(1-r)^2 + (8m/pi) r^2 / ((1-r)(1-r^2)^2).
// Strictly increasing in r, 0 at r = 0.
double increment_bound(double m, double r);

// Pointwise growth bound from the Hardy p-norm:
//   |f(z)| <= c_alpha^(1/p) ||f||_p (1+|z|)^((alpha+1)/p) / (1-|z|)^(1/p).
double growth_bound(double alpha, double p, double hardy_norm,
                    const DiskPoint& z);

// Classical harmonic (alpha = 0) reference values and extremal maps.
//
// heinz_arctan_bound: (4/pi) arctan r, the sharp modulus bound for harmonic
// self-maps fixing the origin; accepts r in [0, 1] so the boundary value 1
// is reachable.
// colonna_bound: (4/pi) / (1 - r^2), the sharp stretch bound for harmonic
// self-maps, r in [0, 1).
double heinz_arctan_bound(double r);
double colonna_bound(double r);

// Extremal family for colonna_bound: (2 gamma / pi) arg((1+psi(z))/(1-psi(z)))
// with psi the disk automorphism psi(z) = (z - a)/(1 - conj(a) z) and
// |gamma| = 1.  The Moebius image (1+psi)/(1-psi) has positive real part on
// the disk, so the arg stays inside (-pi/2, pi/2) and |f| < 1.
std::complex<double> colonna_extremal(const DiskPoint& a,
                                      std::complex<double> gamma,
                                      const DiskPoint& z);

// Extremal family for the k-th coefficient pair at alpha = 0:
//   f_k(z) = (2 eps m / pi) Im log((1 + theta z^k)/(1 - theta z^k)),
// |eps| = |theta| = 1.  coeff_extremal evaluates it pointwise;
// coeff_extremal_series expands it as a SeriesSolution truncated at `order`
// (nonzero coefficients sit at indices +-km for odd m: c_{km} =
// -2i eps m theta^m / (pi m), c_{-km} its mirror), which saturates the
// coefficient_pair estimate exactly.
std::complex<double> coeff_extremal(int k, double m, std::complex<double> eps,
                                    std::complex<double> theta,
                                    const DiskPoint& z);
SeriesSolution coeff_extremal_series(int k, double m, std::complex<double> eps,
                                     std::complex<double> theta, int order);

}  // namespace alpharm

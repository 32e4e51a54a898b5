#include "alpharm/bounds.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "alpharm/special.hpp"

namespace alpharm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitModulusTol = 1e-9;

void check_sup_bound(double m) {
  if (!(m > 0.0)) throw std::domain_error("bounds: sup bound must be > 0");
}

void check_unit_modulus(std::complex<double> u, const char* what) {
  if (std::fabs(std::abs(u) - 1.0) > kUnitModulusTol)
    throw std::domain_error(std::string("bounds: ") + what +
                            " must have modulus 1");
}

}  // namespace

BoundReport::BoundReport(std::string label_, double lhs_, double rhs_,
                         double tolerance)
    : label(std::move(label_)),
      lhs(lhs_),
      rhs(rhs_),
      slack(rhs_ - lhs_),
      satisfied(rhs_ - lhs_ >= -tolerance) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs))
    throw std::invalid_argument("BoundReport: sides must be finite");
  if (!(tolerance >= 0.0))
    throw std::invalid_argument("BoundReport: tolerance must be >= 0");
}

double center_deviation_bound(double alpha, double m, const DiskPoint& z) {
  check_sup_bound(m);
  const double r = std::abs(z.value);
  const double pinch = std::pow(1.0 - r, alpha + 1.0) / (1.0 + r);
  return m * (kernel_mean_closed(alpha, r) - pinch * c_alpha(alpha));
}

double gradient_bound(double alpha, double m, double r, bool tight) {
  check_sup_bound(m);
  if (!(alpha > -1.0))
    throw std::domain_error("gradient_bound: requires alpha > -1");
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("gradient_bound: r must lie in [0, 1)");
  const double mean = tight ? kernel_mean_closed(alpha, r) : 1.0;
  return m * mean * (2.0 + alpha + (4.0 + 3.0 * alpha) * r) /
         ((1.0 - r) * (1.0 + r));
}

double heinz_boundary_bound(double alpha) {
  if (!(alpha >= 0.0))
    throw std::domain_error("heinz_boundary_bound: requires alpha >= 0");
  if (alpha == 0.0) return 2.0 / kPi;
  return 0.5 * alpha;
}

std::array<BoundReport, 3> coefficient_bounds(const SeriesSolution& sol,
                                              double m, int k) {
  check_sup_bound(m);
  if (k < 1)
    throw std::domain_error("coefficient_bounds: index k must be >= 1");
  const double alpha = sol.alpha();
  const double fk1 = hyp2f1_profile(alpha, k, 1.0);
  const double ck = std::abs(sol.coeff(k));
  const double cmk = std::abs(sol.coeff(-k));

  const double pair_lhs = (ck + cmk) * fk1;
  const double pair_rhs = 4.0 * m / kPi;

  const double center_lhs =
      std::abs(sol.coeff(0)) * hyp2f1_profile(alpha, 0, 1.0);

  // Gamma ratio 4 G(1+a/2) G(k+1+a/2) / (k! G(a+1) pi) in log space; every
  // argument is positive for alpha > -1, k >= 1.
  const double log_ratio =
      log_gamma(1.0 + 0.5 * alpha) + log_gamma(k + 1.0 + 0.5 * alpha) -
      log_gamma(k + 1.0) - log_gamma(alpha + 1.0);
  const double raw_rhs = 4.0 * m / kPi * std::exp(log_ratio);

  return {BoundReport("coefficient_pair", pair_lhs, pair_rhs),
          BoundReport("coefficient_center", center_lhs, m),
          BoundReport("coefficient_raw", ck + cmk, raw_rhs)};
}

double increment_bound(double m, double r) {
  check_sup_bound(m);
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("increment_bound: r must lie in [0, 1)");
  const double omr = 1.0 - r;
  const double omr2 = (1.0 - r) * (1.0 + r);
  return 4.0 * m / kPi * r * (2.0 - r) / (omr * omr) +
         8.0 * m / kPi * r * r / (omr * omr2 * omr2);
}

double growth_bound(double alpha, double p, double hardy_norm,
                    const DiskPoint& z) {
  if (!(alpha > -1.0))
    throw std::domain_error("growth_bound: requires alpha > -1");
  if (!(p >= 1.0)) throw std::domain_error("growth_bound: requires p >= 1");
  if (!(hardy_norm >= 0.0))
    throw std::domain_error("growth_bound: norm must be >= 0");
  const double r = std::abs(z.value);
  return std::pow(c_alpha(alpha), 1.0 / p) * hardy_norm *
         std::pow(1.0 + r, (alpha + 1.0) / p) / std::pow(1.0 - r, 1.0 / p);
}

double heinz_arctan_bound(double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("heinz_arctan_bound: r must lie in [0, 1]");
  return 4.0 / kPi * std::atan(r);
}

double colonna_bound(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("colonna_bound: r must lie in [0, 1)");
  return 4.0 / kPi / ((1.0 - r) * (1.0 + r));
}

std::complex<double> colonna_extremal(const DiskPoint& a,
                                      std::complex<double> gamma,
                                      const DiskPoint& z) {
  check_unit_modulus(gamma, "gamma");
  const std::complex<double> psi =
      (z.value - a.value) / (1.0 - std::conj(a.value) * z.value);
  const std::complex<double> halfplane = (1.0 + psi) / (1.0 - psi);
  return 2.0 * gamma / kPi * std::arg(halfplane);
}

std::complex<double> coeff_extremal(int k, double m, std::complex<double> eps,
                                    std::complex<double> theta,
                                    const DiskPoint& z) {
  check_sup_bound(m);
  if (k < 1) throw std::domain_error("coeff_extremal: k must be >= 1");
  check_unit_modulus(eps, "eps");
  check_unit_modulus(theta, "theta");
  const std::complex<double> u = theta * std::pow(z.value, k);
  const std::complex<double> ratio = (1.0 + u) / (1.0 - u);
  return 2.0 * eps * m / kPi * std::imag(std::log(ratio));
}

SeriesSolution coeff_extremal_series(int k, double m, std::complex<double> eps,
                                     std::complex<double> theta, int order) {
  check_sup_bound(m);
  if (k < 1)
    throw std::domain_error("coeff_extremal_series: k must be >= 1");
  if (order < k)
    throw std::domain_error("coeff_extremal_series: order must be >= k");
  check_unit_modulus(eps, "eps");
  check_unit_modulus(theta, "theta");
  // The map is eps times a real-valued function whose analytic/anti-analytic
  // coefficients are conjugate mirrors, so only the core coefficient
  // a = -2i m theta^mm / (pi mm) is computed and eps multiplies both sides.
  const std::complex<double> i_unit{0.0, 1.0};
  std::map<int, std::complex<double>> coeffs;
  std::complex<double> theta_m = theta;
  for (int mm = 1; k * mm <= order; mm += 2) {
    const std::complex<double> a = -2.0 * i_unit * m * theta_m / (kPi * mm);
    coeffs[k * mm] = eps * a;
    coeffs[-k * mm] = eps * std::conj(a);
    theta_m *= theta * theta;
  }
  return SeriesSolution(0.0, order, coeffs);
}

}  // namespace alpharm

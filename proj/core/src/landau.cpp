#include "alpharm/landau.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "alpharm/special.hpp"

namespace alpharm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRhoUpper = 1.0 - 1e-15;
constexpr int kBisectionCap = 200;
constexpr double kGammaLo = 1e-6;
constexpr double kGammaHi = 1.0 - 1e-6;
constexpr int kScanCells = 10000;
constexpr double kGoldenWidth = 1e-12;
constexpr double kInvPhi = 0.61803398874989485;  // (sqrt(5) - 1) / 2

// Extended precision matters here: the golden-section comparisons below can
// only locate the minimizer to about sqrt(eps) of the value type, and double
// would leave gamma0 ~1e-8 off its true position.
long double mu_value_ext(double alpha, double p, long double g) {
  // p = infinity degenerates cleanly: both exponents become 0.
  return std::pow(1.0L + g, static_cast<long double>((alpha + 1.0) / p)) /
         (g * std::pow(1.0L - g, static_cast<long double>(1.0 / p)));
}

double mu_value(double alpha, double p, double g) {
  return static_cast<double>(mu_value_ext(alpha, p, g));
}

void check_radius_path(double alpha, const char* what) {
  if (!(alpha > -1.0 && alpha <= 0.0))
    throw std::domain_error(std::string(what) +
                            ": requires alpha in (-1, 0]");
}

}  // namespace

LandauInputs::LandauInputs(double alpha_, double scale_, double bound_)
    : alpha(alpha_), scale(scale_), bound(bound_) {
  if (!(alpha > -2.0))
    throw std::domain_error("LandauInputs: requires alpha > -2");
  if (!(scale > 0.0))
    throw std::domain_error("LandauInputs: scale must be > 0");
  if (!(bound > 0.0))
    throw std::domain_error("LandauInputs: bound must be > 0");
}

double phi_profile(double x, const LandauInputs& in) {
  if (!(x >= 0.0 && x < 1.0))
    throw std::domain_error("phi_profile: x must lie in [0, 1)");
  const double omx = 1.0 - x;
  const double omx2 = omx * (1.0 + x);
  const double bracket =
      (2.0 - x) / (omx * omx) + 2.0 * x / (omx * omx2 * omx2);
  return in.scale / (in.bound * (2.0 + in.alpha)) -
         4.0 * in.bound * x / kPi * bracket;
}

double solve_rho(const LandauInputs& in, double phi_tol, double width_tol) {
  if (!(phi_tol > 0.0) || !(width_tol > 0.0))
    throw std::domain_error("solve_rho: tolerances must be > 0");
  double lo = 0.0;          // phi(0) = scale/(bound(2+alpha)) > 0
  double hi = kRhoUpper;    // phi < 0 here for every admissible input
  if (!(phi_profile(hi, in) < 0.0))
    throw std::runtime_error("solve_rho: profile not negative at 1-");
  for (int it = 0; it < kBisectionCap; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double pm = phi_profile(mid, in);
    if (std::fabs(pm) <= phi_tol) return mid;
    (pm > 0.0 ? lo : hi) = mid;
    if (hi - lo <= width_tol) return 0.5 * (lo + hi);
  }
  throw std::runtime_error("solve_rho: bisection cap reached");
}

UnivalentRange univalent_range(const LandauInputs& in, double rho0) {
  check_radius_path(in.alpha, "univalent_range");
  if (!(rho0 > 0.0 && rho0 < 1.0))
    throw std::domain_error("univalent_range: rho0 must lie in (0, 1)");
  const double omr = 1.0 - rho0;
  const double bracket =
      in.scale / (in.bound * (2.0 + in.alpha)) -
      in.bound * rho0 * (2.0 - rho0) / (kPi * omr * omr);
  UnivalentRange out{rho0, 2.0 * rho0 / 3.0 * bracket, false};
  if (out.r0_lower < 0.0) {
    out.r0_lower = 0.0;
    out.clamped = true;
  }
  return out;
}

MuMinimum minimize_mu(double alpha, double p) {
  check_radius_path(alpha, "minimize_mu");
  if (!(p >= 1.0)) throw std::domain_error("minimize_mu: requires p >= 1");

  // Scan pass: locate the grid argmin and reject profiles with more than one
  // basin (a descending-to-ascending transition after merging flat runs).
  std::vector<double> val(kScanCells + 1);
  const double step = (kGammaHi - kGammaLo) / kScanCells;
  int argmin = 0;
  for (int i = 0; i <= kScanCells; ++i) {
    val[static_cast<size_t>(i)] = mu_value(alpha, p, kGammaLo + step * i);
    if (val[static_cast<size_t>(i)] < val[static_cast<size_t>(argmin)])
      argmin = i;
  }
  int transitions = 0;
  int last_sign = 0;
  for (int i = 1; i <= kScanCells; ++i) {
    const double d = val[static_cast<size_t>(i)] - val[static_cast<size_t>(i - 1)];
    const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last_sign < 0 && s > 0) ++transitions;
    if (last_sign > 0 && s < 0 && transitions > 0)
      throw std::runtime_error("minimize_mu: profile is not unimodal");
    last_sign = s;
  }
  if (transitions > 1)
    throw std::runtime_error("minimize_mu: profile is not unimodal");

  // Golden-section refinement inside the bracketing cell pair.
  double a = kGammaLo + step * std::max(argmin - 1, 0);
  double b = kGammaLo + step * std::min(argmin + 1, kScanCells);
  double c1 = b - kInvPhi * (b - a);
  double c2 = a + kInvPhi * (b - a);
  long double f1 = mu_value_ext(alpha, p, c1);
  long double f2 = mu_value_ext(alpha, p, c2);
  while (b - a > kGoldenWidth) {
    if (f1 <= f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - kInvPhi * (b - a);
      f1 = mu_value_ext(alpha, p, c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + kInvPhi * (b - a);
      f2 = mu_value_ext(alpha, p, c2);
    }
  }
  const double gamma0 = 0.5 * (a + b);
  return {gamma0, mu_value(alpha, p, gamma0)};
}

LandauResult landau_hardy(double alpha, double p, double hardy_norm,
                          double lambda) {
  check_radius_path(alpha, "landau_hardy");
  if (!(p >= 1.0)) throw std::domain_error("landau_hardy: requires p >= 1");
  if (!(hardy_norm > 0.0))
    throw std::domain_error("landau_hardy: norm must be > 0");
  if (!(lambda > 0.0))
    throw std::domain_error("landau_hardy: lambda must be > 0");

  const MuMinimum mu = minimize_mu(alpha, p);
  const double mstar =
      std::pow(c_alpha(alpha), 1.0 / p) * hardy_norm * mu.mu_min;
  const LandauInputs in(alpha, lambda, mstar);
  const double rho0 = solve_rho(in);
  const UnivalentRange range = univalent_range(in, rho0);
  return {mu.gamma0,        mstar, rho0, range.r0_lower,
          mu.gamma0 * rho0, mu.gamma0 * range.r0_lower};
}

}  // namespace alpharm

#include "alpharm/solution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alpharm/special.hpp"

namespace alpharm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootTestCeiling = 1.5;
constexpr double kSupRadiusCap = 1.0 - 1e-4;
constexpr int kHardyRadiusLevels = 12;
constexpr int kMaxOrder = 100000;  // keeps the packed array a few megabytes

HypParams factor_params(double alpha, int k, int shift = 0) {
  return HypParams(-0.5 * alpha + shift, k - 0.5 * alpha + shift,
                   k + 1.0 + shift);
}

// Boundary value F(-a/2, k-a/2; k+1; 1) of the radial factor; positive for
// alpha > -1.
double factor_at_one(double alpha, int k) {
  return hyp2f1_profile(alpha, k, 1.0);
}

std::complex<double> unit_phase(long numerator, long denominator) {
  // e^{-2 pi i numerator/denominator} with the ratio reduced first so large
  // indices do not feed huge arguments to sin/cos.
  const long m = ((numerator % denominator) + denominator) % denominator;
  const double ang = -2.0 * kPi * static_cast<double>(m) /
                     static_cast<double>(denominator);
  return std::polar(1.0, ang);
}

}  // namespace

BoundaryData::BoundaryData(std::vector<std::complex<double>> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 16)
    throw std::invalid_argument("BoundaryData: need at least 16 samples");
  for (const auto& s : samples_)
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      throw std::invalid_argument("BoundaryData: samples must be finite");
}

SeriesSolution::SeriesSolution(double alpha, int order,
                               const std::map<int, std::complex<double>>& coeffs)
    : alpha_(alpha), order_(order) {
  if (!(alpha > -1.0))
    throw std::invalid_argument("SeriesSolution: requires alpha > -1");
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument(
        "SeriesSolution: order must lie in [1, 100000]");
  c_.assign(2 * static_cast<size_t>(order) + 1, {0.0, 0.0});
  for (const auto& [k, v] : coeffs) {
    if (k < -order || k > order)
      throw std::invalid_argument("SeriesSolution: coefficient index exceeds order");
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("SeriesSolution: coefficients must be finite");
    c_[static_cast<size_t>(k + order)] = v;
  }
  const double top = std::fmax(std::abs(c_.front()), std::abs(c_.back()));
  if (std::pow(top, 1.0 / order) > kRootTestCeiling)
    throw std::invalid_argument(
        "SeriesSolution: top-mode growth test failed (|c_{+-K}|^(1/K) > 1.5)");
}

std::complex<double> SeriesSolution::coeff(int k) const {
  if (k < -order_ || k > order_) return {0.0, 0.0};
  return c_[static_cast<size_t>(k + order_)];
}

std::vector<double> radial_factors(const SeriesSolution& sol, double w) {
  std::vector<double> out(static_cast<size_t>(sol.order()) + 1);
  for (int k = 0; k <= sol.order(); ++k)
    out[static_cast<size_t>(k)] = hyp2f1_profile(sol.alpha(), k, w);
  return out;
}

std::vector<double> radial_factor_derivatives(const SeriesSolution& sol,
                                              double w) {
  std::vector<double> out(static_cast<size_t>(sol.order()) + 1);
  for (int k = 0; k <= sol.order(); ++k)
    out[static_cast<size_t>(k)] = hyp2f1_dx(factor_params(sol.alpha(), k), w);
  return out;
}

SeriesSolution from_boundary(const BoundaryData& data, double alpha,
                             int order) {
  if (!(alpha > -1.0))
    throw std::domain_error("from_boundary: requires alpha > -1");
  if (order < 1) throw std::domain_error("from_boundary: order must be >= 1");
  const int n = data.size();
  if (n < 4 * order + 1)
    throw std::domain_error(
        "from_boundary: need at least 4*order+1 samples to avoid aliasing");
  std::map<int, std::complex<double>> coeffs;
  for (int k = -order; k <= order; ++k) {
    std::complex<double> hat{0.0, 0.0};
    for (int j = 0; j < n; ++j)
      hat += data.samples()[static_cast<size_t>(j)] *
             unit_phase(static_cast<long>(j) * k, n);
    hat /= static_cast<double>(n);
    coeffs[k] = hat / factor_at_one(alpha, std::abs(k));
  }
  return SeriesSolution(alpha, order, coeffs);
}

std::complex<double> evaluate(const SeriesSolution& sol, const DiskPoint& z) {
  const double w = std::norm(z.value);
  const std::vector<double> f = radial_factors(sol, w);
  std::complex<double> acc = sol.coeff(0) * f[0];
  std::complex<double> zk{1.0, 0.0};
  for (int k = 1; k <= sol.order(); ++k) {
    zk *= z.value;
    acc += f[static_cast<size_t>(k)] *
           (sol.coeff(k) * zk + sol.coeff(-k) * std::conj(zk));
  }
  return acc;
}

WirtingerPair wirtinger_derivatives(const SeriesSolution& sol,
                                    const DiskPoint& z) {
  const double w = std::norm(z.value);
  const std::vector<double> f = radial_factors(sol, w);
  const std::vector<double> fd = radial_factor_derivatives(sol, w);
  const std::complex<double> zb = std::conj(z.value);
  std::complex<double> fz = sol.coeff(0) * fd[0] * zb;
  std::complex<double> fzbar = sol.coeff(0) * fd[0] * z.value;
  std::complex<double> zk{1.0, 0.0};   // z^(k-1) in the loop below
  std::complex<double> zbk{1.0, 0.0};  // conj(z)^(k-1)
  for (int k = 1; k <= sol.order(); ++k) {
    const auto ck = sol.coeff(k);
    const auto cmk = sol.coeff(-k);
    const double fk = f[static_cast<size_t>(k)];
    const double fdk = fd[static_cast<size_t>(k)];
    // d/dz [F z^k] = k F z^(k-1) + F' z^k conj(z);  d/dz [F conj(z)^k] = F' conj(z)^(k+1)
    fz += ck * (static_cast<double>(k) * fk * zk + fdk * zk * z.value * zb) +
          cmk * fdk * zbk * zb * zb;
    // d/dzbar mirrors with z and conj(z) exchanged
    fzbar += cmk * (static_cast<double>(k) * fk * zbk +
                    fdk * zbk * zb * z.value) +
             ck * fdk * zk * z.value * z.value;
    zk *= z.value;
    zbk *= zb;
  }
  return WirtingerPair{fz, fzbar};
}

std::complex<double> poisson_integral(double alpha, const BoundaryData& data,
                                      const DiskPoint& z, int quad_n) {
  if (!(alpha > -1.0))
    throw std::domain_error("poisson_integral: requires alpha > -1");
  if (quad_n < 16)
    throw std::domain_error("poisson_integral: quad_n must be >= 16");
  if (std::abs(z.value) > 0.99)
    throw std::domain_error("poisson_integral: requires |z| <= 0.99");
  const int n = data.size();
  // Trigonometric interpolant coefficients; an even sample count splits the
  // Nyquist mode evenly between +n/2 and -n/2.
  const int mmax = n / 2;
  std::vector<std::complex<double>> hat(static_cast<size_t>(2 * mmax + 1));
  for (int m = -mmax; m <= mmax; ++m) {
    std::complex<double> h{0.0, 0.0};
    for (int j = 0; j < n; ++j)
      h += data.samples()[static_cast<size_t>(j)] *
           unit_phase(static_cast<long>(j) * m, n);
    h /= static_cast<double>(n);
    if (n % 2 == 0 && std::abs(m) == mmax) h *= 0.5;
    hat[static_cast<size_t>(m + mmax)] = h;
  }
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < quad_n; ++j) {
    const double tau = 2.0 * kPi * j / quad_n;
    std::complex<double> boundary{0.0, 0.0};
    const std::complex<double> e = std::polar(1.0, tau);
    std::complex<double> em = std::polar(1.0, -mmax * tau);
    for (int m = -mmax; m <= mmax; ++m) {
      boundary += hat[static_cast<size_t>(m + mmax)] * em;
      em *= e;
    }
    acc += kernel_value(alpha, z, tau) * boundary;
  }
  return acc / static_cast<double>(quad_n);
}

std::complex<double> pde_residual(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    double alpha, std::complex<double> z, double h) {
  if (!(alpha > -1.0))
    throw std::domain_error("pde_residual: requires alpha > -1");
  if (!(h >= 1e-5 && h <= 1e-2))
    throw std::domain_error("pde_residual: h must lie in [1e-5, 1e-2]");
  if (std::abs(z) + 2.0 * h >= 1.0)
    throw std::domain_error("pde_residual: stencil leaves the disk");
  const std::complex<double> ih{0.0, h};
  const auto fc = f(z);
  const auto fxp = f(z + h), fxm = f(z - h);
  const auto fyp = f(z + ih), fym = f(z - ih);
  const auto lap = (fxp + fxm + fyp + fym - 4.0 * fc) / (h * h);
  const auto fx = (fxp - fxm) / (2.0 * h);
  const auto fy = (fyp - fym) / (2.0 * h);
  const std::complex<double> half{0.5, 0.0};
  const std::complex<double> mi{0.0, -1.0};
  const auto fz = half * (fx + mi * fy);
  const auto fzb = half * (fx - mi * fy);
  const double one_minus = 1.0 - std::norm(z);
  const double wm1 = std::pow(one_minus, -alpha - 1.0);
  return -0.25 * alpha * alpha * wm1 * fc +
         0.5 * alpha * wm1 * (z * fz + std::conj(z) * fzb) +
         0.25 * std::pow(one_minus, -alpha) * lap;
}

std::complex<double> pde_residual(const SeriesSolution& sol,
                                  std::complex<double> z, double h) {
  return pde_residual(
      [&sol](std::complex<double> p) { return evaluate(sol, DiskPoint(p)); },
      sol.alpha(), z, h);
}

double sup_estimate(const SeriesSolution& sol, int radial, int angular) {
  if (radial < 16 || angular < 16)
    throw std::domain_error("sup_estimate: grid counts must be >= 16");
  const int order = sol.order();
  double best = 0.0;
  for (int i = 0; i < radial; ++i) {
    const double r = kSupRadiusCap * i / (radial - 1);
    const std::vector<double> f = radial_factors(sol, r * r);
    // Ring evaluation: f(r e^{it}) = sum A_k e^{ikt} + sum B_k e^{-ikt}.
    std::vector<std::complex<double>> a(static_cast<size_t>(order) + 1);
    std::vector<std::complex<double>> b(static_cast<size_t>(order) + 1);
    double rk = 1.0;
    for (int k = 0; k <= order; ++k) {
      a[static_cast<size_t>(k)] = sol.coeff(k) * f[static_cast<size_t>(k)] * rk;
      b[static_cast<size_t>(k)] = sol.coeff(-k) * f[static_cast<size_t>(k)] * rk;
      rk *= r;
    }
    for (int j = 0; j < angular; ++j) {
      const double t = 2.0 * kPi * j / angular;
      const std::complex<double> e = std::polar(1.0, t);
      std::complex<double> ek{1.0, 0.0};
      std::complex<double> val = a[0];
      for (int k = 1; k <= order; ++k) {
        ek *= e;
        val += a[static_cast<size_t>(k)] * ek +
               b[static_cast<size_t>(k)] * std::conj(ek);
      }
      best = std::fmax(best, std::abs(val));
    }
  }
  return best;
}

double sup_estimate(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    int radial, int angular) {
  if (radial < 16 || angular < 16)
    throw std::domain_error("sup_estimate: grid counts must be >= 16");
  double best = 0.0;
  for (int i = 0; i < radial; ++i) {
    const double r = kSupRadiusCap * i / (radial - 1);
    for (int j = 0; j < angular; ++j)
      best = std::fmax(best, std::abs(f(std::polar(r, 2.0 * kPi * j / angular))));
  }
  return best;
}

double hardy_mean(const SeriesSolution& sol, double p, double r, int angular) {
  if (!(p >= 1.0)) throw std::domain_error("hardy_mean: requires p >= 1");
  if (!(r >= 0.0) || r >= 1.0)
    throw std::domain_error("hardy_mean: radius must lie in [0, 1)");
  const int order = sol.order();
  if (angular <= 0) angular = std::max(512, 4 * order + 8);
  const std::vector<double> f = radial_factors(sol, r * r);
  std::vector<std::complex<double>> a(static_cast<size_t>(order) + 1);
  std::vector<std::complex<double>> b(static_cast<size_t>(order) + 1);
  double rk = 1.0;
  for (int k = 0; k <= order; ++k) {
    a[static_cast<size_t>(k)] = sol.coeff(k) * f[static_cast<size_t>(k)] * rk;
    b[static_cast<size_t>(k)] = sol.coeff(-k) * f[static_cast<size_t>(k)] * rk;
    rk *= r;
  }
  const bool sup_norm = std::isinf(p);
  double acc = 0.0;
  for (int j = 0; j < angular; ++j) {
    const double t = 2.0 * kPi * j / angular;
    const std::complex<double> e = std::polar(1.0, t);
    std::complex<double> ek{1.0, 0.0};
    std::complex<double> val = a[0];
    for (int k = 1; k <= order; ++k) {
      ek *= e;
      val += a[static_cast<size_t>(k)] * ek +
             b[static_cast<size_t>(k)] * std::conj(ek);
    }
    const double m = std::abs(val);
    acc = sup_norm ? std::fmax(acc, m) : acc + std::pow(m, p);
  }
  return sup_norm ? acc : std::pow(acc / angular, 1.0 / p);
}

double hardy_mean(const BoundaryData& data, double p) {
  if (!(p >= 1.0)) throw std::domain_error("hardy_mean: requires p >= 1");
  const bool sup_norm = std::isinf(p);
  double acc = 0.0;
  for (const auto& s : data.samples()) {
    const double m = std::abs(s);
    acc = sup_norm ? std::fmax(acc, m) : acc + std::pow(m, p);
  }
  return sup_norm ? acc : std::pow(acc / data.size(), 1.0 / p);
}

double hardy_norm(const SeriesSolution& sol, double p) {
  double best = 0.0;
  for (int j = 1; j <= kHardyRadiusLevels; ++j)
    best = std::fmax(best, hardy_mean(sol, p, 1.0 - std::ldexp(1.0, -j)));
  return best;
}

}  // namespace alpharm

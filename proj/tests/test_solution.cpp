#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "alpharm/kernel.hpp"
#include "alpharm/solution.hpp"
#include "alpharm/special.hpp"
#include "support/frozen.hpp"
#include "support/oracles.hpp"

using namespace alpharm;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
using Coeffs = std::map<int, std::complex<double>>;

BoundaryData circle_samples(int n, const std::function<std::complex<double>(double)>& f) {
  std::vector<std::complex<double>> samples(n);
  for (int j = 0; j < n; ++j) samples[j] = f(2.0 * kPi * j / n);
  return BoundaryData(samples);
}

SeriesSolution random_solution(oracles::Rng& rng, double alpha, int order) {
  Coeffs coeffs;
  for (int k = -order; k <= order; ++k) {
    coeffs[k] = rng.disk(1.0 / (1.0 + std::abs(k)));
  }
  return SeriesSolution(alpha, order, coeffs);
}

}  // namespace

TEST_CASE("BoundaryData validation") {
  CHECK_THROWS_AS(BoundaryData(std::vector<std::complex<double>>(8, 1.0)),
                  std::invalid_argument);
  std::vector<std::complex<double>> bad(16, 1.0);
  bad[3] = std::complex<double>(std::nan(""), 0.0);
  CHECK_THROWS_AS(BoundaryData{bad}, std::invalid_argument);
  CHECK_NOTHROW(BoundaryData(std::vector<std::complex<double>>(16, 1.0)));
}

TEST_CASE("SeriesSolution validation") {
  Coeffs ok{{0, 1.0}};
  CHECK_THROWS_AS(SeriesSolution(-1.0, 2, ok), std::invalid_argument);
  CHECK_THROWS_AS(SeriesSolution(0.0, 0, ok), std::invalid_argument);
  CHECK_THROWS_AS(SeriesSolution(0.0, 200000, ok), std::invalid_argument);
  Coeffs outside{{3, 1.0}};
  CHECK_THROWS_AS(SeriesSolution(0.0, 2, outside), std::invalid_argument);
  // top-mode growth guard: |c_4|^(1/4) = 6
  Coeffs wild{{4, 1296.0}};
  CHECK_THROWS_AS(SeriesSolution(0.0, 4, wild), std::invalid_argument);
  const SeriesSolution sol(0.5, 3, Coeffs{{1, 2.0}, {-2, std::complex<double>(0.0, 1.0)}});
  CHECK(sol.coeff(1) == std::complex<double>(2.0, 0.0));
  CHECK(sol.coeff(-2) == std::complex<double>(0.0, 1.0));
  CHECK(sol.coeff(3) == std::complex<double>(0.0, 0.0));
  CHECK(sol.coeff(7) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("from_boundary picks out single modes") {
  const auto data = circle_samples(32, [](double t) { return std::polar(1.0, t); });
  for (double alpha : {0.0, 2.0}) {
    const SeriesSolution sol = from_boundary(data, alpha, 4);
    CHECK(std::abs(sol.coeff(1) - 1.0) < 1e-12);
    for (int k = -4; k <= 4; ++k) {
      if (k != 1) CHECK(std::abs(sol.coeff(k)) < 1e-12);
    }
  }
}

TEST_CASE("from_boundary constant samples") {
  const auto data = circle_samples(16, [](double) { return std::complex<double>(1.0, 0.0); });
  const SeriesSolution sol = from_boundary(data, -0.5, 3);
  CHECK(std::abs(sol.coeff(0) - 1.0 / frozen::kHypQQ1At1) < 1e-12);
  for (int k = 1; k <= 3; ++k) {
    CHECK(std::abs(sol.coeff(k)) < 1e-13);
    CHECK(std::abs(sol.coeff(-k)) < 1e-13);
  }
}

TEST_CASE("from_boundary needs 4K+1 samples") {
  const auto data = circle_samples(16, [](double t) { return std::polar(1.0, t); });
  CHECK_THROWS_AS(from_boundary(data, 0.0, 4), std::domain_error);
  CHECK_NOTHROW(from_boundary(data, 0.0, 3));
}

TEST_CASE("evaluate basics") {
  const SeriesSolution sol(1.0, 2, Coeffs{{0, {0.3, -0.2}}, {2, 0.5}});
  CHECK(evaluate(sol, DiskPoint{std::complex<double>(0.0, 0.0)}) ==
        std::complex<double>(0.3, -0.2));

  // alpha=2, c_0=1: f = F(-1,-1;1;|z|^2) = 1 + |z|^2
  const SeriesSolution plus(2.0, 1, Coeffs{{0, 1.0}});
  oracles::Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const std::complex<double> z = rng.disk(0.95);
    CHECK(std::abs(evaluate(plus, DiskPoint{z}) - (1.0 + std::norm(z))) < 1e-13);
  }

  // alpha=0, c_1=1: the identity map
  const SeriesSolution ident(0.0, 1, Coeffs{{1, 1.0}});
  for (int i = 0; i < 50; ++i) {
    const std::complex<double> z = rng.disk(0.999);
    CHECK(std::abs(evaluate(ident, DiskPoint{z}) - z) < 1e-14);
  }
}

TEST_CASE("radial factors and derivatives line up with hyp2f1") {
  const SeriesSolution sol(-0.5, 5, Coeffs{{0, 1.0}});
  const double w = 0.73;
  const auto factors = radial_factors(sol, w);
  const auto slopes = radial_factor_derivatives(sol, w);
  REQUIRE(factors.size() == 6);
  REQUIRE(slopes.size() == 6);
  for (int k = 0; k <= 5; ++k) {
    const HypParams p(0.25, k + 0.25, k + 1.0);
    CHECK(factors[k] == doctest::Approx(hyp2f1(p, w)).epsilon(1e-13));
    CHECK(slopes[k] == doctest::Approx(hyp2f1_dx(p, w)).epsilon(1e-13));
  }
}

TEST_CASE("wirtinger_derivatives closed cases") {
  const SeriesSolution ident(0.0, 1, Coeffs{{1, 1.0}});
  const WirtingerPair p1 = wirtinger_derivatives(ident, DiskPoint{std::complex<double>(0.3, 0.4)});
  CHECK(std::abs(p1.fz - 1.0) < 1e-14);
  CHECK(std::abs(p1.fzbar) < 1e-14);

  // alpha=2, c_0=1: f = 1 + z zbar, so f_z = zbar and f_zbar = z
  const SeriesSolution plus(2.0, 1, Coeffs{{0, 1.0}});
  const std::complex<double> z(0.25, -0.55);
  const WirtingerPair p2 = wirtinger_derivatives(plus, DiskPoint{z});
  CHECK(std::abs(p2.fz - std::conj(z)) < 1e-13);
  CHECK(std::abs(p2.fzbar - z) < 1e-13);
}

TEST_CASE("wirtinger_derivatives match finite differences") {
  oracles::Rng rng(22);
  for (double alpha : {-0.5, 0.0, 1.0, 2.0}) {
    const SeriesSolution sol = random_solution(rng, alpha, 16);
    for (int i = 0; i < 25; ++i) {
      const std::complex<double> z = rng.disk(0.8);
      const auto f = [&sol](std::complex<double> p) { return evaluate(sol, DiskPoint{p}); };
      const auto fd = oracles::fd_wirtinger(f, z, 1e-6);
      const WirtingerPair w = wirtinger_derivatives(sol, DiskPoint{z});
      CHECK(std::abs(w.fz - fd.fz) < 1e-7);
      CHECK(std::abs(w.fzbar - fd.fzbar) < 1e-7);
    }
  }
}

TEST_CASE("matrix norms of the differential") {
  oracles::Rng rng(23);
  const SeriesSolution sol = random_solution(rng, 0.7, 8);
  for (int i = 0; i < 40; ++i) {
    const WirtingerPair w = wirtinger_derivatives(sol, DiskPoint{rng.disk(0.97)});
    CHECK(w.operator_norm() >= w.lower_norm());
    CHECK(std::fabs(std::fabs(w.jacobian()) - w.operator_norm() * w.lower_norm()) <
          1e-12 * (1.0 + w.operator_norm()));
  }
}

TEST_CASE("poisson_integral reproduces the kernel mean on constants") {
  const auto ones = circle_samples(32, [](double) { return std::complex<double>(1.0, 0.0); });
  oracles::Rng rng(24);
  for (int i = 0; i < 10; ++i) {
    const std::complex<double> z = rng.disk(0.9);
    CHECK(std::abs(poisson_integral(0.0, ones, DiskPoint{z}, 1024) - 1.0) < 1e-10);
  }
  const std::complex<double> z(0.32, -0.41);
  for (double alpha : {-0.5, 1.0, 3.0}) {
    CHECK(std::abs(poisson_integral(alpha, ones, DiskPoint{z}, 1024) -
                   kernel_mean_closed(alpha, std::abs(z))) < 1e-10);
  }
}

TEST_CASE("poisson_integral extends z at alpha 0") {
  const auto data = circle_samples(32, [](double t) { return std::polar(1.0, t); });
  CHECK(std::abs(poisson_integral(0.0, data, DiskPoint{std::complex<double>(0.3, 0.0)}, 1024) -
                 0.3) < 1e-10);
}

TEST_CASE("poisson_integral rejects points too close to the rim") {
  const auto ones = circle_samples(16, [](double) { return std::complex<double>(1.0, 0.0); });
  CHECK_THROWS_AS(poisson_integral(0.0, ones, DiskPoint{std::complex<double>(0.995, 0.0)}, 256),
                  std::domain_error);
}

TEST_CASE("series and integral representations agree") {
  oracles::Rng rng(25);
  for (double alpha : {-0.5, 0.0, 1.0, 2.0}) {
    Coeffs hat;
    for (int m = -5; m <= 5; ++m) hat[m] = rng.disk(1.0 / (1.0 + std::abs(m)));
    const auto data = circle_samples(64, [&hat](double t) {
      std::complex<double> acc = 0.0;
      for (const auto& [m, c] : hat) acc += c * std::polar(1.0, m * t);
      return acc;
    });
    const SeriesSolution sol = from_boundary(data, alpha, 5);
    for (int i = 0; i < 50; ++i) {
      const std::complex<double> z = rng.disk(0.9);
      const std::complex<double> series = evaluate(sol, DiskPoint{z});
      const std::complex<double> integral = poisson_integral(alpha, data, DiskPoint{z}, 512);
      CHECK(std::abs(series - integral) < 1e-6);
    }
  }
}

TEST_CASE("pde_residual vanishes on true solutions") {
  // identity map is 0-harmonic
  const auto ident = [](std::complex<double> z) { return z; };
  CHECK(std::abs(pde_residual(ident, 0.0, std::complex<double>(0.3, 0.5), 1e-3)) < 1e-9);

  // 1 + |z|^2 solves the alpha=2 equation; the stencil is exact on quadratics
  const auto bowl = [](std::complex<double> z) {
    return std::complex<double>(1.0 + std::norm(z), 0.0);
  };
  CHECK(std::abs(pde_residual(bowl, 2.0, std::complex<double>(0.4, 0.2), 1e-3)) < 1e-9);
}

TEST_CASE("pde_residual decays at second order on series solutions") {
  for (double alpha : {-0.5, 1.0}) {
    for (int k : {0, 2, -5}) {
      const int order = std::max(std::abs(k), 1);
      const SeriesSolution sol(alpha, order, Coeffs{{k, 1.0}});
      // far enough out that the k=0 truncation term clears the roundoff floor
      const std::complex<double> z(0.44, -0.37);
      const double r1 = std::abs(pde_residual(sol, z, 1e-3));
      const double r2 = std::abs(pde_residual(sol, z, 5e-4));
      if (r1 > 1e-9) {
        CHECK(r1 / r2 > 3.5);
        CHECK(r1 / r2 < 4.5);
      }
      CHECK(r1 < 1e-5);
    }
  }
}

TEST_CASE("pde_residual witness: z^2 is not a solution at alpha 2") {
  const auto sq = [](std::complex<double> z) { return z * z; };
  oracles::Rng rng(26);
  for (int i = 0; i < 10; ++i) {
    const std::complex<double> z = rng.disk(0.5);
    const std::complex<double> expect =
        z * z / std::pow(1.0 - std::norm(z), 3.0);
    const std::complex<double> got = pde_residual(sq, 2.0, z, 1e-3);
    CHECK(std::abs(got - expect) <= 0.01 * std::abs(expect) + 1e-12);
  }
}

TEST_CASE("pde_residual validates the step") {
  const SeriesSolution sol(0.0, 1, Coeffs{{1, 1.0}});
  CHECK_THROWS_AS(pde_residual(sol, std::complex<double>(0.2, 0.0), 1e-6), std::domain_error);
  CHECK_THROWS_AS(pde_residual(sol, std::complex<double>(0.2, 0.0), 0.1), std::domain_error);
  CHECK_THROWS_AS(pde_residual(sol, std::complex<double>(0.999, 0.0), 1e-3), std::domain_error);
}

TEST_CASE("sup_estimate") {
  const SeriesSolution constant(0.0, 1, Coeffs{{0, 5.0}});
  CHECK(sup_estimate(constant) == doctest::Approx(5.0).epsilon(1e-13));

  const SeriesSolution ident(0.0, 1, Coeffs{{1, 1.0}});
  const double s = sup_estimate(ident);
  CHECK(s >= 0.9999 - 1e-12);
  CHECK(s <= 1.0);
  CHECK_THROWS_AS(sup_estimate(ident, 8, 256), std::domain_error);
}

TEST_CASE("hardy means") {
  const SeriesSolution constant(0.0, 1, Coeffs{{0, {3.0, 4.0}}});
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    CHECK(hardy_mean(constant, p, 0.5) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(hardy_norm(constant, p) == doctest::Approx(5.0).epsilon(1e-12));
  }

  const SeriesSolution ident(0.0, 1, Coeffs{{1, 1.0}});
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    CHECK(hardy_mean(ident, p, 0.62) == doctest::Approx(0.62).epsilon(1e-12));
  }
  const double norm = hardy_norm(ident, 2.0);
  CHECK(norm > 0.9997);
  CHECK(norm <= 1.0);

  CHECK_THROWS_AS(hardy_mean(ident, 0.5, 0.5), std::domain_error);
}

TEST_CASE("hardy mean of boundary samples") {
  const auto data = circle_samples(16, [](double t) {
    return std::complex<double>(0.5, 0.0) + std::polar(1.0, t);
  });
  CHECK(hardy_mean(data, 2.0) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-12));
  CHECK(hardy_mean(data, std::numeric_limits<double>::infinity()) ==
        doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("squared 2-mean equals the mode sum") {
  // alpha=0, f = 0.5 + z: M_2(r)^2 = 0.25 + r^2
  const SeriesSolution sol(0.0, 1, Coeffs{{0, 0.5}, {1, 1.0}});
  for (double r : {0.2, 0.6, 0.9}) {
    const double m2 = hardy_mean(sol, 2.0, r);
    CHECK(m2 * m2 == doctest::Approx(0.25 + r * r).epsilon(1e-12));
  }
}

TEST_CASE("parseval identity for random solutions") {
  oracles::Rng rng(27);
  for (int trial = 0; trial < 6; ++trial) {
    const double alpha = rng.uniform(-0.9, 3.0);
    const SeriesSolution sol = random_solution(rng, alpha, 9);
    for (double r : {0.3, 0.7, 0.95}) {
      const double quad = hardy_mean(sol, 2.0, r);
      double sum = 0.0;
      for (int k = -9; k <= 9; ++k) {
        const int a = std::abs(k);
        const double factor =
            hyp2f1(HypParams(-0.5 * alpha, a - 0.5 * alpha, a + 1.0), r * r);
        const double mode = std::abs(sol.coeff(k)) * factor * std::pow(r, a);
        sum += mode * mode;
      }
      CHECK(std::fabs(quad * quad - sum) < 1e-9);
    }
  }
}

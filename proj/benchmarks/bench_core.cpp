// Microbenchmarks for the numerical hot spots: series evaluation, kernel
// means, boundary fitting, and the scalar solvers.
#include <complex>
#include <map>
#include <vector>

#include <benchmark/benchmark.h>

#include "alpharm/kernel.hpp"
#include "alpharm/landau.hpp"
#include "alpharm/solution.hpp"
#include "alpharm/special.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

alpharm::SeriesSolution dense_solution(double alpha, int order) {
  std::map<int, std::complex<double>> coeffs;
  for (int k = -order; k <= order; ++k)
    coeffs[k] = std::polar(1.0 / (1.0 + std::abs(k)), 0.37 * k);
  return alpharm::SeriesSolution(alpha, order, coeffs);
}

void BM_hyp2f1_interior(benchmark::State& state) {
  const alpharm::HypParams p(0.25, 8.25, 9.0);
  for (auto _ : state) benchmark::DoNotOptimize(alpharm::hyp2f1(p, 0.9));
}
BENCHMARK(BM_hyp2f1_interior);

void BM_profile_near_boundary(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(alpharm::hyp2f1_profile(-0.5, 8, 1.0 - 1e-6));
}
BENCHMARK(BM_profile_near_boundary);

void BM_kernel_mean_closed(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(alpharm::kernel_mean_closed(-0.5, 0.95));
}
BENCHMARK(BM_kernel_mean_closed);

void BM_kernel_mean_quadrature(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(alpharm::kernel_mean_quadrature(-0.5, 0.95, 256));
}
BENCHMARK(BM_kernel_mean_quadrature);

void BM_evaluate(benchmark::State& state) {
  const auto sol = dense_solution(1.0, static_cast<int>(state.range(0)));
  const alpharm::DiskPoint z{std::polar(0.8, 1.1)};
  for (auto _ : state) benchmark::DoNotOptimize(alpharm::evaluate(sol, z));
}
BENCHMARK(BM_evaluate)->Arg(8)->Arg(64);

void BM_wirtinger(benchmark::State& state) {
  const auto sol = dense_solution(1.0, 64);
  const alpharm::DiskPoint z{std::polar(0.8, 1.1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(alpharm::wirtinger_derivatives(sol, z));
}
BENCHMARK(BM_wirtinger);

void BM_from_boundary(benchmark::State& state) {
  std::vector<std::complex<double>> samples(256);
  for (int j = 0; j < 256; ++j) {
    const double t = 2.0 * kPi * j / 256;
    samples[static_cast<size_t>(j)] =
        std::polar(1.0, t) + 0.25 * std::polar(1.0, -3.0 * t);
  }
  const alpharm::BoundaryData data(samples);
  for (auto _ : state)
    benchmark::DoNotOptimize(alpharm::from_boundary(data, 1.0, 32));
}
BENCHMARK(BM_from_boundary);

void BM_sup_estimate(benchmark::State& state) {
  const auto sol = dense_solution(0.5, 16);
  for (auto _ : state) benchmark::DoNotOptimize(alpharm::sup_estimate(sol));
}
BENCHMARK(BM_sup_estimate);

void BM_solve_rho(benchmark::State& state) {
  const alpharm::LandauInputs in(0.0, 1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(alpharm::solve_rho(in));
}
BENCHMARK(BM_solve_rho);

void BM_minimize_mu(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(alpharm::minimize_mu(0.0, 2.0));
}
BENCHMARK(BM_minimize_mu);

}  // namespace

BENCHMARK_MAIN();

// Serial reference against the OpenMP drivers: the figure grid and the
// Kummer oracle sample sweep.

#include <benchmark/benchmark.h>

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <nhmorse/grid.hpp>
#include <nhmorse/specfun.hpp>
#include <nhmorse/verify.hpp>

namespace {

using nhmorse::ComplexScalar;

nhmorse::grid::GridSpec spec(int nK) {
  nhmorse::grid::GridSpec s;
  s.map = nhmorse::ParameterMap::derived;
  s.K_range = {0.0, 2.0, nK};
  return s;
}

void BM_GridSerial(benchmark::State& state) {
  const auto s = spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nhmorse::grid::evaluate_grid_serial(s));
  state.SetItemsProcessed(state.iterations() * 61 * state.range(0));
}

void BM_GridParallel(benchmark::State& state) {
  const auto s = spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nhmorse::grid::evaluate_grid(s));
  state.SetItemsProcessed(state.iterations() * 61 * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

struct Sample {
  ComplexScalar a, b;
  double z;
};

std::vector<Sample> samples(int n) {
  std::mt19937_64 rng(20050101);
  std::uniform_real_distribution<double> u(-10.0, 10.0), uz(0.0, 30.0);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < n) {
    const ComplexScalar a(u(rng), u(rng)), b(u(rng), u(rng));
    if (std::abs(a) > 10.0 || std::abs(b) > 10.0) continue;
    if (std::abs(b - std::round(b.real())) < 0.25) continue;
    const double z = uz(rng);
    if (z > 0.0) out.push_back({a, b, z});
  }
  return out;
}

double oracle_sweep(const std::vector<Sample>& s, bool parallel) {
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst) if (parallel)
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    const ComplexScalar m = nhmorse::specfun::kummer_m(s[i].a, s[i].b, s[i].z);
    const ComplexScalar r = nhmorse::verify::reference_kummer(s[i].a, s[i].b, s[i].z);
    worst = std::max(worst, std::abs(m - r) / std::abs(r));
  }
  return worst;
}

void BM_OracleSerial(benchmark::State& state) {
  const auto s = samples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep(s, false));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OracleParallel(benchmark::State& state) {
  const auto s = samples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep(s, true));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(41)->Arg(161)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(41)->Arg(161)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// Parallel vs serial partition-sum kernels. The oracle is warmed before
// timing so both variants measure the Bell(n)-sized sum, not the recursion.

#include <vector>

#include <benchmark/benchmark.h>

#include "taut/omega_kappa.hpp"
#include "taut/pinwheel.hpp"

namespace {

// g = 2, n marks, exponents spread as evenly as possible over 3g-3+n.
taut::OmegaMonomial omega_input(int n) {
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < 3 + n; ++u) ++k[u % n];
  return {2, k};
}

taut::KappaMonomial kappa_input(int n) {
  std::vector<int> l(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < 6; ++u) ++l[u % n];
  return {3, l};
}

taut::PsiOracle& warm_oracle() {
  static taut::PsiOracle oracle;
  return oracle;
}

void BM_OmegaTopParallel(benchmark::State& state) {
  auto m = omega_input(static_cast<int>(state.range(0)));
  taut::omega_top_serial(m, warm_oracle());
  for (auto _ : state) benchmark::DoNotOptimize(taut::omega_top(m, warm_oracle()));
}

void BM_OmegaTopSerial(benchmark::State& state) {
  auto m = omega_input(static_cast<int>(state.range(0)));
  taut::omega_top_serial(m, warm_oracle());
  for (auto _ : state) benchmark::DoNotOptimize(taut::omega_top_serial(m, warm_oracle()));
}

void BM_KappaTopParallel(benchmark::State& state) {
  auto m = kappa_input(static_cast<int>(state.range(0)));
  taut::kappa_top_serial(m, warm_oracle());
  for (auto _ : state) benchmark::DoNotOptimize(taut::kappa_top(m, warm_oracle()));
}

void BM_KappaTopSerial(benchmark::State& state) {
  auto m = kappa_input(static_cast<int>(state.range(0)));
  taut::kappa_top_serial(m, warm_oracle());
  for (auto _ : state) benchmark::DoNotOptimize(taut::kappa_top_serial(m, warm_oracle()));
}

void BM_IntegrateExpansionParallel(benchmark::State& state) {
  auto m = omega_input(static_cast<int>(state.range(0)));
  taut::integrate_expansion_serial(m, warm_oracle());
  for (auto _ : state) benchmark::DoNotOptimize(taut::integrate_expansion(m, warm_oracle()));
}

void BM_IntegrateExpansionSerial(benchmark::State& state) {
  auto m = omega_input(static_cast<int>(state.range(0)));
  taut::integrate_expansion_serial(m, warm_oracle());
  for (auto _ : state) benchmark::DoNotOptimize(taut::integrate_expansion_serial(m, warm_oracle()));
}

}  // namespace

BENCHMARK(BM_OmegaTopParallel)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OmegaTopSerial)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KappaTopParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KappaTopSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegrateExpansionParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegrateExpansionSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

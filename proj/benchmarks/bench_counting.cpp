#include <benchmark/benchmark.h>

#include "ibc/root_eigensolver.hpp"
#include "ibc/tensor_complexity.hpp"

namespace {

void BM_CountSobolevMin(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const double eps = 0.1;
  const ibc::EigenSequence eigs =
      ibc::analytic_eigenvalues_down_to(ibc::KernelSpec::sobolev_min(), eps * eps);
  const ibc::ComplexityQuery q(eps, d);
  for (auto _ : state) benchmark::DoNotOptimize(ibc::count_info_complexity_all(eigs, q).count);
}
BENCHMARK(BM_CountSobolevMin)->Arg(2)->Arg(8)->Arg(32)->Arg(128);

void BM_CountKorobov(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const double eps = 0.5;
  const ibc::EigenSequence eigs =
      ibc::analytic_eigenvalues_down_to(ibc::KernelSpec::korobov(1.0, 0.5), eps * eps);
  const ibc::ComplexityQuery q(eps, d);
  for (auto _ : state) benchmark::DoNotOptimize(ibc::count_info_complexity_all(eigs, q).count);
}
BENCHMARK(BM_CountKorobov)->Arg(4)->Arg(16)->Arg(64);

void BM_BruteForceCount(benchmark::State& state) {
  const ibc::EigenSequence eigs =
      ibc::analytic_eigenvalues_down_to(ibc::KernelSpec::sobolev_min(), 0.01);
  const ibc::ComplexityQuery q(0.1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ibc::brute_force_count(eigs, q).count);
}
BENCHMARK(BM_BruteForceCount)->Arg(2)->Arg(3);

}  // namespace

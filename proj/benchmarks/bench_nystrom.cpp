#include <benchmark/benchmark.h>

#include "ibc/nystrom.hpp"
#include "ibc/root_eigensolver.hpp"

namespace {

void BM_NystromSobolevMin(benchmark::State& state) {
  const auto grid = ibc::QuadratureGrid::midpoint(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ibc::nystrom_spectrum(ibc::KernelSpec::sobolev_min(), grid, 5)[0]);
  }
}
BENCHMARK(BM_NystromSobolevMin)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CotRoots(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ibc::sobolev_min_eigenvalues(count)[0]);
}
BENCHMARK(BM_CotRoots)->Arg(100)->Arg(10000);

}  // namespace

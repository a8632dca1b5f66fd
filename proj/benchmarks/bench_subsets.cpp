#include <benchmark/benchmark.h>

#include "ibc/functional_reduction.hpp"

namespace {

void BM_MinimalErrorExampleInstance(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const ibc::DiscreteProblem p = ibc::example2_instance(d);
  const ibc::Functional g = ibc::build_Ig(p, ibc::g_from_values(p, Eigen::VectorXd::Ones(p.m())));
  const int n = (1 << d) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(ibc::minimal_error_std(p, g, n).error);
}
BENCHMARK(BM_MinimalErrorExampleInstance)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifyDomination(benchmark::State& state) {
  const ibc::DiscreteProblem p = ibc::random_problem(6, 4, 1);
  Eigen::VectorXd g = Eigen::VectorXd::Ones(4);
  g /= p.norm_G(g);
  for (auto _ : state) benchmark::DoNotOptimize(ibc::verify_domination(p, g, 2, 20, 1).passed());
}
BENCHMARK(BM_VerifyDomination)->Unit(benchmark::kMillisecond);

}  // namespace

#include <benchmark/benchmark.h>

#include "sphunit/intertwine.hpp"
#include "sphunit/levi_eo.hpp"
#include "sphunit/symbols.hpp"
#include "sphunit/tableaux.hpp"
#include "sphunit/unitarity.hpp"

using namespace sphunit;

namespace {

void BM_Verdict(benchmark::State& state) {
  const Parameter p = parse_parameter("-1/4,3/4,-2/3,1/3,4/3,-3/2,-1/2,1/2,3/2,1/2", GroupType::B);
  for (auto _ : state) benchmark::DoNotOptimize(verdict(p));
}
BENCHMARK(BM_Verdict);

void BM_AllSignatures(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Vec x;
  for (int i = 0; i < n; ++i) x.push_back(Rational(i + 1, 5));
  const Parameter p{GroupType::B, x};
  for (auto _ : state) benchmark::DoNotOptimize(all_signatures(p));
}
BENCHMARK(BM_AllSignatures)->DenseRange(2, 5);

void BM_BuildSigmaE(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_sigma_e(GroupType::C, n, n / 2));
}
BENCHMARK(BM_BuildSigmaE)->DenseRange(4, 8, 2);

void BM_OracleSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep(GroupType::C, 4, 2, sixth_grid(5)));
}
BENCHMARK(BM_OracleSweep)->Unit(benchmark::kMillisecond);

void BM_EnumerateRealForms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_real_forms(TabKind::so, {1, 1, 2, 2, 3, 3, 4, 4}));
}
BENCHMARK(BM_EnumerateRealForms);

void BM_Families(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(families(GroupType::B, n));
}
BENCHMARK(BM_Families)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();

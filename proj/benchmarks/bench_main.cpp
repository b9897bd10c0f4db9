#include <benchmark/benchmark.h>

#include "qcapelli/capelli.hpp"
#include "qcapelli/fusion.hpp"
#include "qcapelli/matrixrep.hpp"
#include "qcapelli/superdiff.hpp"

using namespace qcapelli;

namespace {

StrictPartition row(int n) { return StrictPartition({n}); }

void BM_PsiRow(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi(row(n)));
}
BENCHMARK(BM_PsiRow)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Psi_3_2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psi(StrictPartition({3, 2})));
}
BENCHMARK(BM_Psi_3_2)->Unit(benchmark::kMillisecond);

void BM_Rep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  const SergeevElement& x = psi_cached(row(n));
  for (auto _ : state) benchmark::DoNotOptimize(rep(x, 2));
}
BENCHMARK(BM_Rep)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_OperatorProduct(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  NormalOrderedOperator a = invariant_capelli_sum(1, N, N);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_OperatorProduct)->DenseRange(1, 3);

void BM_CapelliImage(benchmark::State& state) {
  StrictPartition l = state.range(0) == 0 ? row(2) : StrictPartition({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(c_lambda_gamma(l, 2, 2));
}
BENCHMARK(BM_CapelliImage)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SchurQ(benchmark::State& state) {
  StrictPartition l({4, 2, 1});
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schur_q(l, N));
}
BENCHMARK(BM_SchurQ)->DenseRange(3, 5);

void BM_SchurQTableaux(benchmark::State& state) {
  StrictPartition l({4, 2, 1});
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schur_q_tableaux(l, N));
}
BENCHMARK(BM_SchurQTableaux)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();

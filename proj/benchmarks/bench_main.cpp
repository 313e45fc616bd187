#include <benchmark/benchmark.h>

#include "majdist/closed_forms.hpp"
#include "majdist/kr_koh.hpp"
#include "majdist/schur.hpp"
#include "majdist/tableaux.hpp"

using namespace majdist;

namespace {

void BM_GaussBinomialQuotient(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_binomial_quotient(m, m / 2));
}
BENCHMARK(BM_GaussBinomialQuotient)->Arg(20)->Arg(40)->Arg(80);

// Memoized table; after the first call this is a lookup plus a copy.
void BM_GaussBinomialMemo(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_binomial(m, m / 2));
}
BENCHMARK(BM_GaussBinomialMemo)->Arg(20)->Arg(40)->Arg(80);

void BM_DistributionStraight(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SkewShape s(Partition({n, n, n}));
  for (auto _ : state) benchmark::DoNotOptimize(distribution(s));
  state.SetLabel("shape " + format_shape(s));
}
BENCHMARK(BM_DistributionStraight)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DistributionSkew(benchmark::State& state) {
  const SkewShape s = parse_shape("5,4,3,2,1/4,3,2,1");
  for (auto _ : state) benchmark::DoNotOptimize(distribution(s));
}
BENCHMARK(BM_DistributionSkew)->Unit(benchmark::kMillisecond);

void BM_TwoRowWalk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SkewShape s(Partition({n, n}));
  for (auto _ : state) benchmark::DoNotOptimize(two_row_distribution(s));
}
BENCHMARK(BM_TwoRowWalk)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_JacobiTrudiH(benchmark::State& state) {
  const SkewShape s(Partition({4, 3, 2, 1}));
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jt_h_specialization(s, m));
}
BENCHMARK(BM_JacobiTrudiH)->Arg(4)->Arg(8);

void BM_KrKostka(benchmark::State& state) {
  const Partition lambda({3, 3, 2});
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kr_kostka(lambda, k));
}
BENCHMARK(BM_KrKostka)->DenseRange(1, 5);

void BM_FTwoRowSkew(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_two_row_skew(12, 9, 4, 5));
}
BENCHMARK(BM_FTwoRowSkew);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "matgamma/analysis.hpp"
#include "matgamma/harness/gallery.hpp"
#include "matgamma/matfun.hpp"
#include "matgamma/schur_parlett.hpp"

namespace {

using namespace matgamma;

ComplexMatrix stable_matrix(std::size_t n) { return harness::gallery("rand-stable", n, 7); }

void BM_Expm(benchmark::State& state) {
  const auto a = stable_matrix(std::size_t(state.range(0))) * 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(expm(a));
}
BENCHMARK(BM_Expm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Logm(benchmark::State& state) {
  const auto a = stable_matrix(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(logm(a));
}
BENCHMARK(BM_Logm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Schur(benchmark::State& state) {
  const auto a = harness::gallery("rand-mixed", std::size_t(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(schur(a));
}
BENCHMARK(BM_Schur)->Arg(8)->Arg(16)->Arg(32);

template <GammaMethod Method>
void BM_Gamma(benchmark::State& state) {
  const auto a = harness::gallery("rand-mixed", std::size_t(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gamma(a, Method));
}
BENCHMARK(BM_Gamma<GammaMethod::Lanczos>)->Arg(5)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_Gamma<GammaMethod::Spouge>)->Arg(5)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_Gamma<GammaMethod::Reciprocal>)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_Cond(benchmark::State& state) {
  const auto a = stable_matrix(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cond_gamma(a));
}
BENCHMARK(BM_Cond)->Arg(5)->Arg(10);

void BM_TruncationBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(truncation_bound(33));
}
BENCHMARK(BM_TruncationBound);

}  // namespace

BENCHMARK_MAIN();

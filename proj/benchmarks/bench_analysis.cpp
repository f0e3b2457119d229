#include <benchmark/benchmark.h>

#include "nfw/analysis.hpp"

namespace {

nfw::Window make(nfw::Kind kind, int m, double sigma, int N) {
  const nfw::WindowKind k{kind, 2.0};
  return nfw::Window(k, nfw::make_params(k, m, sigma, N));
}

void BM_Periodization(benchmark::State& state) {
  const auto kind = static_cast<nfw::Kind>(state.range(0));
  const nfw::Window w = make(kind, 4, 2.0, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(nfw::error_constant_periodization(w));
}
BENCHMARK(BM_Periodization)
    ->Args({static_cast<int>(nfw::Kind::BSpline), 64})
    ->Args({static_cast<int>(nfw::Kind::Sinh), 64})
    ->Args({static_cast<int>(nfw::Kind::Sinh), 1024})
    ->Unit(benchmark::kMillisecond);

void BM_Aliasing(benchmark::State& state) {
  const auto kind = static_cast<nfw::Kind>(state.range(0));
  const nfw::Window w = make(kind, 3, 1.5, 64);
  for (auto _ : state) benchmark::DoNotOptimize(nfw::error_constant_aliasing(w));
}
BENCHMARK(BM_Aliasing)
    ->Arg(static_cast<int>(nfw::Kind::BSpline))
    ->Arg(static_cast<int>(nfw::Kind::Bessel))
    ->Arg(static_cast<int>(nfw::Kind::ModifiedCosh))
    ->Unit(benchmark::kMillisecond);

void BM_TheoreticalBound(benchmark::State& state) {
  int m = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfw::theoretical_bound(nfw::WindowKind{nfw::Kind::Algebraic}, m, 1.5));
    m = m == 6 ? 2 : m + 1;
  }
}
BENCHMARK(BM_TheoreticalBound);

}  // namespace

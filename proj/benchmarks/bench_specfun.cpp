#include <benchmark/benchmark.h>

#include "nfw/specfun.hpp"

namespace {

void BM_BesselJ(benchmark::State& state) {
  const double mu = static_cast<double>(state.range(0));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfw::specfun::bessel_j(mu, x));
    x = x > 60.0 ? 0.0 : x + 0.37;
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(1)->Arg(9)->Arg(18);

void BM_BesselI(benchmark::State& state) {
  const double mu = static_cast<double>(state.range(0));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfw::specfun::bessel_i(mu, x));
    x = x > 60.0 ? 0.0 : x + 0.37;
  }
}
BENCHMARK(BM_BesselI)->Arg(0)->Arg(2);

void BM_CardinalBSpline(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  double x = -order / 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfw::specfun::cardinal_bspline(order, x));
    x = x > order / 2.0 ? -order / 2.0 : x + 0.013;
  }
}
BENCHMARK(BM_CardinalBSpline)->Arg(4)->Arg(8)->Arg(12);

void BM_Spherical2Ratio(benchmark::State& state) {
  double w = -400.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfw::specfun::spherical2_ratio(w));
    w = w > 400.0 ? -400.0 : w + 1.3;
  }
}
BENCHMARK(BM_Spherical2Ratio);

}  // namespace

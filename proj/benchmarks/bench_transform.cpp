#include <benchmark/benchmark.h>

#include <random>

#include "nfw/transform.hpp"

namespace {

nfw::Window make(nfw::Kind kind, int m, double sigma, int N) {
  const nfw::WindowKind k{kind, 2.0};
  return nfw::Window(k, nfw::make_params(k, m, sigma, N));
}

nfw::NodeSet random_nodes(std::size_t M) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  nfw::NodeSet nodes;
  for (std::size_t j = 0; j < M; ++j) nodes.nodes.push_back(dist(rng));
  return nodes;
}

nfw::TrigPolynomial random_poly(int N) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> dist;
  auto poly = nfw::TrigPolynomial::zeros(N);
  for (auto& c : poly.coeffs) c = nfw::Complex(dist(rng), dist(rng));
  return poly;
}

void BM_Fft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const nfw::Fft fft(n);
  std::vector<nfw::Complex> data(n, nfw::Complex(1.0, 0.5));
  for (auto _ : state) {
    fft.forward(data.data());
    benchmark::DoNotOptimize(data.data());
  }
}
BENCHMARK(BM_Fft)->Arg(1024)->Arg(1280)->Arg(1536)->Arg(4096);

void BM_NfftForward(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const nfw::NfftPlan plan(make(nfw::Kind::Sinh, 4, 2.0, N), random_nodes(static_cast<std::size_t>(N)));
  const auto poly = random_poly(N);
  for (auto _ : state) benchmark::DoNotOptimize(nfw::nfft_forward(plan, poly));
  state.SetComplexityN(N);
}
BENCHMARK(BM_NfftForward)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_NfftAdjoint(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const nfw::NfftPlan plan(make(nfw::Kind::Sinh, 4, 2.0, N), random_nodes(static_cast<std::size_t>(N)));
  std::vector<nfw::Complex> values(static_cast<std::size_t>(N), nfw::Complex(1.0, -1.0));
  for (auto _ : state) benchmark::DoNotOptimize(nfw::nfft_adjoint(plan, values));
  state.SetComplexityN(N);
}
BENCHMARK(BM_NfftAdjoint)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_NdftForward(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto nodes = random_nodes(static_cast<std::size_t>(N));
  const auto poly = random_poly(N);
  for (auto _ : state) benchmark::DoNotOptimize(nfw::ndft_forward(poly, nodes));
  state.SetComplexityN(N);
}
BENCHMARK(BM_NdftForward)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_PlanSetup(benchmark::State& state) {
  const auto kind = static_cast<nfw::Kind>(state.range(0));
  const nfw::Window w = make(kind, 4, 2.0, 256);
  const auto nodes = random_nodes(1000);
  for (auto _ : state) benchmark::DoNotOptimize(nfw::NfftPlan(w, nodes));
}
BENCHMARK(BM_PlanSetup)
    ->Arg(static_cast<int>(nfw::Kind::BSpline))
    ->Arg(static_cast<int>(nfw::Kind::Sinh))
    ->Arg(static_cast<int>(nfw::Kind::ModifiedCosh));

}  // namespace

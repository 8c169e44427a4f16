// Fast and parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "circeig/circulant.hpp"
#include "circeig/reference.hpp"
#include "circeig/toeplitz.hpp"

using namespace circeig;

namespace {

ComplexVector random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexVector v(n);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

void BM_DftFast(benchmark::State& state) {
  const auto x = random_vector(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dft_forward(x));
}

void BM_DftNaive(benchmark::State& state) {
  const auto x = random_vector(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::naive_dft(x));
}

void BM_ToeplitzMatvecFft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto seq = make_triangular(0.25).sequence;
  const auto x = random_vector(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_matvec(seq, n, x));
}

void BM_ToeplitzMatvecDenseParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = build_toeplitz(make_triangular(0.25).sequence, n);
  const auto x = random_vector(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dense_matvec(a, x));
}

void BM_ToeplitzMatvecDenseSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = build_toeplitz(make_triangular(0.25).sequence, n);
  const auto x = random_vector(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::dense_matvec(a, x));
}

void BM_CesaroEigs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto seq = make_sawtooth().sequence;
  for (auto _ : state) benchmark::DoNotOptimize(circulant_eigs(cesaro_row(seq, n)));
}

void BM_ExactEigs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = build_toeplitz(make_sawtooth().sequence, n);
  for (auto _ : state) benchmark::DoNotOptimize(exact_eigs(a));
}

void BM_DirichletEnergyParallel(benchmark::State& state) {
  const auto panels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_energy(512, 0.0, 1.0, panels));
}

void BM_DirichletEnergySerial(benchmark::State& state) {
  const auto panels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::dirichlet_energy(512, 0.0, 1.0, panels));
  }
}

}  // namespace

BENCHMARK(BM_DftFast)->Arg(97)->Arg(500)->Arg(2048)->Arg(4093);
BENCHMARK(BM_DftNaive)->Arg(97)->Arg(500)->Arg(2048);
BENCHMARK(BM_ToeplitzMatvecFft)->Arg(256)->Arg(2048);
BENCHMARK(BM_ToeplitzMatvecDenseParallel)->Arg(256)->Arg(2048);
BENCHMARK(BM_ToeplitzMatvecDenseSerial)->Arg(256)->Arg(2048);
BENCHMARK(BM_CesaroEigs)->Arg(256)->Arg(2048);
BENCHMARK(BM_ExactEigs)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirichletEnergyParallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_DirichletEnergySerial)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();

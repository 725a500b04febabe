// Serial reference vs production rank kernel, on Lefschetz matrices of paths
// at the mode and on random 0/1 matrices.
#include <benchmark/benchmark.h>

#include <random>

#include "wlplab/algebra.hpp"
#include "wlplab/indpoly.hpp"
#include "wlplab/rank_kernels.hpp"

using namespace wlplab;

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1, Montgomery path
constexpr std::uint64_t kSmallPrime = 4294967291ull;      // 2^32 - 5, single-word path

kernels::DenseModMatrix path_map(long n) {
  return kernels::pack(lefschetz_matrix(path_graph(n), mode_formula(ModeKind::Path, n)));
}

kernels::DenseModMatrix random_square(std::size_t n) {
  std::mt19937_64 rng(n);
  std::bernoulli_distribution bit(0.2);
  kernels::DenseModMatrix m{n, n, std::vector<std::uint64_t>(n * n)};
  for (auto& x : m.data) x = bit(rng);
  return m;
}

void BM_PathSerial(benchmark::State& state) {
  const auto m = path_map(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_serial(m, kPrime));
  state.counters["rows"] = static_cast<double>(m.rows);
}

void BM_PathParallel(benchmark::State& state) {
  const auto m = path_map(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_parallel(m, kPrime));
  state.counters["rows"] = static_cast<double>(m.rows);
}

void BM_PathParallelSmallPrime(benchmark::State& state) {
  const auto m = path_map(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_parallel(m, kSmallPrime));
}

void BM_RandomSerial(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_serial(m, kPrime));
}

void BM_RandomParallel(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_parallel(m, kPrime));
}

}  // namespace

BENCHMARK(BM_PathSerial)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathParallel)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathParallelSmallPrime)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSerial)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomParallel)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

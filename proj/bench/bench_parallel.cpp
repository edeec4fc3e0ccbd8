#include <hksym/isometry_pool.hpp>
#include <hksym/kummer_catalog.hpp>

#include <benchmark/benchmark.h>

using namespace hksym;

namespace {

TorusAutomorphism identity_aut(long n) { return TorusAutomorphism(IntMatrix::identity(4), {0, 0, 0, 0}, n); }

void BM_SeriesSerial(benchmark::State& state) {
  const auto aut = identity_aut(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generating_series_serial(aut, static_cast<std::size_t>(aut.n)));
}

void BM_SeriesParallel(benchmark::State& state) {
  const auto aut = identity_aut(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generating_series(aut, static_cast<std::size_t>(aut.n)));
}

const std::vector<PoolMember>& pool() {
  static const auto p = build_isometry_pool(120, 7);
  return p;
}

void BM_PoolSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_pool_serial(pool()));
}

void BM_PoolParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_pool_parallel(pool()));
}

}  // namespace

BENCHMARK(BM_SeriesSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PoolSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PoolParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

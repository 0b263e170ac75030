#include <benchmark/benchmark.h>

#include "bentmax/bentcomp.hpp"
#include "bentmax/kloosterman.hpp"

using namespace bentmax;

static void BM_BentComponents(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field f(n);
  const VectorialFun fun = power_map(f, (std::int64_t{1} << (n / 2)) + 1);
  for (auto _ : state) {
    const auto r = bent_components(f, fun, 1);
    benchmark::DoNotOptimize(r.bent_count);
  }
}
BENCHMARK(BM_BentComponents)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_OpenProblemScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field f(n);
  for (auto _ : state) {
    const auto out = open_problem_scan(f, 1);
    benchmark::DoNotOptimize(out.size());
  }
}
BENCHMARK(BM_OpenProblemScan)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_KloostermanTable(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Field f(k);
  for (auto _ : state) {
    const auto sums = kloosterman_table(f);
    benchmark::DoNotOptimize(sums[0]);
  }
}
BENCHMARK(BM_KloostermanTable)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_FamilyEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field f(n);
  for (auto _ : state) {
    const auto members = family_enumerate(f, Family::gold);
    benchmark::DoNotOptimize(members.size());
  }
}
BENCHMARK(BM_FamilyEnumerate)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

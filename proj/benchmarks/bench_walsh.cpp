#include <benchmark/benchmark.h>

#include <random>

#include "bentmax/boolfun.hpp"

using namespace bentmax;

static void BM_Walsh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field f(n);
  std::mt19937_64 rng(3);
  BoolFun fn{n, std::vector<std::uint8_t>(f.size(), 0)};
  for (auto& b : fn.table) b = rng() & 1;
  for (auto _ : state) {
    const WalshSpectrum w = walsh(f, fn);
    benchmark::DoNotOptimize(w.values[0]);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Walsh)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Arg(16);

static void BM_MonomialBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field f(n);
  for (auto _ : state) {
    const BoolFun fn = monomial(f, f.generator(), 3);
    benchmark::DoNotOptimize(fn.table[1]);
  }
}
BENCHMARK(BM_MonomialBuild)->Arg(10)->Arg(14)->Arg(16);

static void BM_TraceRepr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Field f(n);
  std::mt19937_64 rng(5);
  BoolFun fn{n, std::vector<std::uint8_t>(f.size(), 0)};
  for (auto& b : fn.table) b = rng() & 1;
  for (auto _ : state) {
    const TraceRepr r = trace_repr(f, fn);
    benchmark::DoNotOptimize(r.terms.size());
  }
}
BENCHMARK(BM_TraceRepr)->Arg(6)->Arg(8)->Arg(10);

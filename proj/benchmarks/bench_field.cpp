#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bentmax/field.hpp"

using namespace bentmax;

static void BM_FieldBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Field f(n);
    benchmark::DoNotOptimize(f.generator());
  }
}
BENCHMARK(BM_FieldBuild)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_Mul(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Elem> xs(4096);
  for (auto& x : xs) x = 1 + rng() % (f.size() - 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.mul(xs[i & 4095], xs[(i + 1) & 4095]));
    ++i;
  }
}
BENCHMARK(BM_Mul)->Arg(8)->Arg(16)->Arg(24);

static void BM_Pow(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  std::size_t i = 0;
  std::vector<std::int64_t> es(4096);
  for (auto& e : es) e = static_cast<std::int64_t>(rng() >> 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.pow(f.generator(), es[i & 4095]));
    ++i;
  }
}
BENCHMARK(BM_Pow)->Arg(16)->Arg(24);

static void BM_Trace(benchmark::State& state) {
  const Field f(16);
  Elem x = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.trace(x));
    x = (x + 1) & (f.size() - 1);
  }
}
BENCHMARK(BM_Trace);

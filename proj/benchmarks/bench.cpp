#include <benchmark/benchmark.h>

#include "scrollsys/oracle.hpp"
#include "scrollsys/reduction.hpp"

namespace {

using namespace scrollsys;

void BM_OracleRank(benchmark::State& state) {
  SystemSpec s = make_homogeneous(3, 8, static_cast<Int>(state.range(0)), 3, 10);
  auto pts = sample_points(s.r(), kDefaultPrime, 42);
  for (auto _ : state) {
    FpMatrix m = condition_matrix(s, pts, kDefaultPrime);
    benchmark::DoNotOptimize(rank_mod_p(m, kDefaultPrime));
  }
}
BENCHMARK(BM_OracleRank)->Arg(4)->Arg(8)->Arg(12);

void BM_Reduce(benchmark::State& state) {
  SystemSpec s = make_homogeneous(2, 0, static_cast<Int>(state.range(0)), 3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(s));
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(6)->Arg(8);

void BM_IsSpecial(benchmark::State& state) {
  SystemSpec s = make_homogeneous(1, 2, 6, 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(is_minus_one_special(s));
}
BENCHMARK(BM_IsSpecial);

}  // namespace

BENCHMARK_MAIN();

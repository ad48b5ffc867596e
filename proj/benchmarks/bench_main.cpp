#include <benchmark/benchmark.h>

#include "tiltwall/counting.hpp"
#include "tiltwall/first_wall.hpp"
#include "tiltwall/modular.hpp"

using namespace tiltwall;

namespace {

const ThreefoldData kQuintic{5, 50, 1, 1, true};

CurveCharge cc(std::int64_t beta, std::int64_t m, std::int64_t n) {
  return CurveCharge{Rational(beta), Rational(m), std::nullopt, n};
}

void BM_FirstWall(benchmark::State& state) {
  const CurveCharge c = cc(state.range(0), 3, 40);
  for (auto _ : state) benchmark::DoNotOptimize(first_wall(c, kQuintic));
}
BENCHMARK(BM_FirstWall)->Arg(1)->Arg(5)->Arg(20);

void BM_MinNUnique(benchmark::State& state) {
  const CurveCharge c = cc(state.range(0), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(min_n_unique(c, kQuintic, 200));
}
BENCHMARK(BM_MinNUnique)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EtaInverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eta_inverse_power(55, state.range(0)));
}
BENCHMARK(BM_EtaInverse)->Arg(10)->Arg(50)->Arg(200);

void BM_TodaEmptyTables(benchmark::State& state) {
  const InvariantTable I, P;
  const CurveCharge c = cc(state.range(0), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(toda_sum(c, kQuintic, I, P));
}
BENCHMARK(BM_TodaEmptyTables)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "hydrocomp/entropy.hpp"
#include "hydrocomp/measures.hpp"
#include "hydrocomp/oracle.hpp"
#include "hydrocomp/quadrature.hpp"
#include "hydrocomp/wigner.hpp"

using namespace hydrocomp;
using orbital::QuantumNumbers;

static void BM_ReportGroundState(benchmark::State& state) {
  const QuantumNumbers q(1, 0, 0);
  for (auto _ : state) {
    auto rep = measures::report(q);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ReportGroundState);

static void BM_ReportRydberg(benchmark::State& state) {
  const QuantumNumbers q(20, 17, 17);
  for (auto _ : state) {
    auto rep = measures::report(q);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ReportRydberg);

static void BM_ThreeJCold(benchmark::State& state) {
  for (auto _ : state) {
    wigner::clear_cache();
    auto v = wigner::three_j(19, 19, 38, 17, 17, -34);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ThreeJCold);

static void BM_ThreeJWarm(benchmark::State& state) {
  wigner::three_j(19, 19, 38, 17, 17, -34);
  for (auto _ : state) {
    auto v = wigner::three_j(19, 19, 38, 17, 17, -34);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ThreeJWarm);

static void BM_BuildRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rule =
        entropy::build_rule(entropy::QuadratureFamily::GaussLaguerre, order, 3.0);
    benchmark::DoNotOptimize(rule);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildRule)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_EntropicLaguerre(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double e = entropy::entropic_integral_laguerre(degree, 1.0, 1);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_EntropicLaguerre)->Arg(1)->Arg(9)->Arg(19);

static void BM_AngularDisequilibrium(benchmark::State& state) {
  for (auto _ : state) {
    double d = measures::angular_disequilibrium(19, 5);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_AngularDisequilibrium);

static void BM_OracleShannon(benchmark::State& state) {
  const QuantumNumbers q(2, 1, 1);
  for (auto _ : state) {
    auto r = oracle::shannon(q);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_OracleShannon);

BENCHMARK_MAIN();

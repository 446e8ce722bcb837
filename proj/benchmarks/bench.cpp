#include <benchmark/benchmark.h>

#include "latcount/convert.hpp"
#include "latcount/lp.hpp"
#include "latcount/oracle.hpp"

using namespace latcount;

namespace {

ParametricPolytope running_example() {
  RatMat a(4, 2), b(4, 2);
  const long av[4][2] = {{1, -2}, {-1, 1}, {0, 0}, {0, 0}};
  const long bv[4][2] = {{-1, 2}, {1, -1}, {-1, 0}, {0, -1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      a(i, j) = av[i][j];
      b(i, j) = bv[i][j];
    }
  return ParametricPolytope::from_matrices(a, b, RatVec(4));
}

// s * [0, 1/2]^k
ParametricPolytope dilated_cube(std::size_t k) {
  RatMat a(2 * k, 1), b(2 * k, k);
  for (std::size_t i = 0; i < k; ++i) {
    b(i, i) = -1;
    a(k + i, 0) = -1;
    b(k + i, i) = 2;
  }
  return ParametricPolytope::from_matrices(a, b, RatVec(2 * k));
}

RatGenFun twos_fives() {
  return RatGenFun{1, {GFTerm{1, IntVec{0}, {IntVec{2}, IntVec{5}}}}};
}

}  // namespace

static void BM_CountRunningExample(benchmark::State& state) {
  const ParametricPolytope p = running_example();
  for (auto _ : state) benchmark::DoNotOptimize(count_parametric(p));
}
BENCHMARK(BM_CountRunningExample)->Unit(benchmark::kMillisecond);

static void BM_CountDilatedCube(benchmark::State& state) {
  const ParametricPolytope p = dilated_cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_parametric(p));
}
BENCHMARK(BM_CountDilatedCube)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_GfToStep(benchmark::State& state) {
  const RatGenFun f = twos_fives();
  for (auto _ : state) benchmark::DoNotOptimize(gf_to_step(f, IntVec{-1}));
}
BENCHMARK(BM_GfToStep)->Unit(benchmark::kMillisecond);

static void BM_StepToGf(benchmark::State& state) {
  const PiecewiseStepPoly c = count_parametric(dilated_cube(2));
  for (auto _ : state) benchmark::DoNotOptimize(step_to_gf(c));
}
BENCHMARK(BM_StepToGf)->Unit(benchmark::kMillisecond);

static void BM_RoundTrip(benchmark::State& state) {
  const RatGenFun f = twos_fives();
  for (auto _ : state) benchmark::DoNotOptimize(step_to_gf(gf_to_step(f, IntVec{-1})));
}
BENCHMARK(BM_RoundTrip)->Unit(benchmark::kMillisecond);

static void BM_LpBox(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  Polyhedron p{d, {}, {}};
  RatVec obj(d);
  for (std::size_t i = 0; i < d; ++i) {
    RatVec lo(d), hi(d), diag(d);
    lo[i] = -1;
    hi[i] = 1;
    p.ineqs.push_back({lo, 0});
    p.ineqs.push_back({hi, Rat(i + 1)});
    for (std::size_t j = 0; j < d; ++j) diag[j] = 1;
    p.ineqs.push_back({diag, Rat(d)});
    obj[i] = Rat(i + 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(lp_maximize(p, obj));
}
BENCHMARK(BM_LpBox)->RangeMultiplier(2)->Range(2, 16);

static void BM_SumPiecewise(benchmark::State& state) {
  const PiecewiseStepPoly c = count_parametric(running_example());
  const std::vector<PiecewiseStepPoly> cs(static_cast<std::size_t>(state.range(0)), c);
  for (auto _ : state) benchmark::DoNotOptimize(sum_piecewise(cs));
}
BENCHMARK(BM_SumPiecewise)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_BruteforceOracle(benchmark::State& state) {
  const ParametricPolytope p = running_example();
  const IntVec s{state.range(0), 2 * state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(count_bruteforce(p, s));
}
BENCHMARK(BM_BruteforceOracle)->RangeMultiplier(4)->Range(4, 64);

BENCHMARK_MAIN();

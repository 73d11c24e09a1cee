#include <benchmark/benchmark.h>

#include "renflow/golden.hpp"
#include "renflow/lax.hpp"

namespace {

using namespace renflow;

void BM_enumerate_forests(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_forests(degree));
  }
}
BENCHMARK(BM_enumerate_forests)->Arg(5)->Arg(7)->Arg(9);

void BM_coproduct_degree6(benchmark::State& state) {
  auto forests = enumerate_forests(6);
  for (auto _ : state) {
    // fresh evaluation through the memo each iteration
    SymbolPoly acc;
    for (const auto& f : forests) {
      for (const auto& [legs, c] : coproduct(f).terms()) acc += c;
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_coproduct_degree6);

void BM_antipode_degree6(benchmark::State& state) {
  auto trees = enumerate_trees(6);
  for (auto _ : state) {
    ForestPolynomial acc;
    for (const auto& t : trees) acc += antipode(t);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_antipode_degree6);

void BM_toy_birkhoff(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  auto trees = enumerate_trees(degree);
  for (auto _ : state) {
    // rebuilt every iteration: measures the full Bogoliubov recursion
    Character phi = toy_character(ToyConfig{degree, 3});
    BirkhoffPair p = birkhoff(phi);
    LaurentSeries acc;
    for (const auto& t : trees) acc += p.minus(t);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_toy_birkhoff)->Arg(3)->Arg(4)->Arg(5);

void BM_exp_log_roundtrip(benchmark::State& state) {
  Character phi = toy_character(ToyConfig{4, 3});
  auto trees = enumerate_trees(4);
  for (auto _ : state) {
    Character back = inf_exp(char_log(phi));
    LaurentSeries acc;
    for (const auto& t : trees) acc += back(t);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_exp_log_roundtrip);

void BM_lax_flow_degree4(benchmark::State& state) {
  Character phi = toy_character(ToyConfig{4, 3});
  InfinitesimalCharacter l0 = r_tilde(phi);
  auto trees = enumerate_trees(4);
  for (auto _ : state) {
    LaxRun run = lax_solve(l0, 0, 0, 4);
    Character phi_t = r_tilde_inv(run.lt);
    LaurentSeries acc;
    for (const auto& t : trees) acc += phi_t(t);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_lax_flow_degree4);

void BM_section8(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reproduce_section8(ToyConfig{}));
  }
}
BENCHMARK(BM_section8);

}  // namespace

BENCHMARK_MAIN();

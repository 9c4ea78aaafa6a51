#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "snac0/certify.hpp"
#include "snac0/constructions.hpp"
#include "snac0/fixtures.hpp"
#include "snac0/generators.hpp"
#include "snac0/petr.hpp"
#include "snac0/refuter.hpp"

namespace {

using namespace snac0;

void bm_validate_ud(benchmark::State& state) {
  const FiniteMetricSpace s =
      SpaceGenerator(GeneratorKind::ud_counterexample).truncate(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_metric(s).ok());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_validate_ud)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void bm_validate_triple(benchmark::State& state) {
  const FiniteMetricSpace s =
      SpaceGenerator(GeneratorKind::triple_cluster).truncate(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_metric(s).ok());
}
BENCHMARK(bm_validate_triple)->Arg(31)->Arg(61);

// Tents on copies of the three-point ud truncation; k tents over 3k points.
FunctionFamily glued_tents(std::size_t k) {
  const FiniteMetricSpace part = SpaceGenerator(GeneratorKind::ud_counterexample).truncate(3);
  const std::vector<FiniteMetricSpace> parts(k, part);
  auto space = std::make_shared<const FiniteMetricSpace>(disjoint_sum(parts, Rational(3)));
  TentSpec spec;
  for (std::size_t c = 0; c < k; ++c) spec.pairs.push_back({3 * c, 3 * c + 1});
  return tent_family(space, spec);
}

void bm_certify_tents(benchmark::State& state) {
  const FunctionFamily family = glued_tents(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_c0(family).index());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_certify_tents)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void bm_attack_generic(benchmark::State& state) {
  const FunctionFamily family = fixtures::violating_spikes();
  for (auto _ : state) benchmark::DoNotOptimize(attack(family, SpaceKind::generic).index());
}
BENCHMARK(bm_attack_generic);

void bm_petr_hierarchical(benchmark::State& state) {
  const FiniteMetricSpace s = fixtures::hierarchical();
  for (auto _ : state) benchmark::DoNotOptimize(petr_extract(s, 2).L.size());
}
BENCHMARK(bm_petr_hierarchical)->Unit(benchmark::kMillisecond);

void bm_case1_select(benchmark::State& state) {
  const SpaceGenerator gen(GeneratorKind::shrinking_satellites);
  for (auto _ : state) {
    benchmark::DoNotOptimize(case1_select(gen, static_cast<std::size_t>(state.range(0))).family.size());
  }
}
BENCHMARK(bm_case1_select)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();

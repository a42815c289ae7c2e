#include "benchmark/benchmark.h"

#include "gwtower/generation.hpp"
#include "gwtower/normal_structure.hpp"
#include "gwtower/simple_groups.hpp"
#include "gwtower/wreath.hpp"

namespace {

using namespace gwt;

void BM_SchreierSimsAlt(benchmark::State& state) {
  auto gens = alt_group(static_cast<std::uint64_t>(state.range(0))).generators();
  for (auto _ : state) {
    ChainOptions opts;
    opts.randomized = true;
    benchmark::DoNotOptimize(PermGroup::from_generators(gens, opts).order());
  }
}
BENCHMARK(BM_SchreierSimsAlt)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SchreierSimsDeterministic(benchmark::State& state) {
  auto gens = psl2_group(static_cast<std::uint64_t>(state.range(0))).generators();
  for (auto _ : state) {
    ChainOptions opts;
    opts.randomized = false;
    benchmark::DoNotOptimize(PermGroup::from_generators(gens, opts).order());
  }
}
BENCHMARK(BM_SchreierSimsDeterministic)->Arg(19)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_ProductActionWreath(benchmark::State& state) {
  auto a = psl2_group(5);
  auto b = state.range(0) == 0 ? alt_group(5) : psl2_group(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(product_action_wreath(a, b).group().order());
  }
}
BENCHMARK(BM_ProductActionWreath)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KernelChain(benchmark::State& state) {
  auto spec = TowerSpec::exponentiation({SimpleGroupId::alt(5), SimpleGroupId::alt(5)});
  for (auto _ : state) benchmark::DoNotOptimize(kernel_chain_check(spec, 1).holds());
}
BENCHMARK(BM_KernelChain)->Unit(benchmark::kMillisecond);

void BM_EulerianPairs(benchmark::State& state) {
  auto g = psl2_group(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_count(g, 2, {}, 1));
}
BENCHMARK(BM_EulerianPairs)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_EulerianChainBackend(benchmark::State& state) {
  auto g = psl2_group(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eulerian_count(g, 2, {}, 1, CountBackend::Chain));
  }
}
BENCHMARK(BM_EulerianChainBackend)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  auto g = alt_group(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generation_probability_mc(g, 2, 100'000, 1, 1).successes);
  }
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

void BM_MinimalNormals(benchmark::State& state) {
  auto g = product_action_wreath(alt_group(5), cyclic_group(2)).group();
  for (auto _ : state) benchmark::DoNotOptimize(minimal_normal_subgroups(g).size());
}
BENCHMARK(BM_MinimalNormals)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

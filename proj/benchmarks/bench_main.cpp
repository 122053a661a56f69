#include <benchmark/benchmark.h>

#include "fgraph/catalog.hpp"
#include "fgraph/constructions.hpp"
#include "fgraph/corpus.hpp"
#include "fgraph/factgraph.hpp"
#include "fgraph/presentation.hpp"
#include "fgraph/theorems.hpp"

using namespace fgraph;

namespace {

GroupTable bench_group(int which) {
  switch (which) {
    case 0: return catalog_group({Family::kAbelianOfType, {2, 2, 2, 2}});
    case 1: return catalog_group({Family::kSymmetric, {4}});
    case 2: return catalog_group({Family::kAlternating, {5}});
    default: return catalog_group({Family::kAbelianOfType, {2, 2, 2, 2, 2}});
  }
}

const char* bench_name(int which) {
  static constexpr const char* kNames[] = {"C2^4", "S4", "A5", "C2^5"};
  return kNames[which];
}

void BM_EnumerateSubgroups(benchmark::State& state) {
  GroupTable g = bench_group(static_cast<int>(state.range(0)));
  state.SetLabel(bench_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g).size());
}
BENCHMARK(BM_EnumerateSubgroups)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  SubgroupLattice lattice = enumerate_subgroups(bench_group(static_cast<int>(state.range(0))));
  state.SetLabel(bench_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(lattice, GraphKind::kFull).size());
}
BENCHMARK(BM_BuildGraph)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CosetEnumerate(benchmark::State& state) {
  const std::vector<CatalogSpec> specs = {{Family::kGeneralizedQuaternion, {16}},
                                          {Family::kG1, {}},
                                          {Family::kK14Family, {4}},
                                          {Family::kSemiDihedral, {64}}};
  const CatalogSpec& spec = specs[static_cast<std::size_t>(state.range(0))];
  Presentation pres = *catalog_presentation(spec);
  state.SetLabel(catalog_name(spec));
  for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate(pres, {}).live_count);
}
BENCHMARK(BM_CosetEnumerate)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_InducedSearch(benchmark::State& state) {
  GroupContext ctx = make_context("C2^5", bench_group(3));
  const Pattern pattern = state.range(0) == 0 ? Pattern::claw() : Pattern::square();
  state.SetLabel(pattern.name);
  for (auto _ : state) benchmark::DoNotOptimize(find_induced(ctx.graph.graph, pattern).has_value());
}
BENCHMARK(BM_InducedSearch)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_ConnectivityCorpus(benchmark::State& state) {
  CorpusConfig config;
  config.max_order = static_cast<std::size_t>(state.range(0));
  config.suite = Suite::kConnectivity;
  config.jobs = 4;
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(config).verdicts.size());
}
BENCHMARK(BM_ConnectivityCorpus)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace
BENCHMARK_MAIN();

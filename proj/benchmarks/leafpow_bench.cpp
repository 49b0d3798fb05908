#include <benchmark/benchmark.h>

#include "leafpow/certificate.hpp"
#include "leafpow/gadget.hpp"
#include "leafpow/generators.hpp"
#include "leafpow/hierarchy.hpp"
#include "leafpow/recognition.hpp"
#include "leafpow/topology.hpp"
#include "leafpow/tree_metric.hpp"

using namespace leafpow;

namespace {

// Filtering the cached catalog down to non-binary trees; the first call
// outside the loop pays for building the catalog.
void BM_EnumerateTopologies(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  enumerate_topologies(n);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(n, n - 3));
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_FourPointSweep(benchmark::State& state) {
  Rng rng(1);
  const DistanceMatrix m = leaf_distance_matrix(random_tree(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(four_point_sweep(m));
}
BENCHMARK(BM_FourPointSweep)->RangeMultiplier(2)->Range(4, 16);

void BM_Integerize(benchmark::State& state) {
  Rng rng(2);
  const GlpCertificate c = random_certificate(rng, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(integerize_certificate(c));
}
BENCHMARK(BM_Integerize)->DenseRange(3, 8);

void BM_RecognizeRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = static_cast<std::size_t>(state.range(1));
  Rng rng(3);
  std::vector<SimpleGraph> graphs;
  for (int i = 0; i < 8; ++i) graphs.push_back(random_graph(rng, n));
  std::size_t next = 0;
  for (auto _ : state) benchmark::DoNotOptimize(recognize_glp(graphs[next++ % graphs.size()], q));
}
BENCHMARK(BM_RecognizeRandom)->ArgsProduct({{5, 6, 7}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_RecognizeNonMember(benchmark::State& state) {
  const SimpleGraph g = non_glp_family(2);
  RecognitionOptions options;
  options.use_symmetry = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(recognize_glp(g, 2, options));
}
BENCHMARK(BM_RecognizeNonMember)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LeafRootConstruction(benchmark::State& state) {
  Rng rng(4);
  const auto [toc, tree] = random_realizable_toc(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(leaf_root_from_tree(tree, toc));
}
BENCHMARK(BM_LeafRootConstruction)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_TocRealizability(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<TocInstance> orders;
  for (int i = 0; i < 8; ++i) orders.push_back(random_toc(rng, n));
  std::size_t next = 0;
  for (auto _ : state) benchmark::DoNotOptimize(toc_realizability_small(orders[next++ % orders.size()]));
}
BENCHMARK(BM_TocRealizability)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <vector>

#include "ndcolor/covering_ilp.h"
#include "ndcolor/mis.h"
#include "ndcolor/nd_decomposition.h"
#include "ndcolor/pipeline.h"
#include "ndcolor/solver.h"
#include "ndcolor/testkit/generators.h"
#include "ndcolor/type_graph.h"

namespace bm = benchmark;
using namespace ndcolor;

namespace {

// C7 of cliques with four light classes, plus six independent classes hung
// off the light ones; weights scale with n.
TypeGraph scaled_shape(int64_t n) {
  std::vector<int64_t> weights(13);
  std::vector<bool> loops(13, false);
  std::vector<Edge> edges;
  for (int v = 0; v < 7; ++v) {
    weights[v] = v % 2 == 0 && v < 6 ? n / 100 : n / 500;
    loops[v] = true;
    edges.emplace_back(std::min(v, (v + 1) % 7), std::max(v, (v + 1) % 7));
  }
  const std::vector<std::vector<int>> attach = {{1}, {3}, {5}, {6}, {1, 3}, {5, 6}};
  int64_t rest = n;
  for (int v = 0; v < 7; ++v) rest -= weights[v];
  for (int c = 0; c < 6; ++c) {
    weights[7 + c] = rest / 6 + (c < rest % 6 ? 1 : 0);
    for (const int v : attach[c]) edges.emplace_back(v, 7 + c);
  }
  return TypeGraph(weights, loops, edges);
}

TypeGraph random_type_graph(int k, uint64_t seed) {
  testkit::Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (rng.bernoulli(0.5)) edges.emplace_back(i, j);
    }
  }
  return TypeGraph(std::vector<int64_t>(k, 3), std::vector<bool>(k, true),
                   edges);
}

}  // namespace

static void BM_ColorGraph(bm::State& st) {
  const Graph g = blow_up(scaled_shape(st.range(0))).graph;
  for (auto _ : st) {
    bm::DoNotOptimize(color_graph(g).chi());
  }
  st.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_ColorGraph)->RangeMultiplier(10)->Range(1000, 100000)
    ->Unit(bm::kMillisecond);

static void BM_ColorTypeGraph(bm::State& st) {
  const TypeGraph t = scaled_shape(st.range(0));
  for (auto _ : st) {
    bm::DoNotOptimize(color_type_graph(t).chi());
  }
}
BENCHMARK(BM_ColorTypeGraph)->RangeMultiplier(100)->Range(1000, 10000000)
    ->Unit(bm::kMillisecond);

static void BM_SolveIlp(bm::State& st) {
  const TypeGraph t = scaled_shape(st.range(0));
  const CoveringIlp p = build_coloring_ilp(t, enumerate_mis(t));
  for (auto _ : st) {
    bm::DoNotOptimize(solve_covering_ilp(p).objective_value);
  }
}
BENCHMARK(BM_SolveIlp)->RangeMultiplier(100)->Range(1000, 10000000)
    ->Unit(bm::kMicrosecond);

static void BM_Decompose(bm::State& st) {
  const Graph g = blow_up(scaled_shape(st.range(0))).graph;
  for (auto _ : st) {
    bm::DoNotOptimize(compute_nd_decomposition(g).size());
  }
}
BENCHMARK(BM_Decompose)->RangeMultiplier(10)->Range(1000, 100000)
    ->Unit(bm::kMillisecond);

static void BM_EnumerateMis(bm::State& st) {
  const TypeGraph t = random_type_graph(static_cast<int>(st.range(0)), 7);
  for (auto _ : st) {
    bm::DoNotOptimize(enumerate_mis(t).size());
  }
}
BENCHMARK(BM_EnumerateMis)->DenseRange(10, 25, 5)->Unit(bm::kMicrosecond);

BENCHMARK_MAIN();

#include "ndcolor/nd_decomposition.h"

#include <gtest/gtest.h>

#include <vector>

#include "ndcolor/errors.h"
#include "ndcolor/testkit/generators.h"
#include "ndcolor/testkit/oracles.h"
#include "ndcolor/type_graph.h"
#include "test_util.h"

namespace ndcolor {
namespace {

using testkit::Rng;

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// Split graph K3 join I4: vertices 0..2 form the clique.
Graph split_graph() {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
  for (int c = 0; c < 3; ++c) {
    for (int i = 3; i < 7; ++i) edges.emplace_back(c, i);
  }
  return Graph(7, edges);
}

TEST(NdDecompositionTest, CompleteGraphIsOneClique) {
  const auto dec = compute_nd_decomposition(complete_graph(5));
  ASSERT_EQ(dec.size(), 1);
  EXPECT_EQ(dec.classes[0], (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(dec.kinds[0], ClassKind::kClique);
}

TEST(NdDecompositionTest, SevenCycleIsAllSingletons) {
  const auto dec = compute_nd_decomposition(cycle_graph(7));
  ASSERT_EQ(dec.size(), 7);
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(dec.classes[i], std::vector<int>{i});
    EXPECT_EQ(dec.kinds[i], ClassKind::kClique);
  }
  EXPECT_EQ(testing::as_partition(dec),
            testing::as_partition(testkit::oracle_nd(cycle_graph(7))));
}

TEST(NdDecompositionTest, CompleteBipartiteSidesAreIndependent) {
  const auto dec = compute_nd_decomposition(complete_bipartite_graph(3, 3));
  ASSERT_EQ(dec.size(), 2);
  EXPECT_EQ(dec.classes[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(dec.classes[1], (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(dec.kinds[0], ClassKind::kIndependentSet);
  EXPECT_EQ(dec.kinds[1], ClassKind::kIndependentSet);
}

TEST(NdDecompositionTest, PathOnFourVerticesHasNoTwins) {
  const auto dec = compute_nd_decomposition(path_graph(4));
  EXPECT_EQ(dec.size(), 4);
  EXPECT_EQ(testkit::oracle_nd(path_graph(4)).size(), 4);
}

TEST(NdDecompositionTest, EmptyGraphs) {
  EXPECT_EQ(compute_nd_decomposition(empty_graph(0)).size(), 0);
  const auto dec = compute_nd_decomposition(empty_graph(4));
  ASSERT_EQ(dec.size(), 1);
  EXPECT_EQ(dec.kinds[0], ClassKind::kIndependentSet);
}

TEST(NdDecompositionTest, KUniform) {
  EXPECT_TRUE(is_k_uniform(compute_nd_decomposition(cycle_graph(7))));
  EXPECT_FALSE(
      is_k_uniform(compute_nd_decomposition(complete_bipartite_graph(3, 3))));
  EXPECT_TRUE(is_k_uniform(compute_nd_decomposition(complete_graph(5))));
}

TEST(NdDecompositionTest, MatchesPairwiseOracle) {
  Rng rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform(0, 29));
    Graph g = random_graph(rng, n, rng.unit());
    if (trial % 2 == 0) {
      // Blow-ups have many twins; plain random graphs mostly have none.
      testkit::GeneratorSpec spec =
          testkit::default_spec(testkit::GeneratorKind::kBlowUpRandom, trial);
      g = testkit::generate(spec).graph;
    }
    const auto dec = compute_nd_decomposition(g);
    EXPECT_EQ(testing::as_partition(dec),
              testing::as_partition(testkit::oracle_nd(g)))
        << "trial " << trial;
    EXPECT_NO_THROW(validate_decomposition(g, dec));
    for (int i = 1; i < dec.size(); ++i) {
      EXPECT_LT(dec.classes[i - 1][0], dec.classes[i][0]);
    }
  }
}

TEST(NdDecompositionTest, ValidateRejectsBadPartitions) {
  const Graph p4 = path_graph(4);
  NdDecomposition merged;
  merged.classes = {{0, 1}, {2}, {3}};
  merged.kinds = {ClassKind::kClique, ClassKind::kClique, ClassKind::kClique};
  EXPECT_THROW(validate_decomposition(p4, merged), ValidationError);

  NdDecomposition wrong_kind = compute_nd_decomposition(complete_graph(3));
  wrong_kind.kinds[0] = ClassKind::kIndependentSet;
  EXPECT_THROW(validate_decomposition(complete_graph(3), wrong_kind),
               ValidationError);

  NdDecomposition missing;
  missing.classes = {{0}, {1}, {2}};
  missing.kinds = {ClassKind::kClique, ClassKind::kClique, ClassKind::kClique};
  EXPECT_THROW(validate_decomposition(p4, missing), ValidationError);
}

TEST(TypeGraphTest, CompleteGraph) {
  const Graph k5 = complete_graph(5);
  const TypeGraph t = build_type_graph(k5, compute_nd_decomposition(k5));
  EXPECT_EQ(t, TypeGraph({5}, {true}, {}));
}

TEST(TypeGraphTest, CompleteBipartite) {
  const Graph k33 = complete_bipartite_graph(3, 3);
  const TypeGraph t = build_type_graph(k33, compute_nd_decomposition(k33));
  EXPECT_EQ(t, TypeGraph({3, 3}, {false, false}, {{0, 1}}));
}

TEST(TypeGraphTest, SevenCycleMirrorsItself) {
  const Graph c7 = cycle_graph(7);
  const TypeGraph t = build_type_graph(c7, compute_nd_decomposition(c7));
  ASSERT_EQ(t.size(), 7);
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(t.weight(i), 1);
    EXPECT_TRUE(t.has_loop(i));
  }
  EXPECT_EQ(t.edges(), c7.edges());
}

TEST(TypeGraphTest, RejectsMixedBlock) {
  // In P4 the block between {0,2} and {3} is half joined.
  const Graph p4 = path_graph(4);
  NdDecomposition dec;
  dec.classes = {{0, 2}, {1}, {3}};
  dec.kinds = {ClassKind::kIndependentSet, ClassKind::kClique,
               ClassKind::kClique};
  EXPECT_THROW(build_type_graph(p4, dec), ValidationError);
}

TEST(TypeGraphTest, ConstructorValidation) {
  EXPECT_THROW(TypeGraph({0}, {true}, {}), ValidationError);
  EXPECT_THROW(TypeGraph({1, 1}, {true, true}, {{0, 2}}), ValidationError);
  EXPECT_THROW(TypeGraph({1, 1}, {true, true}, {{1, 1}}), ValidationError);
  const TypeGraph forced({1}, {false}, {});
  EXPECT_TRUE(forced.has_loop(0));
}

TEST(BlowUpTest, Examples) {
  EXPECT_EQ(blow_up(TypeGraph({5}, {true}, {})).graph, complete_graph(5));
  EXPECT_EQ(blow_up(TypeGraph({3, 4}, {true, false}, {{0, 1}})).graph,
            split_graph());
  const TypeGraph c7(std::vector<int64_t>(7, 1), std::vector<bool>(7, true),
                     cycle_graph(7).edges());
  EXPECT_EQ(blow_up(c7).graph, cycle_graph(7));
}

TEST(BlowUpTest, DecompositionIsConsecutiveRanges) {
  const TypeGraph t({2, 3}, {true, false}, {});
  const BlowUp b = blow_up(t);
  EXPECT_EQ(b.decomposition, implicit_decomposition(t));
  EXPECT_EQ(b.decomposition.classes[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(b.decomposition.classes[1], (std::vector<int>{2, 3, 4}));
  EXPECT_NO_THROW(validate_decomposition(b.graph, b.decomposition));
}

TEST(BlowUpTest, RoundTripWithoutMergeablePairs) {
  Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng.uniform(0, 7));
    std::vector<int64_t> weights(k);
    std::vector<bool> loops(k);
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
      weights[i] = rng.uniform(1, 4);
      loops[i] = rng.bernoulli(0.5);
      for (int j = i + 1; j < k; ++j) {
        if (rng.bernoulli(0.5)) edges.emplace_back(i, j);
      }
    }
    const TypeGraph t(weights, loops, edges);
    const BlowUp b = blow_up(t);
    const auto dec = compute_nd_decomposition(b.graph);
    if (has_mergeable_pair(t)) {
      EXPECT_LT(dec.size(), t.size());
      continue;
    }
    ++checked;
    EXPECT_EQ(dec, b.decomposition);
    EXPECT_EQ(build_type_graph(b.graph, dec), t);
  }
  EXPECT_GT(checked, 50);
}

TEST(BlowUpTest, MergeablePairExample) {
  const TypeGraph t({2, 2}, {false, false}, {});
  EXPECT_TRUE(has_mergeable_pair(t));
  EXPECT_EQ(compute_nd_decomposition(blow_up(t).graph).size(), 1);
}

TEST(TypeGraphFormatTest, WriteAndParse) {
  const TypeGraph t({3, 4}, {true, false}, {{0, 1}});
  const std::string text = write_type_graph(t);
  EXPECT_EQ(text, "t 2\nw 3 4\nl 1\ne 1 2\n");
  EXPECT_EQ(parse_type_graph(text), t);
  EXPECT_EQ(parse_type_graph("c comment\nt 1\nw 5\nl 1\n"),
            TypeGraph({5}, {true}, {}));
  EXPECT_THROW(parse_type_graph("t 2\nw 1\n"), ParseError);
  EXPECT_THROW(parse_type_graph("t 2\nw 1 1\ne 1 3\n"), Error);
  EXPECT_THROW(parse_type_graph("w 1 1\n"), ParseError);
}

TEST(TypeGraphFormatTest, EncodingStaysSmallForLargeWeights) {
  const TypeGraph t({100000, 1}, {false, true}, {{0, 1}});
  EXPECT_LT(write_type_graph(t).size(), 40u);
  EXPECT_EQ(blow_up(t).graph.num_vertices(), 100001);
}

}  // namespace
}  // namespace ndcolor

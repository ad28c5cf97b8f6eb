#include "ndcolor/pipeline.h"

#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <vector>

#include "ndcolor/errors.h"
#include "ndcolor/testkit/generators.h"
#include "ndcolor/testkit/oracles.h"

namespace ndcolor {
namespace {

using testkit::GeneratorKind;
using testkit::Rng;

Graph split_graph() {
  return blow_up(TypeGraph({3, 4}, {true, false}, {{0, 1}})).graph;
}

int64_t sum(const std::vector<int64_t>& x) {
  return std::accumulate(x.begin(), x.end(), int64_t{0});
}

int distinct_colors(const Coloring& c) {
  return static_cast<int>(std::set<int>(c.color.begin(), c.color.end()).size());
}

void expect_pipeline_invariants(const Graph& g, const PipelineResult& r) {
  EXPECT_TRUE(verify_coloring(g, r.coloring));
  EXPECT_EQ(canonicity_violation(r.decomposition, r.coloring), "");
  EXPECT_EQ(r.chi(), r.solution.objective_value);
  EXPECT_EQ(distinct_colors(r.coloring), r.chi());
  ASSERT_EQ(static_cast<int>(r.coloring.color.size()), g.num_vertices());
  for (const int c : r.coloring.color) EXPECT_GE(c, 1);
  const auto x = canonical_solution_from_coloring(g, r.decomposition, r.family,
                                                  r.coloring);
  EXPECT_TRUE(r.ilp.is_feasible(x));
  EXPECT_EQ(sum(x), r.solution.objective_value);
}

TEST(ReconstructTest, CompleteGraph) {
  const Graph k5 = complete_graph(5);
  const auto dec = compute_nd_decomposition(k5);
  const MisFamily fam{1, {{0}}};
  const Coloring c = reconstruct_coloring(dec, fam, {5});
  EXPECT_EQ(c.color, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(c.num_colors, 5);
}

TEST(ReconstructTest, SevenCycle) {
  const Graph c7 = cycle_graph(7);
  const auto dec = compute_nd_decomposition(c7);
  const TypeGraph t = build_type_graph(c7, dec);
  const MisFamily fam = enumerate_mis(t);
  const IlpSolution sol = solve_covering_ilp(build_coloring_ilp(t, fam));
  ASSERT_EQ(sol.objective_value, 3);
  const Coloring c = reconstruct_coloring(c7, dec, fam, sol);
  EXPECT_EQ(c.num_colors, 3);
  EXPECT_TRUE(verify_coloring(c7, c));
  EXPECT_EQ(testkit::oracle_chromatic(c7), 3);
}

TEST(ReconstructTest, SplitGraph) {
  const Graph g = split_graph();
  const auto dec = compute_nd_decomposition(g);
  const MisFamily fam{2, {{0}, {1}}};
  const Coloring c = reconstruct_coloring(dec, fam, {3, 1});
  EXPECT_EQ(c.color, (std::vector<int>{1, 2, 3, 4, 4, 4, 4}));
  EXPECT_EQ(c.num_colors, 4);
}

TEST(ReconstructTest, OvercoverSkipsEmptyRepetitions) {
  const Graph g = split_graph();
  const auto dec = compute_nd_decomposition(g);
  const MisFamily fam{2, {{0}, {1}}};
  const Coloring c = reconstruct_coloring(dec, fam, {5, 3});
  EXPECT_EQ(c.num_colors, 4);
  EXPECT_TRUE(verify_coloring(g, c));
}

TEST(ReconstructTest, InfeasibleSolutionIsRejected) {
  const Graph g = split_graph();
  const auto dec = compute_nd_decomposition(g);
  const MisFamily fam{2, {{0}, {1}}};
  EXPECT_THROW(reconstruct_coloring(dec, fam, {2, 1}), PreconditionError);
  EXPECT_THROW(reconstruct_coloring(dec, fam, {3}), PreconditionError);
}

TEST(ChromaticTest, Examples) {
  EXPECT_EQ(chromatic_number(cycle_graph(7)).chi, 3);
  EXPECT_EQ(chromatic_number(complete_graph(5)).chi, 5);
  EXPECT_EQ(chromatic_number(empty_graph(4)).chi, 1);
  EXPECT_EQ(chromatic_number(complete_bipartite_graph(3, 3)).chi, 2);
  EXPECT_EQ(chromatic_number(petersen_graph()).chi, 3);
  EXPECT_EQ(chromatic_number(empty_graph(0)).chi, 0);
}

TEST(VerifyTest, Examples) {
  const Graph k2 = complete_graph(2);
  const ColoringCheck bad = verify_coloring(k2, Coloring{{1, 1}, 1});
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.conflict, Edge(0, 1));
  EXPECT_TRUE(verify_coloring(k2, Coloring{{1, 2}, 2}));
  const ColoringCheck unused = verify_coloring(k2, Coloring{{1, 3}, 3});
  EXPECT_FALSE(unused);
  EXPECT_EQ(unused.unused_color, 2);
  EXPECT_THROW(verify_coloring(k2, Coloring{{1, 0}, 1}), ValidationError);
  EXPECT_THROW(verify_coloring(k2, Coloring{{1}, 1}), ValidationError);
  EXPECT_TRUE(verify_coloring(cycle_graph(7),
                              chromatic_number(cycle_graph(7)).coloring));
}

TEST(VerifyTest, TypeGraphAgreesWithExplicitGraph) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = testkit::default_spec(GeneratorKind::kBlowUpRandom, trial);
    const auto inst = testkit::generate(spec);
    const Graph& g = inst.graph;
    Coloring c;
    c.num_colors = static_cast<int>(rng.uniform(1, 6));
    for (int v = 0; v < g.num_vertices(); ++v) {
      c.color.push_back(static_cast<int>(rng.uniform(1, c.num_colors)));
    }
    EXPECT_EQ(verify_coloring(g, c).ok, verify_coloring(*inst.type_graph, c).ok);
  }
}

TEST(CanonicalSolutionTest, Examples) {
  const Graph k5 = complete_graph(5);
  const auto r5 = color_graph(k5);
  EXPECT_EQ(canonical_solution_from_coloring(k5, r5.decomposition, r5.family,
                                             r5.coloring),
            std::vector<int64_t>{5});

  const Graph c7 = cycle_graph(7);
  const auto r7 = color_graph(c7);
  const auto x7 = canonical_solution_from_coloring(c7, r7.decomposition,
                                                   r7.family, r7.coloring);
  EXPECT_TRUE(r7.ilp.is_feasible(x7));
  EXPECT_EQ(sum(x7), 3);

  const Graph s = split_graph();
  const auto rs = color_graph(s);
  const auto xs = canonical_solution_from_coloring(s, rs.decomposition,
                                                   rs.family, rs.coloring);
  EXPECT_EQ(xs, (std::vector<int64_t>{3, 1}));
}

TEST(CanonicalSolutionTest, NonCanonicalColoringIsRejected) {
  const Graph s = split_graph();
  const auto dec = compute_nd_decomposition(s);
  const MisFamily fam = enumerate_mis(build_type_graph(s, dec));
  // Proper, but the independent class uses two colors.
  const Coloring split_indep{{1, 2, 3, 4, 4, 5, 5}, 5};
  ASSERT_TRUE(verify_coloring(s, split_indep));
  EXPECT_NE(canonicity_violation(dec, split_indep), "");
  EXPECT_THROW(canonical_solution_from_coloring(s, dec, fam, split_indep),
               ValidationError);
  // Improper: two clique vertices share a color.
  const Coloring clash{{1, 1, 2, 3, 3, 3, 3}, 3};
  EXPECT_THROW(canonical_solution_from_coloring(s, dec, fam, clash),
               ValidationError);
}

TEST(PipelineTest, OptimalOnSmallRandomGraphs) {
  Rng rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform(0, 9));
    auto spec = testkit::default_spec(GeneratorKind::kRandomGnp, trial);
    spec.n = n;
    spec.p = 0.1 * static_cast<double>(rng.uniform(1, 9));
    const Graph g = testkit::generate(spec).graph;
    const PipelineResult r = color_graph(g);
    EXPECT_EQ(r.chi(), testkit::oracle_chromatic(g)) << "trial " << trial;
    expect_pipeline_invariants(g, r);
  }
}

TEST(PipelineTest, OptimalOnSmallBlowUps) {
  int checked = 0;
  for (uint64_t seed = 0; checked < 200; ++seed) {
    auto spec = testkit::default_spec(GeneratorKind::kBlowUpRandom, seed);
    spec.k_max = 7;
    spec.w_max = 4;
    const auto inst = testkit::generate(spec);
    if (inst.graph.num_vertices() > 18) continue;
    ++checked;
    const PipelineResult r = color_graph(inst.graph);
    EXPECT_EQ(r.chi(), testkit::oracle_chromatic(inst.graph)) << "seed " << seed;
    expect_pipeline_invariants(inst.graph, r);
  }
}

TEST(PipelineTest, FromTypeGraphMatchesExplicitGraph) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = testkit::generate(
        testkit::default_spec(GeneratorKind::kBlowUpRandom, seed));
    const PipelineResult from_graph = color_graph(inst.graph);
    const PipelineResult from_type = color_type_graph(*inst.type_graph);
    EXPECT_EQ(from_graph.chi(), from_type.chi());
    EXPECT_TRUE(verify_coloring(*inst.type_graph, from_type.coloring));
    EXPECT_TRUE(verify_coloring(inst.graph, from_type.coloring));
  }
}

TEST(PipelineTest, LargeWeightsOnTypeGraph) {
  // C7 of cliques with 10^6 vertices each: chi = ceil(7w/3) for w % 3 == 0.
  const int64_t w = 999999;
  const TypeGraph t(std::vector<int64_t>(7, w), std::vector<bool>(7, true),
                    cycle_graph(7).edges());
  const PipelineResult r = color_type_graph(t);
  EXPECT_EQ(r.chi(), 7 * w / 3);
  EXPECT_TRUE(verify_coloring(t, r.coloring));
}

TEST(PipelineTest, BudgetPropagates) {
  EXPECT_THROW(color_graph(cycle_graph(7), SolverOptions{.node_budget = 0}),
               BudgetExceeded);
}

TEST(ColoringFormatTest, RoundTrip) {
  const Coloring c{{1, 2, 1}, 2};
  const std::string text = write_coloring(c);
  EXPECT_EQ(text, "s 2\nv 1 1\nv 2 2\nv 3 1\n");
  EXPECT_EQ(parse_coloring(text), c);
  EXPECT_THROW(parse_coloring("s 1\nv 1 1\nv 1 1\n"), ParseError);
  // A vertex missing from the listing stays uncolored; verify rejects it.
  EXPECT_EQ(parse_coloring("s 2\nv 2 1\n").color, (std::vector<int>{0, 1}));
  EXPECT_THROW(parse_coloring("v 1 1\n"), ParseError);
}

}  // namespace
}  // namespace ndcolor

#ifndef NDCOLOR_PIPELINE_H_
#define NDCOLOR_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ndcolor/coloring.h"
#include "ndcolor/covering_ilp.h"
#include "ndcolor/graph.h"
#include "ndcolor/mis.h"
#include "ndcolor/nd_decomposition.h"
#include "ndcolor/solver.h"
#include "ndcolor/type_graph.h"

namespace ndcolor {

// Replays an ILP solution into a canonical coloring. For each family member I
// (in order), x_I times: keep the classes of I with residual demand, take the
// lowest uncolored vertex of each such clique class and all remaining
// vertices of each such independent class, and give them the next color.
// Repetitions that find nothing left to color consume no color.
// Throws PreconditionError if `x` violates the covering constraints.
Coloring reconstruct_coloring(const NdDecomposition& dec,
                              const MisFamily& family,
                              const std::vector<int64_t>& x);
Coloring reconstruct_coloring(const Graph& g, const NdDecomposition& dec,
                              const MisFamily& family,
                              const IlpSolution& solution);

// Converse direction: every canonical coloring yields a feasible x with
// sum(x) = num_colors. Each color class increments the lexicographically
// first family member dominating the type set it touches. Throws
// ValidationError when `c` is not canonical for `dec`.
std::vector<int64_t> canonical_solution_from_coloring(
    const Graph& g, const NdDecomposition& dec, const MisFamily& family,
    const Coloring& c);

// Checks the two canonicity clauses: each color meets each clique class at
// most once and each independent class is monochromatic. Returns an empty
// string when canonical, otherwise a description of the first violation.
std::string canonicity_violation(const NdDecomposition& dec,
                                 const Coloring& c);

struct StageTimings {
  double decompose = 0;
  double type_graph = 0;
  double enumerate = 0;
  double build_ilp = 0;
  double solve = 0;
  double reconstruct = 0;
};

struct PipelineResult {
  NdDecomposition decomposition;
  TypeGraph type_graph;
  MisFamily family;
  CoveringIlp ilp;
  IlpSolution solution;
  Coloring coloring;
  StageTimings timings;  // seconds

  int chi() const { return coloring.num_colors; }
};

// decomposition -> type graph -> MIS family -> ILP -> solve -> coloring.
PipelineResult color_graph(const Graph& g, const SolverOptions& options = {});

// Same, starting from a given type graph; the coloring is over the blow-up
// vertices in implicit_decomposition numbering.
PipelineResult color_type_graph(const TypeGraph& t,
                                const SolverOptions& options = {});

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};
ChromaticResult chromatic_number(const Graph& g,
                                 const SolverOptions& options = {});

}  // namespace ndcolor

#endif  // NDCOLOR_PIPELINE_H_

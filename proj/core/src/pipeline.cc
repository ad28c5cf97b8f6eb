#include "ndcolor/pipeline.h"

#include <algorithm>
#include <chrono>
#include <string>

#include "ndcolor/errors.h"

namespace ndcolor {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Covering demand of class i: its size for cliques, 1 for independent sets.
int64_t demand(const NdDecomposition& dec, int i) {
  return dec.kinds[i] == ClassKind::kClique
             ? static_cast<int64_t>(dec.classes[i].size())
             : 1;
}

void check_family(const NdDecomposition& dec, const MisFamily& family) {
  if (family.k != dec.size()) {
    throw PreconditionError("family is over " + std::to_string(family.k) +
                            " type vertices, decomposition has " +
                            std::to_string(dec.size()) + " classes");
  }
}

}  // namespace

Coloring reconstruct_coloring(const NdDecomposition& dec,
                              const MisFamily& family,
                              const std::vector<int64_t>& x) {
  check_family(dec, family);
  const int k = dec.size();
  if (static_cast<int>(x.size()) != family.size()) {
    throw PreconditionError("solution has " + std::to_string(x.size()) +
                            " entries for " + std::to_string(family.size()) +
                            " family members");
  }
  std::vector<int64_t> covered(k, 0);
  for (int j = 0; j < family.size(); ++j) {
    if (x[j] < 0) throw PreconditionError("negative solution entry");
    for (const int i : family.sets[j]) covered[i] += x[j];
  }
  for (int i = 0; i < k; ++i) {
    if (covered[i] < demand(dec, i)) {
      throw PreconditionError(
          "solution violates the covering constraint of class " +
          std::to_string(i + 1) + " (" + std::to_string(covered[i]) + " < " +
          std::to_string(demand(dec, i)) + ")");
    }
  }

  Coloring c;
  c.color.assign(dec.num_vertices(), 0);
  // residual[i]: vertices of class i still uncolored; cliques hand them out
  // lowest index first, so next[i] = size - residual[i].
  std::vector<int64_t> residual(k);
  for (int i = 0; i < k; ++i) residual[i] = dec.classes[i].size();
  std::vector<int> active;
  for (int j = 0; j < family.size(); ++j) {
    for (int64_t rep = 0; rep < x[j]; ++rep) {
      active.clear();
      for (const int i : family.sets[j]) {
        if (residual[i] >= 1) active.push_back(i);
      }
      if (active.empty()) {
        // Pure overcover: every class of this set is already colored.
        break;
      }
      const int color = ++c.num_colors;
      for (const int i : active) {
        const auto& members = dec.classes[i];
        if (dec.kinds[i] == ClassKind::kClique) {
          c.color[members[members.size() - residual[i]]] = color;
          --residual[i];
        } else {
          for (const int v : members) c.color[v] = color;
          residual[i] = 0;
        }
      }
    }
  }
  return c;
}

Coloring reconstruct_coloring(const Graph& g, const NdDecomposition& dec,
                              const MisFamily& family,
                              const IlpSolution& solution) {
  if (dec.num_vertices() != g.num_vertices()) {
    throw PreconditionError("decomposition does not cover the graph");
  }
  return reconstruct_coloring(dec, family, solution.x);
}

std::string canonicity_violation(const NdDecomposition& dec,
                                 const Coloring& c) {
  std::vector<int> seen(c.num_colors + 1, -1);
  for (int i = 0; i < dec.size(); ++i) {
    const auto& members = dec.classes[i];
    if (dec.kinds[i] == ClassKind::kClique) {
      for (const int v : members) {
        if (seen[c.color[v]] == i) {
          return "color " + std::to_string(c.color[v]) +
                 " meets clique class " + std::to_string(i + 1) +
                 " more than once";
        }
        seen[c.color[v]] = i;
      }
    } else {
      for (const int v : members) {
        if (c.color[v] != c.color[members.front()]) {
          return "independent class " + std::to_string(i + 1) +
                 " is not monochromatic";
        }
      }
    }
  }
  return "";
}

std::vector<int64_t> canonical_solution_from_coloring(
    const Graph& g, const NdDecomposition& dec, const MisFamily& family,
    const Coloring& c) {
  check_family(dec, family);
  if (!verify_coloring(g, c)) {
    throw ValidationError("coloring is not proper and surjective");
  }
  if (dec.num_vertices() != g.num_vertices()) {
    throw PreconditionError("decomposition does not cover the graph");
  }
  if (const std::string why = canonicity_violation(dec, c); !why.empty()) {
    throw ValidationError("coloring is not canonical: " + why);
  }
  // Type set touched by each color class.
  const std::vector<int> class_of = dec.class_of();
  std::vector<TypeSet> touched(c.num_colors + 1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    TypeSet& set = touched[c.color[v]];
    if (set.empty() || set.back() != class_of[v]) set.push_back(class_of[v]);
  }
  std::vector<int64_t> x(family.size(), 0);
  for (int color = 1; color <= c.num_colors; ++color) {
    TypeSet& set = touched[color];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    const TypeSet induced = induces(set);
    int chosen = -1;
    for (int j = 0; j < family.size(); ++j) {
      if (dominates(family.sets[j], induced)) {
        chosen = j;
        break;
      }
    }
    if (chosen == -1) {
      throw ValidationError("color " + std::to_string(color) +
                            " touches a type set no family member dominates");
    }
    ++x[chosen];
  }
  return x;
}

namespace {

// Shared tail of both entry points: everything after the decomposition.
void solve_stages(const SolverOptions& options, PipelineResult& result) {
  const TypeGraph& t = result.type_graph;
  if (t.size() == 0) return;

  auto start = Clock::now();
  result.family = enumerate_mis(t);
  result.timings.enumerate = seconds_since(start);

  start = Clock::now();
  result.ilp = build_coloring_ilp(t, result.family);
  result.timings.build_ilp = seconds_since(start);

  start = Clock::now();
  result.solution = solve_covering_ilp(result.ilp, options);
  result.timings.solve = seconds_since(start);

  start = Clock::now();
  result.coloring = reconstruct_coloring(result.decomposition, result.family,
                                         result.solution.x);
  result.timings.reconstruct = seconds_since(start);
}

}  // namespace

PipelineResult color_type_graph(const TypeGraph& t,
                                const SolverOptions& options) {
  PipelineResult result;
  const auto start = Clock::now();
  result.decomposition = implicit_decomposition(t);
  result.type_graph = t;
  result.timings.type_graph = seconds_since(start);
  solve_stages(options, result);
  return result;
}

PipelineResult color_graph(const Graph& g, const SolverOptions& options) {
  PipelineResult result;
  auto start = Clock::now();
  result.decomposition = compute_nd_decomposition(g);
  result.timings.decompose = seconds_since(start);

  start = Clock::now();
  result.type_graph = build_type_graph(g, result.decomposition);
  result.timings.type_graph = seconds_since(start);

  solve_stages(options, result);
  return result;
}

ChromaticResult chromatic_number(const Graph& g,
                                 const SolverOptions& options) {
  PipelineResult result = color_graph(g, options);
  return {result.chi(), std::move(result.coloring)};
}

}  // namespace ndcolor

#ifndef NDCOLOR_SOLVER_H_
#define NDCOLOR_SOLVER_H_

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ndcolor/covering_ilp.h"

namespace ndcolor {

struct SolverOptions {
  // Branch-and-bound nodes (LP solves) allowed before BudgetExceeded.
  int64_t node_budget = 1'000'000;
};

struct IlpSolution {
  std::vector<int64_t> x;
  int64_t objective_value = 0;
  // Proven lower bound; equals objective_value on every returned solution.
  int64_t lower_bound = 0;
  // Exact optimum of the LP relaxation at the root.
  mpq_class root_lp_value;
  int64_t nodes = 0;
};

// Exact LP relaxation of a covering ILP (rational dual simplex).
struct LpSolution {
  std::vector<mpq_class> x;
  mpq_class value;
};
LpSolution solve_lp_relaxation(const CoveringIlp& p);

// Greedy multi-cover: repeatedly raise the column that covers the most rows
// with unmet demand (lowest index on ties). Always feasible for valid input.
std::vector<int64_t> greedy_cover(const CoveringIlp& p);

// Proven-optimal integral solution. Strategy: greedy and LP-saturation
// incumbents, then depth-first branch and bound on LP bounds (up branch
// first). Throws BudgetExceeded when the node budget runs out.
IlpSolution solve_covering_ilp(const CoveringIlp& p,
                               const SolverOptions& options = {});

}  // namespace ndcolor

#endif  // NDCOLOR_SOLVER_H_

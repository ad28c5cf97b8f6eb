#include "ndcolor/solver.h"

#include <algorithm>
#include <limits>
#include <string>

#include "ndcolor/errors.h"

namespace ndcolor {
namespace {

constexpr int64_t kUnbounded = std::numeric_limits<int64_t>::max();

int64_t floor_of(const mpq_class& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

int64_t ceil_of(const mpq_class& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

mpq_class to_mpq(int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return mpq_class(z);
}

// Bounded dual simplex over exact rationals for
//   min sum_j x_j  s.t.  A x - s = b,  lower <= x <= upper,  s >= 0.
// The all-surplus basis is dual feasible (every cost is nonnegative), so no
// phase one is needed. Leaving and entering choices follow Bland-style
// smallest-index tie breaking, which rules out cycling.
class DualSimplex {
 public:
  DualSimplex(const std::vector<std::vector<int>>& columns, int num_rows)
      : rows_(num_rows),
        structural_(static_cast<int>(columns.size())),
        width_(structural_ + num_rows),
        columns_(columns) {}

  // Returns false when the LP is infeasible.
  bool solve(const std::vector<int64_t>& rhs,
             const std::vector<int64_t>& lower,
             const std::vector<int64_t>& upper, LpSolution* out) {
    init(rhs, lower, upper);
    while (true) {
      compute_basic_values();
      int leave_row = -1;
      bool below = false;
      for (int r = 0; r < rows_; ++r) {
        const int var = basis_[r];
        const bool is_below = basic_value_[r] < lower_bound(var);
        const bool is_above =
            upper_bound(var) != kUnbounded && basic_value_[r] > upper_bound(var);
        if ((is_below || is_above) &&
            (leave_row == -1 || var < basis_[leave_row])) {
          leave_row = r;
          below = is_below;
        }
      }
      if (leave_row == -1) break;

      const std::vector<mpq_class>& row = tableau_[leave_row];
      int enter = -1;
      mpq_class best_ratio;
      for (int j = 0; j < width_; ++j) {
        if (is_basic_[j] || row[j] == 0) continue;
        if (lower_bound(j) == upper_bound(j)) continue;
        // Moving x_j by delta changes the leaving variable by -row[j]*delta.
        const bool increases = at_upper_[j] ? row[j] > 0 : row[j] < 0;
        if (increases != below) continue;
        mpq_class ratio = abs(reduced_cost_[j] / row[j]);
        if (enter == -1 || ratio < best_ratio) {
          enter = j;
          best_ratio = std::move(ratio);
        }
      }
      if (enter == -1) return false;
      const int leaving_var = basis_[leave_row];
      pivot(leave_row, enter);
      is_basic_[leaving_var] = false;
      at_upper_[leaving_var] = !below;
    }
    out->x.assign(structural_, 0);
    out->value = 0;
    for (int j = 0; j < structural_; ++j) {
      if (!is_basic_[j]) out->x[j] = to_mpq(nonbasic_value(j));
    }
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_) out->x[basis_[r]] = basic_value_[r];
    }
    for (const auto& v : out->x) out->value += v;
    return true;
  }

 private:
  int64_t lower_bound(int j) const { return j < structural_ ? (*lower_)[j] : 0; }
  int64_t upper_bound(int j) const {
    return j < structural_ ? (*upper_)[j] : kUnbounded;
  }
  int64_t nonbasic_value(int j) const {
    return at_upper_[j] ? upper_bound(j) : lower_bound(j);
  }

  void init(const std::vector<int64_t>& rhs, const std::vector<int64_t>& lower,
            const std::vector<int64_t>& upper) {
    lower_ = &lower;
    upper_ = &upper;
    // B = -I, so B^-1 [A | -I] = [-A | I] and B^-1 b = -b.
    tableau_.assign(rows_, std::vector<mpq_class>(width_, 0));
    rhs_.assign(rows_, 0);
    for (int j = 0; j < structural_; ++j) {
      for (const int i : columns_[j]) tableau_[i][j] = -1;
    }
    for (int i = 0; i < rows_; ++i) {
      tableau_[i][structural_ + i] = 1;
      rhs_[i] = to_mpq(-rhs[i]);
    }
    reduced_cost_.assign(width_, 0);
    for (int j = 0; j < structural_; ++j) reduced_cost_[j] = 1;
    basis_.resize(rows_);
    is_basic_.assign(width_, false);
    at_upper_.assign(width_, false);
    for (int i = 0; i < rows_; ++i) {
      basis_[i] = structural_ + i;
      is_basic_[structural_ + i] = true;
    }
  }

  void compute_basic_values() {
    basic_value_ = rhs_;
    for (int j = 0; j < width_; ++j) {
      if (is_basic_[j]) continue;
      const int64_t v = nonbasic_value(j);
      if (v == 0) continue;
      const mpq_class value = to_mpq(v);
      for (int r = 0; r < rows_; ++r) {
        if (tableau_[r][j] != 0) basic_value_[r] -= tableau_[r][j] * value;
      }
    }
  }

  void pivot(int p, int q) {
    std::vector<mpq_class>& prow = tableau_[p];
    const mpq_class inv = 1 / prow[q];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    rhs_[p] *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == p || tableau_[r][q] == 0) continue;
      const mpq_class factor = tableau_[r][q];
      for (int j = 0; j < width_; ++j) {
        if (prow[j] != 0) tableau_[r][j] -= factor * prow[j];
      }
      rhs_[r] -= factor * rhs_[p];
    }
    if (reduced_cost_[q] != 0) {
      const mpq_class factor = reduced_cost_[q];
      for (int j = 0; j < width_; ++j) {
        if (prow[j] != 0) reduced_cost_[j] -= factor * prow[j];
      }
    }
    basis_[p] = q;
    is_basic_[q] = true;
    at_upper_[q] = false;
  }

  const int rows_;
  const int structural_;
  const int width_;
  const std::vector<std::vector<int>>& columns_;
  const std::vector<int64_t>* lower_ = nullptr;
  const std::vector<int64_t>* upper_ = nullptr;
  std::vector<std::vector<mpq_class>> tableau_;
  std::vector<mpq_class> rhs_;
  std::vector<mpq_class> reduced_cost_;
  std::vector<mpq_class> basic_value_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  std::vector<bool> at_upper_;
};

std::vector<int64_t> greedy(const std::vector<std::vector<int>>& columns,
                            std::vector<int64_t> residual) {
  std::vector<int64_t> x(columns.size(), 0);
  while (true) {
    int best = -1;
    int best_count = 0;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
      int count = 0;
      for (const int i : columns[j]) count += residual[i] > 0;
      if (count > best_count) {
        best = j;
        best_count = count;
      }
    }
    if (best == -1) break;
    // The chosen column stays the best one until one of its rows is met.
    int64_t step = kUnbounded;
    for (const int i : columns[best]) {
      if (residual[i] > 0) step = std::min(step, residual[i]);
    }
    x[best] += step;
    for (const int i : columns[best]) {
      residual[i] = std::max<int64_t>(0, residual[i] - step);
    }
  }
  for (const int64_t r : residual) {
    if (r > 0) throw ValidationError("covering instance is infeasible");
  }
  return x;
}

int64_t sum_of(const std::vector<int64_t>& x) {
  int64_t total = 0;
  for (const int64_t v : x) total += v;
  return total;
}

class BranchAndBound {
 public:
  BranchAndBound(const std::vector<std::vector<int>>& columns, int num_rows,
                 std::vector<int64_t> rhs, int64_t* nodes, int64_t budget)
      : columns_(columns),
        rhs_(std::move(rhs)),
        lp_(columns, num_rows),
        nodes_(nodes),
        budget_(budget),
        lower_(columns.size(), 0),
        upper_(columns.size(), kUnbounded) {}

  void set_incumbent(std::vector<int64_t> x) {
    incumbent_value_ = sum_of(x);
    incumbent_ = std::move(x);
  }
  const std::vector<int64_t>& incumbent() const { return incumbent_; }
  int64_t incumbent_value() const { return incumbent_value_; }

  bool solve_root(LpSolution* root) {
    count_node();
    return lp_.solve(rhs_, lower_, upper_, root);
  }

  void search() { visit(); }

 private:
  void count_node() {
    if (++*nodes_ > budget_) {
      throw BudgetExceeded("ILP node budget of " + std::to_string(budget_) +
                           " exhausted before optimality was proven");
    }
  }

  void visit() {
    count_node();
    LpSolution lp;
    if (!lp_.solve(rhs_, lower_, upper_, &lp)) return;
    if (ceil_of(lp.value) >= incumbent_value_) return;
    int branch = -1;
    mpq_class best_distance;
    for (int j = 0; j < static_cast<int>(lp.x.size()); ++j) {
      const mpq_class frac = lp.x[j] - to_mpq(floor_of(lp.x[j]));
      if (frac == 0) continue;
      mpq_class distance = frac < mpq_class(1, 2) ? frac : 1 - frac;
      if (branch == -1 || distance > best_distance) {
        branch = j;
        best_distance = std::move(distance);
      }
    }
    if (branch == -1) {
      std::vector<int64_t> x(lp.x.size());
      for (size_t j = 0; j < x.size(); ++j) x[j] = floor_of(lp.x[j]);
      set_incumbent(std::move(x));
      return;
    }
    const int64_t down = floor_of(lp.x[branch]);
    const int64_t saved_lower = lower_[branch];
    lower_[branch] = down + 1;
    visit();
    lower_[branch] = saved_lower;
    const int64_t saved_upper = upper_[branch];
    upper_[branch] = down;
    visit();
    upper_[branch] = saved_upper;
  }

  const std::vector<std::vector<int>>& columns_;
  const std::vector<int64_t> rhs_;
  DualSimplex lp_;
  int64_t* nodes_;
  const int64_t budget_;
  std::vector<int64_t> lower_;
  std::vector<int64_t> upper_;
  std::vector<int64_t> incumbent_;
  int64_t incumbent_value_ = kUnbounded;
};

}  // namespace

LpSolution solve_lp_relaxation(const CoveringIlp& p) {
  validate_ilp(p);
  DualSimplex lp(p.columns, p.num_rows);
  const std::vector<int64_t> lower(p.num_columns(), 0);
  const std::vector<int64_t> upper(p.num_columns(), kUnbounded);
  LpSolution solution;
  if (!lp.solve(p.rhs, lower, upper, &solution)) {
    throw ValidationError("covering LP is infeasible");
  }
  return solution;
}

std::vector<int64_t> greedy_cover(const CoveringIlp& p) {
  validate_ilp(p);
  return greedy(p.columns, p.rhs);
}

IlpSolution solve_covering_ilp(const CoveringIlp& p,
                               const SolverOptions& options) {
  validate_ilp(p);
  IlpSolution result;
  BranchAndBound full(p.columns, p.num_rows, p.rhs, &result.nodes,
                      options.node_budget);
  full.set_incumbent(greedy(p.columns, p.rhs));

  LpSolution root;
  if (!full.solve_root(&root)) {
    throw ValidationError("covering LP is infeasible");
  }
  result.root_lp_value = root.value;
  const int64_t root_bound = ceil_of(root.value);

  // Saturation: keep the floor of the LP optimum and solve only the small
  // residual demand (below the number of fractional basics per row) exactly.
  if (full.incumbent_value() > root_bound) {
    std::vector<int64_t> base(p.num_columns());
    for (int j = 0; j < p.num_columns(); ++j) base[j] = floor_of(root.x[j]);
    const std::vector<int64_t> covered = p.coverage(base);
    std::vector<int64_t> residual(p.num_rows);
    for (int i = 0; i < p.num_rows; ++i) {
      residual[i] = std::max<int64_t>(0, p.rhs[i] - covered[i]);
    }
    std::vector<int64_t> candidate = greedy(p.columns, residual);
    for (int j = 0; j < p.num_columns(); ++j) candidate[j] += base[j];
    if (sum_of(candidate) > root_bound) {
      // Rounding alone did not close the gap; search the residual exactly.
      BranchAndBound rest(p.columns, p.num_rows, residual, &result.nodes,
                          options.node_budget);
      rest.set_incumbent(greedy(p.columns, residual));
      rest.search();
      candidate = rest.incumbent();
      for (int j = 0; j < p.num_columns(); ++j) candidate[j] += base[j];
    }
    if (sum_of(candidate) < full.incumbent_value()) {
      full.set_incumbent(std::move(candidate));
    }
  }

  if (full.incumbent_value() > root_bound) full.search();

  result.x = full.incumbent();
  result.objective_value = full.incumbent_value();
  result.lower_bound = result.objective_value;
  return result;
}

}  // namespace ndcolor

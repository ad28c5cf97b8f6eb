#ifndef NDCOLOR_COVERING_ILP_H_
#define NDCOLOR_COVERING_ILP_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ndcolor/mis.h"
#include "ndcolor/type_graph.h"

namespace ndcolor {

// min sum_j x_j  s.t.  sum_{j : i in column j} x_j >= rhs[i],  x >= 0 integer.
// Column j lists the (sorted) rows in which it has a 1.
struct CoveringIlp {
  int num_rows = 0;
  std::vector<std::vector<int>> columns;
  std::vector<int64_t> rhs;

  int num_columns() const { return static_cast<int>(columns.size()); }
  int64_t max_rhs() const;
  // Row-wise coverage A*x.
  std::vector<int64_t> coverage(const std::vector<int64_t>& x) const;
  bool is_feasible(const std::vector<int64_t>& x) const;

  friend bool operator==(const CoveringIlp&, const CoveringIlp&) = default;
};

// Throws ValidationError unless every column is a sorted list of in-range
// rows, every row is covered by some column and every rhs is at least 1.
void validate_ilp(const CoveringIlp& p);

// One column per family member (same order); rhs is the class size for clique
// classes and 1 for independent classes.
CoveringIlp build_coloring_ilp(const TypeGraph& t, const MisFamily& family);

// Equality form with surplus columns: [A | -I] (x, s) = b, (x, s) >= 0,
// objective 1 on structural columns and 0 on surplus columns.
struct EqualityFormIlp {
  int num_rows = 0;
  int num_structural = 0;
  std::vector<std::vector<int>> matrix;  // num_rows x (num_structural + rows)
  std::vector<int64_t> rhs;
  std::vector<int64_t> objective;

  int num_columns() const { return static_cast<int>(objective.size()); }
};

EqualityFormIlp to_equality_form(const CoveringIlp& p);

// Dump format: `ilp <r> <d>`, then per row
// `row <i> >= <b_i> : <1-based columns containing i>`.
void write_ilp(const CoveringIlp& p, std::ostream& out);
std::string write_ilp(const CoveringIlp& p);
CoveringIlp parse_ilp(std::istream& in);
CoveringIlp parse_ilp(std::string_view text);

}  // namespace ndcolor

#endif  // NDCOLOR_COVERING_ILP_H_

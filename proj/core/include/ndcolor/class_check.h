#ifndef NDCOLOR_CLASS_CHECK_H_
#define NDCOLOR_CLASS_CHECK_H_

#include <optional>
#include <vector>

#include "ndcolor/graph.h"
#include "ndcolor/induced.h"
#include "ndcolor/nd_decomposition.h"

namespace ndcolor {

// Membership in the (4K1, C4, C6)-free graphs that contain an induced C7.
struct ClassReport {
  bool is_4k1_free = false;
  bool is_c4_free = false;
  bool is_c6_free = false;
  bool has_c7 = false;
  // Witness for each pattern that was found (failed freeness, or the C7).
  std::optional<std::vector<int>> witness_4k1;
  std::optional<std::vector<int>> witness_c4;
  std::optional<std::vector<int>> witness_c6;
  std::optional<std::vector<int>> witness_c7;

  bool in_class() const {
    return is_4k1_free && is_c4_free && is_c6_free && has_c7;
  }
  const std::optional<std::vector<int>>& witness(Pattern p) const;
};

// Runs contains_induced for all four patterns on the twin-reduced graph
// (at most pattern-size vertices kept per nd class; any permutation inside a
// twin class is an automorphism) and maps witnesses back to g.
ClassReport check_class(const Graph& g);

// Same, when the nd-decomposition is already known.
ClassReport check_class(const Graph& g, const NdDecomposition& dec);

struct StructureVerdict {
  int nd = 0;
  bool nd_within_bound = false;  // nd <= 13
  bool minimal_is_uniform = false;
  // Smallest uniform partition (independent classes split into singletons,
  // clique classes split further only to reach 7 classes) and whether its
  // size lies in [7, 13].
  std::vector<std::vector<int>> uniform_partition;
  int uniform_k = 0;
  bool uniform_in_range = false;

  // Either bound failing on an in-class graph is a counterexample to the
  // known structure bounds; in practice it flags a bug upstream.
  bool counterexample() const { return !nd_within_bound || !uniform_in_range; }
};

inline constexpr int kClassNdBound = 13;
inline constexpr int kClassUniformMin = 7;

// Throws PreconditionError unless report.in_class() and dec covers g.
StructureVerdict assert_structure_bounds(const Graph& g,
                                         const ClassReport& report,
                                         const NdDecomposition& dec);

}  // namespace ndcolor

#endif  // NDCOLOR_CLASS_CHECK_H_

#ifndef NDCOLOR_MIS_H_
#define NDCOLOR_MIS_H_

#include <span>
#include <vector>

#include "ndcolor/nd_decomposition.h"
#include "ndcolor/type_graph.h"

namespace ndcolor {

// A set of type-graph vertices, sorted ascending, 0-based.
using TypeSet = std::vector<int>;

// All maximal independent sets of a type graph with its loops ignored,
// sorted lexicographically.
struct MisFamily {
  int k = 0;
  std::vector<TypeSet> sets;

  int size() const { return static_cast<int>(sets.size()); }
  friend bool operator==(const MisFamily&, const MisFamily&) = default;
};

// Bron-Kerbosch with Tomita pivoting on the complement of the loop-stripped
// type graph.
MisFamily enumerate_mis(const TypeGraph& t);

// The set of classes of `dec` met by `vertices`.
TypeSet touched_classes(const NdDecomposition& dec,
                        std::span<const int> vertices);

// A vertex set J touching exactly `j_classes` induces that same type set.
// Kept as a named step so callers can phrase the reconstruction checks.
inline TypeSet induces(TypeSet j_classes) { return j_classes; }

// I dominates I' iff I' is a subset of I. Both sorted.
bool dominates(std::span<const int> set, std::span<const int> subset);

}  // namespace ndcolor

#endif  // NDCOLOR_MIS_H_

#ifndef NDCOLOR_ND_DECOMPOSITION_H_
#define NDCOLOR_ND_DECOMPOSITION_H_

#include <cstdint>
#include <vector>

#include "ndcolor/graph.h"

namespace ndcolor {

enum class ClassKind { kClique, kIndependentSet };

// Partition of V(G) into homogeneous classes. Each class is a sorted vertex
// list; classes are ordered by their minimum vertex.
struct NdDecomposition {
  std::vector<std::vector<int>> classes;
  std::vector<ClassKind> kinds;

  int size() const { return static_cast<int>(classes.size()); }
  int64_t num_vertices() const;

  // class_of()[v] is the index of the class containing v.
  std::vector<int> class_of() const;

  friend bool operator==(const NdDecomposition&,
                         const NdDecomposition&) = default;
};

// Minimum nd-decomposition: the equivalence classes of
// u ~ v  <=>  N(u) \ {v} = N(v) \ {u}.
// Singletons are flagged kClique. Expected O(n + m).
NdDecomposition compute_nd_decomposition(const Graph& g);

// True iff every class is a clique.
bool is_k_uniform(const NdDecomposition& dec);

// Exhaustively checks that `dec` partitions V(g), that every class matches its
// kind and that every pair of classes is completely joined or not at all.
// Throws ValidationError naming the offending class (pair). O(n + m).
void validate_decomposition(const Graph& g, const NdDecomposition& dec);

}  // namespace ndcolor

#endif  // NDCOLOR_ND_DECOMPOSITION_H_

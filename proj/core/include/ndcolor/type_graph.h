#ifndef NDCOLOR_TYPE_GRAPH_H_
#define NDCOLOR_TYPE_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ndcolor/graph.h"
#include "ndcolor/nd_decomposition.h"

namespace ndcolor {

// Quotient of a graph by an nd-decomposition: vertex i stands for class P_i,
// carries weight |P_i| and a loop iff P_i is a clique. Vertices of weight 1
// always carry a loop.
class TypeGraph {
 public:
  TypeGraph() = default;

  // Throws ValidationError on a zero weight, a bad edge endpoint or a
  // self-edge. Loops of weight-1 vertices are forced on.
  TypeGraph(std::vector<int64_t> weights, std::vector<bool> loops,
            std::vector<Edge> edges);

  int size() const { return static_cast<int>(weights_.size()); }
  int64_t weight(int i) const { return weights_[i]; }
  bool has_loop(int i) const { return loops_[i]; }
  bool adjacent(int i, int j) const;
  const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }

  const std::vector<int64_t>& weights() const { return weights_; }
  const std::vector<bool>& loops() const { return loops_; }
  // Sorted, first < second.
  const std::vector<Edge>& edges() const { return edges_; }
  int64_t total_weight() const;

  ClassKind kind(int i) const {
    return loops_[i] ? ClassKind::kClique : ClassKind::kIndependentSet;
  }

  friend bool operator==(const TypeGraph& a, const TypeGraph& b) {
    return a.weights_ == b.weights_ && a.loops_ == b.loops_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::vector<int64_t> weights_;
  std::vector<bool> loops_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// T(G) for a valid decomposition of g. The decomposition is verified in full
// first (see validate_decomposition); singleton classes become looped.
TypeGraph build_type_graph(const Graph& g, const NdDecomposition& dec);

// Decomposition whose classes are consecutive vertex ranges, class i taking
// weight(i) vertices in type-vertex order. This is the numbering used by
// blow_up and by colorings computed straight from a type graph.
NdDecomposition implicit_decomposition(const TypeGraph& t);

struct BlowUp {
  Graph graph;
  NdDecomposition decomposition;
};

// Inverse of build_type_graph: class i becomes a clique (loop) or an
// independent set of weight(i) vertices; edges become complete joins.
BlowUp blow_up(const TypeGraph& t);

// Whether two type vertices would collapse into one nd class after blow_up.
bool has_mergeable_pair(const TypeGraph& t);

// Text format: `t <k>`, `w <n1> .. <nk>`, then sorted `l <i>` and
// `e <i> <j>` lines, 1-based. `c` lines are comments.
TypeGraph parse_type_graph(std::istream& in);
TypeGraph parse_type_graph(std::string_view text);
void write_type_graph(const TypeGraph& t, std::ostream& out);
std::string write_type_graph(const TypeGraph& t);

}  // namespace ndcolor

#endif  // NDCOLOR_TYPE_GRAPH_H_

#ifndef NDCOLOR_GRAPH_H_
#define NDCOLOR_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ndcolor {

// Unordered vertex pair; Graph always reports edges with first < second.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, stored as sorted adjacency
// lists in compressed (CSR) form. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Edges may repeat and come in either orientation; duplicates collapse.
  // Throws ValidationError on self-loops or out-of-range endpoints.
  Graph(int num_vertices, std::span<const Edge> edges);

  // Builds from per-vertex neighbor lists that are already sorted, duplicate
  // free and symmetric. Only cheap checks are performed (sortedness, range,
  // no self-loop, total degree parity); symmetry is the caller's contract.
  static Graph FromSortedAdjacency(std::vector<std::vector<int>> adjacency);

  int num_vertices() const { return n_; }
  int64_t num_edges() const {
    return static_cast<int64_t>(neighbors_.size()) / 2;
  }

  std::span<const int> neighbors(int v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  int degree(int v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(int u, int v) const;

  // All edges with first < second, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ &&
           a.neighbors_ == b.neighbors_;
  }

 private:
  int n_ = 0;
  std::vector<int64_t> offsets_{0};
  std::vector<int> neighbors_;
};

// Subgraph induced by `vertices` (distinct, any order). Vertex i of the result
// corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph petersen_graph();

}  // namespace ndcolor

#endif  // NDCOLOR_GRAPH_H_

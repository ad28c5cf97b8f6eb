#include "ndcolor/graph.h"

#include <algorithm>
#include <string>

#include "ndcolor/errors.h"

namespace ndcolor {

Graph::Graph(int num_vertices, std::span<const Edge> edges) : n_(num_vertices) {
  if (num_vertices < 0) throw ValidationError("negative vertex count");
  std::vector<int64_t> degree(n_, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw ValidationError("edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") out of range");
    }
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  neighbors_.resize(offsets_[n_]);
  std::vector<int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors_[fill[u]++] = v;
    neighbors_[fill[v]++] = u;
  }
  // Sort and deduplicate each list, compacting in place.
  int64_t out = 0;
  for (int v = 0; v < n_; ++v) {
    auto first = neighbors_.begin() + offsets_[v];
    auto last = neighbors_.begin() + offsets_[v + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    const int64_t begin = out;
    for (auto it = first; it != last; ++it) neighbors_[out++] = *it;
    offsets_[v] = begin;
  }
  offsets_[n_] = out;
  neighbors_.resize(out);
  neighbors_.shrink_to_fit();
}

Graph Graph::FromSortedAdjacency(std::vector<std::vector<int>> adjacency) {
  Graph g;
  g.n_ = static_cast<int>(adjacency.size());
  g.offsets_.assign(g.n_ + 1, 0);
  for (int v = 0; v < g.n_; ++v) {
    g.offsets_[v + 1] =
        g.offsets_[v] + static_cast<int64_t>(adjacency[v].size());
  }
  if (g.offsets_[g.n_] % 2 != 0) {
    throw ValidationError("adjacency lists are not symmetric");
  }
  g.neighbors_.reserve(g.offsets_[g.n_]);
  for (int v = 0; v < g.n_; ++v) {
    auto& list = adjacency[v];
    for (size_t i = 0; i < list.size(); ++i) {
      const int u = list[i];
      if (u < 0 || u >= g.n_ || u == v || (i > 0 && list[i - 1] >= u)) {
        throw ValidationError("bad adjacency list for vertex " +
                              std::to_string(v));
      }
    }
    g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
    std::vector<int>().swap(list);
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges());
  for (int u = 0; u < n_; ++u) {
    for (const int v : neighbors(u)) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> position(g.num_vertices(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (position[vertices[i]] != -1) {
      throw ValidationError("repeated vertex in induced_subgraph");
    }
    position[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (const int u : g.neighbors(vertices[i])) {
      const int j = position[u];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

}  // namespace ndcolor

#include "ndcolor/type_graph.h"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "ndcolor/errors.h"
#include "text_util.h"

namespace ndcolor {

TypeGraph::TypeGraph(std::vector<int64_t> weights, std::vector<bool> loops,
                     std::vector<Edge> edges)
    : weights_(std::move(weights)), loops_(std::move(loops)) {
  const int k = size();
  if (static_cast<int>(loops_.size()) != k) {
    throw ValidationError("type graph has " + std::to_string(k) +
                          " weights but " + std::to_string(loops_.size()) +
                          " loop flags");
  }
  for (int i = 0; i < k; ++i) {
    if (weights_[i] < 1) {
      throw ValidationError("type vertex " + std::to_string(i + 1) +
                            " has weight " + std::to_string(weights_[i]));
    }
    if (weights_[i] == 1) loops_[i] = true;
  }
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= k || b < 0 || b >= k) {
      throw ValidationError("type edge endpoint out of range");
    }
    if (a == b) {
      throw ValidationError("type edge at " + std::to_string(a + 1) +
                            " joins a vertex to itself; use a loop");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(k, {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool TypeGraph::adjacent(int i, int j) const {
  const auto& list = adjacency_[i];
  return std::binary_search(list.begin(), list.end(), j);
}

int64_t TypeGraph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), int64_t{0});
}

TypeGraph build_type_graph(const Graph& g, const NdDecomposition& dec) {
  validate_decomposition(g, dec);
  const int k = dec.size();
  std::vector<int64_t> weights(k);
  std::vector<bool> loops(k);
  for (int i = 0; i < k; ++i) {
    weights[i] = static_cast<int64_t>(dec.classes[i].size());
    loops[i] = dec.kinds[i] == ClassKind::kClique || weights[i] == 1;
  }
  // Homogeneity is verified above, so one representative per class decides
  // every block.
  const std::vector<int> class_of = dec.class_of();
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    const int rep = dec.classes[i].front();
    for (const int u : g.neighbors(rep)) {
      const int j = class_of[u];
      if (j > i) edges.emplace_back(i, j);
    }
  }
  return TypeGraph(std::move(weights), std::move(loops), std::move(edges));
}

NdDecomposition implicit_decomposition(const TypeGraph& t) {
  NdDecomposition dec;
  int next = 0;
  for (int i = 0; i < t.size(); ++i) {
    std::vector<int> members(t.weight(i));
    std::iota(members.begin(), members.end(), next);
    next += static_cast<int>(t.weight(i));
    dec.classes.push_back(std::move(members));
    dec.kinds.push_back(t.kind(i));
  }
  return dec;
}

BlowUp blow_up(const TypeGraph& t) {
  const int64_t total = t.total_weight();
  if (total > std::numeric_limits<int>::max()) {
    throw ValidationError("blow-up too large");
  }
  NdDecomposition dec = implicit_decomposition(t);
  const int k = t.size();
  std::vector<std::vector<int>> adjacency(total);
  for (int i = 0; i < k; ++i) {
    // Classes occupy consecutive ranges in type-vertex order, so walking the
    // joined classes in order yields sorted neighbor lists.
    std::vector<int> joined = t.neighbors(i);
    if (t.has_loop(i)) {
      joined.insert(std::lower_bound(joined.begin(), joined.end(), i), i);
    }
    int64_t degree = 0;
    for (const int j : joined) degree += t.weight(j);
    if (t.has_loop(i)) --degree;
    for (const int v : dec.classes[i]) {
      auto& list = adjacency[v];
      list.reserve(degree);
      for (const int j : joined) {
        for (const int u : dec.classes[j]) {
          if (u != v) list.push_back(u);
        }
      }
    }
  }
  return {Graph::FromSortedAdjacency(std::move(adjacency)), std::move(dec)};
}

bool has_mergeable_pair(const TypeGraph& t) {
  const int k = t.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<int> a;
      std::vector<int> b;
      for (const int x : t.neighbors(i)) {
        if (x != j) a.push_back(x);
      }
      for (const int x : t.neighbors(j)) {
        if (x != i) b.push_back(x);
      }
      if (a != b) continue;
      const bool clique_i = t.has_loop(i);
      const bool clique_j = t.has_loop(j);
      const bool independent_i = !clique_i || t.weight(i) == 1;
      const bool independent_j = !clique_j || t.weight(j) == 1;
      if (t.adjacent(i, j) ? (clique_i && clique_j)
                           : (independent_i && independent_j)) {
        return true;
      }
    }
  }
  return false;
}

TypeGraph parse_type_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int64_t k = -1;
  std::vector<int64_t> weights;
  bool have_weights = false;
  std::vector<bool> loops;
  std::vector<Edge> edges;
  auto index = [&](const std::string& token) {
    const int64_t i = internal::parse_int(token, line_no, "type vertex");
    if (i < 1 || i > k) {
      throw ParseError(line_no, "type vertex " + token + " out of range 1.." +
                                    std::to_string(k));
    }
    return static_cast<int>(i - 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = internal::split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    const std::string& tag = tokens[0];
    if (tag == "t") {
      if (k >= 0) throw ParseError(line_no, "duplicate 't' line");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 't <k>'");
      k = internal::parse_int(tokens[1], line_no, "k");
      if (k < 0 || k > std::numeric_limits<int>::max()) {
        throw ParseError(line_no, "bad type vertex count");
      }
      loops.assign(k, false);
      continue;
    }
    if (k < 0) throw ParseError(line_no, "expected 't <k>' first");
    if (tag == "w") {
      if (have_weights) throw ParseError(line_no, "duplicate 'w' line");
      if (static_cast<int64_t>(tokens.size()) != k + 1) {
        throw ParseError(line_no, "expected " + std::to_string(k) + " weights");
      }
      for (size_t i = 1; i < tokens.size(); ++i) {
        const int64_t w = internal::parse_int(tokens[i], line_no, "weight");
        if (w < 1) throw ParseError(line_no, "weights must be at least 1");
        weights.push_back(w);
      }
      have_weights = true;
    } else if (tag == "l") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'l <i>'");
      loops[index(tokens[1])] = true;
    } else if (tag == "e") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <i> <j>'");
      const int a = index(tokens[1]);
      const int b = index(tokens[2]);
      if (a == b) throw ParseError(line_no, "type edge joins a vertex to itself");
      edges.emplace_back(a, b);
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (k < 0) throw ParseError(0, "missing 't <k>' line");
  if (!have_weights) throw ParseError(0, "missing 'w' line");
  return TypeGraph(std::move(weights), std::move(loops), std::move(edges));
}

TypeGraph parse_type_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_type_graph(in);
}

void write_type_graph(const TypeGraph& t, std::ostream& out) {
  out << "t " << t.size() << '\n';
  out << 'w';
  for (const int64_t w : t.weights()) out << ' ' << w;
  out << '\n';
  for (int i = 0; i < t.size(); ++i) {
    if (t.has_loop(i)) out << "l " << i + 1 << '\n';
  }
  for (const auto& [a, b] : t.edges()) {
    out << "e " << a + 1 << ' ' << b + 1 << '\n';
  }
}

std::string write_type_graph(const TypeGraph& t) {
  std::ostringstream out;
  write_type_graph(t, out);
  return out.str();
}

}  // namespace ndcolor

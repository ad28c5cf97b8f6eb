#include "ndcolor/testkit/oracles.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ndcolor/errors.h"

namespace ndcolor::testkit {
namespace {

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) {
    adj[u][v] = true;
    adj[v][u] = true;
  }
  return adj;
}

class ChromaticSearch {
 public:
  explicit ChromaticSearch(const Graph& g) : n_(g.num_vertices()) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= 1u << v;
      adj_[v] |= 1u << u;
    }
  }

  int run() {
    if (n_ == 0) return 0;
    lower_ = greedy_clique();
    best_ = n_;
    color_.fill(0);
    search(0, 0);
    return best_;
  }

 private:
  // Clique grown greedily from each start vertex; the largest one bounds chi.
  int greedy_clique() const {
    int best = 1;
    for (int s = 0; s < n_; ++s) {
      uint32_t clique = 1u << s;
      uint32_t candidates = adj_[s];
      while (candidates) {
        int pick = -1;
        int pick_degree = -1;
        for (uint32_t c = candidates; c; c &= c - 1) {
          const int v = std::countr_zero(c);
          const int d = std::popcount(adj_[v] & candidates);
          if (d > pick_degree) {
            pick = v;
            pick_degree = d;
          }
        }
        clique |= 1u << pick;
        candidates &= adj_[pick];
      }
      best = std::max(best, std::popcount(clique));
    }
    return best;
  }

  void search(int colored, int used) {
    if (best_ == lower_ || used >= best_) return;
    if (colored == n_) {
      best_ = used;
      return;
    }
    // DSATUR: most distinct neighbor colors, then most uncolored neighbors.
    int pick = -1;
    int pick_saturation = -1;
    int pick_degree = -1;
    uint32_t pick_forbidden = 0;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      uint32_t forbidden = 0;
      int uncolored = 0;
      for (uint32_t a = adj_[v]; a; a &= a - 1) {
        const int u = std::countr_zero(a);
        if (color_[u] != 0) {
          forbidden |= 1u << color_[u];
        } else {
          ++uncolored;
        }
      }
      const int saturation = std::popcount(forbidden);
      if (saturation > pick_saturation ||
          (saturation == pick_saturation && uncolored > pick_degree)) {
        pick = v;
        pick_saturation = saturation;
        pick_degree = uncolored;
        pick_forbidden = forbidden;
      }
    }
    for (int c = 1; c <= used + 1 && c < best_; ++c) {
      if (pick_forbidden & (1u << c)) continue;
      color_[pick] = c;
      search(colored + 1, std::max(used, c));
      color_[pick] = 0;
      if (best_ == lower_) return;
    }
  }

  int n_;
  uint32_t adj_[kOracleChromaticMaxN] = {};
  std::array<int, kOracleChromaticMaxN> color_{};
  int lower_ = 0;
  int best_ = 0;
};

}  // namespace

int oracle_chromatic(const Graph& g) {
  if (g.num_vertices() > kOracleChromaticMaxN) {
    throw RangeError("oracle_chromatic supports at most " +
                     std::to_string(kOracleChromaticMaxN) + " vertices, got " +
                     std::to_string(g.num_vertices()));
  }
  return ChromaticSearch(g).run();
}

NdDecomposition oracle_nd(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kOracleNdMaxN) {
    throw RangeError("oracle_nd supports at most " +
                     std::to_string(kOracleNdMaxN) + " vertices, got " +
                     std::to_string(n));
  }
  const auto adj = adjacency_matrix(g);
  auto twins = [&](int u, int v) {
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (adj[u][w] != adj[v][w]) return false;
    }
    return true;
  };
  std::vector<int> class_of(n, -1);
  NdDecomposition dec;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (twins(u, v)) {
        class_of[v] = class_of[u];
        break;
      }
    }
    if (class_of[v] == -1) {
      class_of[v] = dec.size();
      dec.classes.emplace_back();
    }
    dec.classes[class_of[v]].push_back(v);
  }
  for (const auto& members : dec.classes) {
    bool clique = true;
    for (size_t a = 0; a < members.size() && clique; ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        if (!adj[members[a]][members[b]]) {
          clique = false;
          break;
        }
      }
    }
    dec.kinds.push_back(clique ? ClassKind::kClique
                               : ClassKind::kIndependentSet);
  }
  return dec;
}

MisFamily oracle_mis(const TypeGraph& t) {
  const int k = t.size();
  if (k > kOracleMisMaxK) {
    throw RangeError("oracle_mis supports at most " +
                     std::to_string(kOracleMisMaxK) + " type vertices, got " +
                     std::to_string(k));
  }
  std::vector<uint32_t> adj(k, 0);
  for (const auto& [a, b] : t.edges()) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  MisFamily family;
  family.k = k;
  if (k == 0) return family;
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    bool independent = true;
    bool maximal = true;
    for (int v = 0; v < k; ++v) {
      if (mask >> v & 1u) {
        if (adj[v] & mask) independent = false;
      } else if ((adj[v] & mask) == 0) {
        maximal = false;
      }
    }
    if (!independent || !maximal) continue;
    TypeSet set;
    for (int v = 0; v < k; ++v) {
      if (mask >> v & 1u) set.push_back(v);
    }
    family.sets.push_back(std::move(set));
  }
  std::sort(family.sets.begin(), family.sets.end());
  return family;
}

int64_t oracle_ilp(const CoveringIlp& p) {
  const int d = p.num_columns();
  const int64_t cap = p.max_rhs();
  if (d > kOracleIlpMaxColumns || cap > kOracleIlpMaxRhs) {
    throw RangeError("oracle_ilp supports d <= " +
                     std::to_string(kOracleIlpMaxColumns) + " and rhs <= " +
                     std::to_string(kOracleIlpMaxRhs));
  }
  if (static_cast<int>(p.rhs.size()) != p.num_rows) {
    throw ValidationError("ILP rhs has wrong length");
  }
  // reach[j][i]: some column >= j has a 1 in row i.
  std::vector<std::vector<bool>> reach(
      d + 1, std::vector<bool>(p.num_rows, false));
  for (int j = d - 1; j >= 0; --j) {
    reach[j] = reach[j + 1];
    for (const int i : p.columns[j]) reach[j][i] = true;
  }
  constexpr int64_t kNone = std::numeric_limits<int64_t>::max();
  int64_t best = kNone;
  std::vector<int64_t> residual = p.rhs;

  auto enumerate = [&](auto&& self, int j, int64_t sum) -> void {
    if (sum >= best) return;
    bool done = true;
    for (int i = 0; i < p.num_rows; ++i) {
      if (residual[i] <= 0) continue;
      done = false;
      // One unit of x covers one unit of any row.
      if (!reach[j][i] || (best != kNone && residual[i] >= best - sum)) return;
    }
    if (done) {
      best = sum;
      return;
    }
    if (j == d) return;
    for (int64_t value = cap; value >= 0; --value) {
      for (const int i : p.columns[j]) residual[i] -= value;
      self(self, j + 1, sum + value);
      for (const int i : p.columns[j]) residual[i] += value;
    }
  };
  enumerate(enumerate, 0, 0);
  if (best == kNone) throw ValidationError("covering instance is infeasible");
  return best;
}

}  // namespace ndcolor::testkit

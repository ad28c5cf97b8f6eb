#include "ndcolor/nd_decomposition.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ndcolor/errors.h"

namespace ndcolor {
namespace {

uint64_t mix(uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// N[u] == N[v] for sorted open neighborhoods.
bool same_closed_neighborhood(const Graph& g, int u, int v) {
  if (g.degree(u) != g.degree(v)) return false;
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  size_t i = 0;
  size_t j = 0;
  bool u_done = false;
  bool v_done = false;
  while (true) {
    // Next element of N[u] = N(u) + {u}, likewise for v.
    int x;
    if (i < a.size() && (u_done || a[i] < u)) {
      x = a[i++];
    } else if (!u_done) {
      x = u;
      u_done = true;
    } else {
      x = -1;
    }
    int y;
    if (j < b.size() && (v_done || b[j] < v)) {
      y = b[j++];
    } else if (!v_done) {
      y = v;
      v_done = true;
    } else {
      y = -1;
    }
    if (x != y) return false;
    if (x == -1) return true;
  }
}

bool same_open_neighborhood(const Graph& g, int u, int v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// Groups vertices whose fingerprints match and whose neighborhoods compare
// equal to the group's first member. Returns a group id per vertex.
template <typename Same>
std::vector<int> group_by(const Graph& g, const std::vector<uint64_t>& hash,
                          Same same) {
  const int n = g.num_vertices();
  std::vector<int> group(n, -1);
  std::vector<int> representative;
  std::unordered_multimap<uint64_t, int> buckets;
  buckets.reserve(n);
  for (int v = 0; v < n; ++v) {
    auto [first, last] = buckets.equal_range(hash[v]);
    for (auto it = first; it != last; ++it) {
      if (same(g, representative[it->second], v)) {
        group[v] = it->second;
        break;
      }
    }
    if (group[v] == -1) {
      group[v] = static_cast<int>(representative.size());
      representative.push_back(v);
      buckets.emplace(hash[v], group[v]);
    }
  }
  return group;
}

}  // namespace

int64_t NdDecomposition::num_vertices() const {
  int64_t total = 0;
  for (const auto& c : classes) total += static_cast<int64_t>(c.size());
  return total;
}

std::vector<int> NdDecomposition::class_of() const {
  std::vector<int> result(num_vertices(), -1);
  for (int i = 0; i < size(); ++i) {
    for (const int v : classes[i]) result[v] = i;
  }
  return result;
}

NdDecomposition compute_nd_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<uint64_t> open_hash(n, 0);
  std::vector<uint64_t> closed_hash(n, 0);
  for (int v = 0; v < n; ++v) {
    uint64_t h = 0;
    for (const int u : g.neighbors(v)) h += mix(static_cast<uint64_t>(u));
    open_hash[v] = h;
    closed_hash[v] = h + mix(static_cast<uint64_t>(v));
  }
  // False twins share N(v) (and are then non-adjacent); true twins share N[v]
  // (and are then adjacent). A vertex cannot have both kinds of twin.
  const std::vector<int> open_group =
      group_by(g, open_hash, same_open_neighborhood);
  const std::vector<int> closed_group =
      group_by(g, closed_hash, same_closed_neighborhood);
  std::vector<int> open_count(n, 0);
  std::vector<int> closed_count(n, 0);
  for (int v = 0; v < n; ++v) {
    ++open_count[open_group[v]];
    ++closed_count[closed_group[v]];
  }

  NdDecomposition dec;
  std::vector<int> open_class(n, -1);
  std::vector<int> closed_class(n, -1);
  for (int v = 0; v < n; ++v) {
    int* slot = nullptr;
    ClassKind kind = ClassKind::kClique;
    if (open_count[open_group[v]] > 1) {
      slot = &open_class[open_group[v]];
      kind = ClassKind::kIndependentSet;
    } else {
      slot = &closed_class[closed_group[v]];
    }
    if (*slot == -1) {
      *slot = dec.size();
      dec.classes.emplace_back();
      dec.kinds.push_back(kind);
    }
    dec.classes[*slot].push_back(v);
  }
  return dec;
}

bool is_k_uniform(const NdDecomposition& dec) {
  return std::all_of(dec.kinds.begin(), dec.kinds.end(),
                     [](ClassKind k) { return k == ClassKind::kClique; });
}

void validate_decomposition(const Graph& g, const NdDecomposition& dec) {
  const int n = g.num_vertices();
  if (dec.kinds.size() != dec.classes.size()) {
    throw ValidationError("decomposition has " +
                          std::to_string(dec.classes.size()) + " classes but " +
                          std::to_string(dec.kinds.size()) + " kinds");
  }
  std::vector<int> class_of(n, -1);
  for (int i = 0; i < dec.size(); ++i) {
    if (dec.classes[i].empty()) {
      throw ValidationError("class " + std::to_string(i + 1) + " is empty");
    }
    for (const int v : dec.classes[i]) {
      if (v < 0 || v >= n) {
        throw ValidationError("class " + std::to_string(i + 1) +
                              " has out-of-range vertex");
      }
      if (class_of[v] != -1) {
        throw ValidationError("vertex " + std::to_string(v + 1) +
                              " is in two classes");
      }
      class_of[v] = i;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (class_of[v] == -1) {
      throw ValidationError("vertex " + std::to_string(v + 1) +
                            " is in no class");
    }
  }
  // Count edges per class pair; a block is homogeneous iff its count is 0
  // or full.
  std::vector<int64_t> internal(dec.size(), 0);
  std::unordered_map<uint64_t, int64_t> between;
  for (int u = 0; u < n; ++u) {
    for (const int v : g.neighbors(u)) {
      if (v < u) continue;
      const int a = class_of[u];
      const int b = class_of[v];
      if (a == b) {
        ++internal[a];
      } else {
        const uint64_t key = (static_cast<uint64_t>(std::min(a, b)) << 32) |
                             static_cast<uint32_t>(std::max(a, b));
        ++between[key];
      }
    }
  }
  for (int i = 0; i < dec.size(); ++i) {
    const int64_t s = static_cast<int64_t>(dec.classes[i].size());
    const int64_t full = s * (s - 1) / 2;
    const bool clique = internal[i] == full;
    const bool independent = internal[i] == 0;
    if (dec.kinds[i] == ClassKind::kClique ? !clique : !independent) {
      throw ValidationError(
          "class " + std::to_string(i + 1) + " is not " +
          (dec.kinds[i] == ClassKind::kClique ? "a clique"
                                              : "an independent set"));
    }
  }
  for (const auto& [key, count] : between) {
    const int a = static_cast<int>(key >> 32);
    const int b = static_cast<int>(key & 0xffffffffULL);
    const int64_t full = static_cast<int64_t>(dec.classes[a].size()) *
                         static_cast<int64_t>(dec.classes[b].size());
    if (count != full) {
      throw ValidationError("classes " + std::to_string(a + 1) + " and " +
                            std::to_string(b + 1) +
                            " are neither completely joined nor disjoint");
    }
  }
}

}  // namespace ndcolor

#include "ndcolor/mis.h"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

namespace ndcolor {
namespace {

using Bitset = boost::dynamic_bitset<uint64_t>;

// Maximal cliques of the complement graph == maximal independent sets of the
// loop-stripped type graph.
class MisEnumerator {
 public:
  explicit MisEnumerator(const TypeGraph& t) : k_(t.size()) {
    non_neighbors_.assign(k_, Bitset(k_));
    for (int i = 0; i < k_; ++i) {
      non_neighbors_[i].set();
      non_neighbors_[i].reset(i);
      for (const int j : t.neighbors(i)) non_neighbors_[i].reset(j);
    }
  }

  std::vector<TypeSet> run() {
    Bitset candidates(k_);
    candidates.set();
    Bitset excluded(k_);
    expand(candidates, excluded);
    return std::move(found_);
  }

 private:
  void expand(Bitset& candidates, Bitset& excluded) {
    if (candidates.none()) {
      if (excluded.none()) found_.push_back(current_);
      return;
    }
    // Tomita pivot: the vertex of P u X whose complement-neighborhood covers
    // the most candidates.
    const Bitset pool = candidates | excluded;
    int pivot = -1;
    size_t best = 0;
    for (auto u = pool.find_first(); u != Bitset::npos; u = pool.find_next(u)) {
      const size_t covered = (candidates & non_neighbors_[u]).count();
      if (pivot == -1 || covered > best) {
        pivot = static_cast<int>(u);
        best = covered;
      }
    }
    const Bitset branch = candidates - non_neighbors_[pivot];
    for (auto v = branch.find_first(); v != Bitset::npos;
         v = branch.find_next(v)) {
      current_.push_back(static_cast<int>(v));
      Bitset next_candidates = candidates & non_neighbors_[v];
      Bitset next_excluded = excluded & non_neighbors_[v];
      expand(next_candidates, next_excluded);
      current_.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  }

  int k_;
  std::vector<Bitset> non_neighbors_;
  TypeSet current_;
  std::vector<TypeSet> found_;
};

}  // namespace

MisFamily enumerate_mis(const TypeGraph& t) {
  MisFamily family;
  family.k = t.size();
  if (family.k == 0) return family;
  family.sets = MisEnumerator(t).run();
  for (auto& set : family.sets) std::sort(set.begin(), set.end());
  std::sort(family.sets.begin(), family.sets.end());
  return family;
}

TypeSet touched_classes(const NdDecomposition& dec,
                        std::span<const int> vertices) {
  const std::vector<int> class_of = dec.class_of();
  TypeSet result;
  result.reserve(vertices.size());
  for (const int v : vertices) result.push_back(class_of[v]);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool dominates(std::span<const int> set, std::span<const int> subset) {
  return std::includes(set.begin(), set.end(), subset.begin(), subset.end());
}

}  // namespace ndcolor

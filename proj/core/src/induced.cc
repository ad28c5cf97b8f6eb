#include "ndcolor/induced.h"

#include <algorithm>
#include <numeric>

namespace ndcolor {
namespace {

// Induced cycle of the given length via ordered DFS. The path starts at its
// minimum vertex; each extension is adjacent to the previous vertex and
// non-adjacent to every earlier one (except the start, which the final
// vertex must close onto).
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int length)
      : g_(g), length_(length), on_path_(g.num_vertices(), false) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < g_.num_vertices(); ++s) {
      if (g_.degree(s) < 2) continue;
      path_.assign(1, s);
      on_path_[s] = true;
      const bool found = extend();
      on_path_[s] = false;
      if (found) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const int last = path_.back();
    const int start = path_.front();
    const int pos = static_cast<int>(path_.size());
    const bool closing = pos == length_ - 1;
    for (const int v : g_.neighbors(last)) {
      if (v <= start || on_path_[v] || g_.degree(v) < 2) continue;
      // Orientation: the second vertex is smaller than the last one.
      if (closing && v < path_[1]) continue;
      if (g_.adjacent(v, start) != (closing || pos == 1)) continue;
      bool chord = false;
      for (int i = 1; i + 1 < pos; ++i) {
        if (g_.adjacent(v, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      path_.push_back(v);
      if (closing) return true;
      on_path_[v] = true;
      const bool found = extend();
      on_path_[v] = false;
      if (found) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const int length_;
  std::vector<bool> on_path_;
  std::vector<int> path_;
};

// Independent set of the given size; vertices tried in ascending degree.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, int size) : g_(g), size_(size) {
    order_.resize(g.num_vertices());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&g](int a, int b) {
      return g.degree(a) < g.degree(b);
    });
  }

  std::optional<std::vector<int>> run() {
    chosen_.clear();
    if (extend(0)) {
      std::vector<int> result = chosen_;
      std::sort(result.begin(), result.end());
      return result;
    }
    return std::nullopt;
  }

 private:
  bool extend(size_t from) {
    if (static_cast<int>(chosen_.size()) == size_) return true;
    const size_t remaining = size_ - chosen_.size();
    for (size_t i = from; i + remaining <= order_.size(); ++i) {
      const int v = order_[i];
      bool independent = true;
      for (const int u : chosen_) {
        if (g_.adjacent(u, v)) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      chosen_.push_back(v);
      if (extend(i + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const int size_;
  std::vector<int> order_;
  std::vector<int> chosen_;
};

}  // namespace

int pattern_size(Pattern p) {
  switch (p) {
    case Pattern::k4K1:
    case Pattern::kC4:
      return 4;
    case Pattern::kC6:
      return 6;
    case Pattern::kC7:
      return 7;
  }
  return 0;
}

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::k4K1:
      return "4K1";
    case Pattern::kC4:
      return "C4";
    case Pattern::kC6:
      return "C6";
    case Pattern::kC7:
      return "C7";
  }
  return "";
}

std::optional<Pattern> pattern_from_name(std::string_view name) {
  for (const Pattern p : kAllPatterns) {
    if (pattern_name(p) == name) return p;
  }
  return std::nullopt;
}

Graph pattern_graph(Pattern p) {
  if (p == Pattern::k4K1) return empty_graph(4);
  return cycle_graph(pattern_size(p));
}

std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern p) {
  if (g.num_vertices() < pattern_size(p)) return std::nullopt;
  if (p == Pattern::k4K1) return IndependentSetSearch(g, 4).run();
  return CycleSearch(g, pattern_size(p)).run();
}

}  // namespace ndcolor

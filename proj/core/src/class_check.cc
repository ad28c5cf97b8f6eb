#include "ndcolor/class_check.h"

#include <algorithm>
#include <string>

#include "ndcolor/errors.h"

namespace ndcolor {
namespace {

constexpr int kMaxPatternSize = 7;

}  // namespace

const std::optional<std::vector<int>>& ClassReport::witness(Pattern p) const {
  switch (p) {
    case Pattern::k4K1:
      return witness_4k1;
    case Pattern::kC4:
      return witness_c4;
    case Pattern::kC6:
      return witness_c6;
    case Pattern::kC7:
      break;
  }
  return witness_c7;
}

ClassReport check_class(const Graph& g) {
  return check_class(g, compute_nd_decomposition(g));
}

ClassReport check_class(const Graph& g, const NdDecomposition& dec) {
  // A pattern copy uses at most pattern-size vertices of any twin class, and
  // twins are interchangeable, so keeping that many per class is lossless.
  std::vector<int> kept;
  for (const auto& members : dec.classes) {
    const size_t take = std::min<size_t>(members.size(), kMaxPatternSize);
    kept.insert(kept.end(), members.begin(), members.begin() + take);
  }
  const Graph reduced = induced_subgraph(g, kept);
  auto search = [&](Pattern p) -> std::optional<std::vector<int>> {
    auto witness = contains_induced(reduced, p);
    if (witness) {
      for (int& v : *witness) v = kept[v];
    }
    return witness;
  };

  ClassReport report;
  report.witness_4k1 = search(Pattern::k4K1);
  report.witness_c4 = search(Pattern::kC4);
  report.witness_c6 = search(Pattern::kC6);
  report.witness_c7 = search(Pattern::kC7);
  report.is_4k1_free = !report.witness_4k1;
  report.is_c4_free = !report.witness_c4;
  report.is_c6_free = !report.witness_c6;
  report.has_c7 = report.witness_c7.has_value();
  return report;
}

StructureVerdict assert_structure_bounds(const Graph& g,
                                         const ClassReport& report,
                                         const NdDecomposition& dec) {
  if (!report.in_class()) {
    throw PreconditionError(
        "structure bounds apply only to (4K1, C4, C6)-free graphs with a C7");
  }
  if (dec.num_vertices() != g.num_vertices()) {
    throw PreconditionError("decomposition does not cover the graph");
  }
  StructureVerdict verdict;
  verdict.nd = dec.size();
  verdict.nd_within_bound = verdict.nd <= kClassNdBound;
  verdict.minimal_is_uniform = is_k_uniform(dec);

  // Members of a uniform class are true twins, so the coarsest uniform
  // partition keeps the clique classes and splits independent ones.
  auto& partition = verdict.uniform_partition;
  for (int i = 0; i < dec.size(); ++i) {
    if (dec.kinds[i] == ClassKind::kClique) {
      partition.push_back(dec.classes[i]);
    } else {
      for (const int v : dec.classes[i]) partition.push_back({v});
    }
  }
  // Splitting a clique class keeps the partition uniform; do so only to
  // reach the lower end of the range.
  while (static_cast<int>(partition.size()) < kClassUniformMin) {
    auto largest = std::max_element(
        partition.begin(), partition.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (largest->size() < 2) break;
    const int v = largest->back();
    largest->pop_back();
    partition.push_back({v});
  }
  std::sort(partition.begin(), partition.end());
  verdict.uniform_k = static_cast<int>(partition.size());
  verdict.uniform_in_range = verdict.uniform_k >= kClassUniformMin &&
                             verdict.uniform_k <= kClassNdBound;
  return verdict;
}

}  // namespace ndcolor

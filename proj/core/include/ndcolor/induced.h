#ifndef NDCOLOR_INDUCED_H_
#define NDCOLOR_INDUCED_H_

#include <optional>
#include <string_view>
#include <vector>

#include "ndcolor/graph.h"

namespace ndcolor {

// The fixed forbidden/required patterns of the (4K1, C4, C6)-free class.
enum class Pattern { k4K1, kC4, kC6, kC7 };

inline constexpr Pattern kAllPatterns[] = {Pattern::k4K1, Pattern::kC4,
                                           Pattern::kC6, Pattern::kC7};

int pattern_size(Pattern p);
std::string_view pattern_name(Pattern p);  // "4K1", "C4", "C6", "C7"
std::optional<Pattern> pattern_from_name(std::string_view name);
Graph pattern_graph(Pattern p);

// Searches for an induced copy of `p` in `g`. Returns pattern_size(p)
// distinct vertices whose induced subgraph is isomorphic to `p`; cycle
// witnesses are listed in cyclic order starting at their minimum vertex.
std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern p);

}  // namespace ndcolor

#endif  // NDCOLOR_INDUCED_H_

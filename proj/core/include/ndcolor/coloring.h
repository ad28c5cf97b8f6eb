#ifndef NDCOLOR_COLORING_H_
#define NDCOLOR_COLORING_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndcolor/graph.h"
#include "ndcolor/type_graph.h"

namespace ndcolor {

// color[v] in 1..num_colors; 0 marks an uncolored vertex.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ColoringCheck {
  bool ok = true;
  std::optional<Edge> conflict;      // monochromatic edge
  std::optional<int> unused_color;   // color in 1..num_colors never used

  explicit operator bool() const { return ok; }
};

// Proper and surjective onto 1..num_colors. Throws ValidationError if a
// vertex is uncolored or carries a color outside 1..num_colors.
ColoringCheck verify_coloring(const Graph& g, const Coloring& c);

// Same check against the blow-up of `t` in implicit_decomposition numbering,
// without materializing its edges.
ColoringCheck verify_coloring(const TypeGraph& t, const Coloring& c);

// `s <chi>` then `v <vertex> <color>` per vertex, 1-based.
void write_coloring(const Coloring& c, std::ostream& out);
std::string write_coloring(const Coloring& c);
Coloring parse_coloring(std::istream& in);
Coloring parse_coloring(std::string_view text);

}  // namespace ndcolor

#endif  // NDCOLOR_COLORING_H_

#include "ndcolor/coloring.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ndcolor/errors.h"
#include "ndcolor/nd_decomposition.h"
#include "text_util.h"

namespace ndcolor {
namespace {

void check_assignment(int64_t n, const Coloring& c) {
  if (static_cast<int64_t>(c.color.size()) != n) {
    throw ValidationError("coloring covers " + std::to_string(c.color.size()) +
                          " vertices, graph has " + std::to_string(n));
  }
  for (size_t v = 0; v < c.color.size(); ++v) {
    if (c.color[v] < 1 || c.color[v] > c.num_colors) {
      throw ValidationError("vertex " + std::to_string(v + 1) +
                            (c.color[v] == 0 ? " has no color"
                                             : " has color outside 1.." +
                                                   std::to_string(c.num_colors)));
    }
  }
}

std::optional<int> first_unused(const Coloring& c) {
  std::vector<bool> used(c.num_colors + 1, false);
  for (const int col : c.color) used[col] = true;
  for (int col = 1; col <= c.num_colors; ++col) {
    if (!used[col]) return col;
  }
  return std::nullopt;
}

}  // namespace

ColoringCheck verify_coloring(const Graph& g, const Coloring& c) {
  check_assignment(g.num_vertices(), c);
  ColoringCheck check;
  for (const auto& [u, v] : g.edges()) {
    if (c.color[u] == c.color[v]) {
      check.ok = false;
      check.conflict = Edge{u, v};
      return check;
    }
  }
  if (auto unused = first_unused(c)) {
    check.ok = false;
    check.unused_color = unused;
  }
  return check;
}

ColoringCheck verify_coloring(const TypeGraph& t, const Coloring& c) {
  check_assignment(t.total_weight(), c);
  const NdDecomposition dec = implicit_decomposition(t);
  ColoringCheck check;
  // Sorted (color, vertex) pairs per class.
  std::vector<std::vector<std::pair<int, int>>> palette(t.size());
  for (int i = 0; i < t.size(); ++i) {
    for (const int v : dec.classes[i]) palette[i].emplace_back(c.color[v], v);
    std::sort(palette[i].begin(), palette[i].end());
    if (!t.has_loop(i)) continue;
    for (size_t a = 1; a < palette[i].size(); ++a) {
      if (palette[i][a - 1].first == palette[i][a].first) {
        check.ok = false;
        check.conflict = Edge{palette[i][a - 1].second, palette[i][a].second};
        return check;
      }
    }
  }
  for (const auto& [a, b] : t.edges()) {
    const auto& pa = palette[a];
    const auto& pb = palette[b];
    size_t x = 0;
    size_t y = 0;
    while (x < pa.size() && y < pb.size()) {
      if (pa[x].first == pb[y].first) {
        check.ok = false;
        check.conflict = Edge{std::min(pa[x].second, pb[y].second),
                              std::max(pa[x].second, pb[y].second)};
        return check;
      }
      pa[x].first < pb[y].first ? ++x : ++y;
    }
  }
  if (auto unused = first_unused(c)) {
    check.ok = false;
    check.unused_color = unused;
  }
  return check;
}

void write_coloring(const Coloring& c, std::ostream& out) {
  out << "s " << c.num_colors << '\n';
  for (size_t v = 0; v < c.color.size(); ++v) {
    out << "v " << v + 1 << ' ' << c.color[v] << '\n';
  }
}

std::string write_coloring(const Coloring& c) {
  std::ostringstream out;
  write_coloring(c, out);
  return out.str();
}

Coloring parse_coloring(std::istream& in) {
  std::string line;
  int line_no = 0;
  Coloring c;
  bool have_header = false;
  std::vector<std::pair<int64_t, int64_t>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = internal::split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "s") {
      if (have_header || tokens.size() != 2) {
        throw ParseError(line_no, "expected a single 's <chi>' line");
      }
      const int64_t chi = internal::parse_int(tokens[1], line_no, "color count");
      if (chi < 0 || chi > std::numeric_limits<int>::max()) {
        throw ParseError(line_no, "bad color count");
      }
      c.num_colors = static_cast<int>(chi);
      have_header = true;
    } else if (tokens[0] == "v") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'v <vertex> <color>'");
      const int64_t v = internal::parse_int(tokens[1], line_no, "vertex");
      const int64_t col = internal::parse_int(tokens[2], line_no, "color");
      if (v < 1 || v > std::numeric_limits<int>::max() || col < 0 ||
          col > std::numeric_limits<int>::max()) {
        throw ParseError(line_no, "vertex or color out of range");
      }
      entries.emplace_back(v, col);
    } else {
      throw ParseError(line_no, "unknown line type '" + tokens[0] + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 's <chi>' line");
  int64_t n = 0;
  for (const auto& [v, col] : entries) n = std::max(n, v);
  c.color.assign(n, 0);
  for (const auto& [v, col] : entries) {
    if (c.color[v - 1] != 0) {
      throw ParseError(0, "vertex " + std::to_string(v) + " colored twice");
    }
    c.color[v - 1] = static_cast<int>(col);
  }
  return c;
}

Coloring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_coloring(in);
}

}  // namespace ndcolor

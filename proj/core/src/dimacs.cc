#include "ndcolor/dimacs.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ndcolor/errors.h"
#include "text_util.h"

namespace ndcolor {

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int64_t n = 0;
  int64_t m = 0;
  int64_t edge_lines = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = internal::split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      n = internal::parse_int(tokens[2], line_no, "vertex count");
      m = internal::parse_int(tokens[3], line_no, "edge count");
      if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
        throw ParseError(line_no, "malformed header, bad counts");
      }
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (tokens.size() != 3) {
        throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      }
      const int64_t u = internal::parse_int(tokens[1], line_no, "endpoint");
      const int64_t v = internal::parse_int(tokens[2], line_no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "vertex index out of range 1.." +
                                      std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      ++edge_lines;
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + tokens[0] + "'");
  }
  if (!have_header) throw ParseError(0, "missing 'p edge' header");
  if (edge_lines != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) +
                                  " edge lines, found " +
                                  std::to_string(edge_lines));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(g, out);
  return out.str();
}

}  // namespace ndcolor

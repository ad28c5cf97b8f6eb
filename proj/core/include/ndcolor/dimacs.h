#ifndef NDCOLOR_DIMACS_H_
#define NDCOLOR_DIMACS_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "ndcolor/graph.h"

namespace ndcolor {

// Reads the DIMACS `.col` edge format: `c` comment lines, one
// `p edge <n> <m>` header, then exactly m `e <u> <v>` lines (1-based).
// Blank lines are skipped; any other line type is a ParseError.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);

// Canonical form: header, then one line per edge with ascending endpoints,
// sorted lexicographically, LF terminated.
void write_dimacs(const Graph& g, std::ostream& out);
std::string write_dimacs(const Graph& g);

}  // namespace ndcolor

#endif  // NDCOLOR_DIMACS_H_

#include "ndcolor/covering_ilp.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ndcolor/errors.h"
#include "text_util.h"

namespace ndcolor {

int64_t CoveringIlp::max_rhs() const {
  return rhs.empty() ? 0 : *std::max_element(rhs.begin(), rhs.end());
}

std::vector<int64_t> CoveringIlp::coverage(
    const std::vector<int64_t>& x) const {
  std::vector<int64_t> covered(num_rows, 0);
  for (int j = 0; j < num_columns(); ++j) {
    for (const int i : columns[j]) covered[i] += x[j];
  }
  return covered;
}

bool CoveringIlp::is_feasible(const std::vector<int64_t>& x) const {
  if (static_cast<int>(x.size()) != num_columns()) return false;
  if (std::any_of(x.begin(), x.end(), [](int64_t v) { return v < 0; })) {
    return false;
  }
  const std::vector<int64_t> covered = coverage(x);
  for (int i = 0; i < num_rows; ++i) {
    if (covered[i] < rhs[i]) return false;
  }
  return true;
}

void validate_ilp(const CoveringIlp& p) {
  if (static_cast<int>(p.rhs.size()) != p.num_rows) {
    throw ValidationError("ILP rhs has wrong length");
  }
  std::vector<bool> covered(p.num_rows, false);
  for (int j = 0; j < p.num_columns(); ++j) {
    const auto& column = p.columns[j];
    for (size_t t = 0; t < column.size(); ++t) {
      if (column[t] < 0 || column[t] >= p.num_rows) {
        throw ValidationError("column " + std::to_string(j + 1) +
                              " references row " +
                              std::to_string(column[t] + 1) + " > " +
                              std::to_string(p.num_rows));
      }
      if (t > 0 && column[t - 1] >= column[t]) {
        throw ValidationError("column " + std::to_string(j + 1) +
                              " is not strictly sorted");
      }
      covered[column[t]] = true;
    }
  }
  for (int i = 0; i < p.num_rows; ++i) {
    if (p.rhs[i] < 1) {
      throw ValidationError("row " + std::to_string(i + 1) +
                            " has demand below 1");
    }
    if (!covered[i]) {
      throw ValidationError("row " + std::to_string(i + 1) +
                            " is covered by no column");
    }
  }
}

CoveringIlp build_coloring_ilp(const TypeGraph& t, const MisFamily& family) {
  if (family.k != t.size()) {
    throw ValidationError("family ground set size " +
                          std::to_string(family.k) + " != type graph size " +
                          std::to_string(t.size()));
  }
  CoveringIlp p;
  p.num_rows = t.size();
  p.columns = family.sets;
  p.rhs.resize(p.num_rows);
  for (int i = 0; i < p.num_rows; ++i) {
    p.rhs[i] = t.kind(i) == ClassKind::kClique ? t.weight(i) : 1;
  }
  validate_ilp(p);
  return p;
}

EqualityFormIlp to_equality_form(const CoveringIlp& p) {
  EqualityFormIlp eq;
  eq.num_rows = p.num_rows;
  eq.num_structural = p.num_columns();
  const int width = eq.num_structural + eq.num_rows;
  eq.matrix.assign(eq.num_rows, std::vector<int>(width, 0));
  for (int j = 0; j < p.num_columns(); ++j) {
    for (const int i : p.columns[j]) eq.matrix[i][j] = 1;
  }
  for (int i = 0; i < eq.num_rows; ++i) {
    eq.matrix[i][eq.num_structural + i] = -1;
  }
  eq.rhs = p.rhs;
  eq.objective.assign(width, 0);
  std::fill(eq.objective.begin(), eq.objective.begin() + eq.num_structural, 1);
  return eq;
}

void write_ilp(const CoveringIlp& p, std::ostream& out) {
  out << "ilp " << p.num_rows << ' ' << p.num_columns() << '\n';
  std::vector<std::vector<int>> rows(p.num_rows);
  for (int j = 0; j < p.num_columns(); ++j) {
    for (const int i : p.columns[j]) rows[i].push_back(j);
  }
  for (int i = 0; i < p.num_rows; ++i) {
    out << "row " << i + 1 << " >= " << p.rhs[i] << " :";
    for (const int j : rows[i]) out << ' ' << j + 1;
    out << '\n';
  }
}

std::string write_ilp(const CoveringIlp& p) {
  std::ostringstream out;
  write_ilp(p, out);
  return out.str();
}

CoveringIlp parse_ilp(std::istream& in) {
  std::string line;
  int line_no = 0;
  CoveringIlp p;
  bool have_header = false;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = internal::split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "ilp") {
      if (have_header || tokens.size() != 3) {
        throw ParseError(line_no, "expected a single 'ilp <r> <d>' header");
      }
      const int64_t r = internal::parse_int(tokens[1], line_no, "row count");
      const int64_t d = internal::parse_int(tokens[2], line_no, "column count");
      if (r < 0 || d < 0 || r > 1'000'000 || d > 100'000'000) {
        throw ParseError(line_no, "bad ILP dimensions");
      }
      p.num_rows = static_cast<int>(r);
      p.columns.assign(d, {});
      p.rhs.assign(r, 0);
      seen.assign(r, false);
      have_header = true;
      continue;
    }
    if (tokens[0] != "row") {
      throw ParseError(line_no, "unknown line type '" + tokens[0] + "'");
    }
    if (!have_header) throw ParseError(line_no, "row before header");
    if (tokens.size() < 5 || tokens[2] != ">=" || tokens[4] != ":") {
      throw ParseError(line_no, "expected 'row <i> >= <b> : <columns>'");
    }
    const int64_t i = internal::parse_int(tokens[1], line_no, "row");
    if (i < 1 || i > p.num_rows || seen[i - 1]) {
      throw ParseError(line_no, "bad or repeated row index");
    }
    seen[i - 1] = true;
    p.rhs[i - 1] = internal::parse_int(tokens[3], line_no, "demand");
    for (size_t t = 5; t < tokens.size(); ++t) {
      const int64_t j = internal::parse_int(tokens[t], line_no, "column");
      if (j < 1 || j > p.num_columns()) {
        throw ParseError(line_no, "column index out of range");
      }
      p.columns[j - 1].push_back(static_cast<int>(i - 1));
    }
  }
  if (!have_header) throw ParseError(0, "missing 'ilp' header");
  for (int i = 0; i < p.num_rows; ++i) {
    if (!seen[i]) throw ParseError(0, "row " + std::to_string(i + 1) + " missing");
  }
  for (auto& column : p.columns) {
    std::sort(column.begin(), column.end());
    column.erase(std::unique(column.begin(), column.end()), column.end());
  }
  validate_ilp(p);
  return p;
}

CoveringIlp parse_ilp(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ilp(in);
}

}  // namespace ndcolor

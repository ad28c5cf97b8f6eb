#ifndef NDCOLOR_SRC_TEXT_UTIL_H_
#define NDCOLOR_SRC_TEXT_UTIL_H_

#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "ndcolor/errors.h"

namespace ndcolor::internal {

inline std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline int64_t parse_int(std::string_view token, int line_no,
                         std::string_view what) {
  int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected integer " + std::string(what) +
                                  ", got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace ndcolor::internal

#endif  // NDCOLOR_SRC_TEXT_UTIL_H_

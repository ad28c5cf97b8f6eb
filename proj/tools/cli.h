#ifndef NDCOLOR_TOOLS_CLI_H_
#define NDCOLOR_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ndcolor::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kResourceLimit = 2;

// Runs one `ndcolor` invocation. `args` includes the program name. Results
// go to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ndcolor::cli

#endif  // NDCOLOR_TOOLS_CLI_H_

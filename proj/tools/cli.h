#ifndef SUPERHEDGE_TOOLS_CLI_H_
#define SUPERHEDGE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace superhedge::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kDomainError = 3;

// Runs one command. args excludes the program name. The report goes to
// `out` in a single write; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace superhedge::cli

#endif  // SUPERHEDGE_TOOLS_CLI_H_

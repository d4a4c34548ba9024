#ifndef HORNREV_CLI_HPP
#define HORNREV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hornrev::cli {

// Exit statuses shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kNoRepair = 2;
inline constexpr int kBudgetExceeded = 3;

// Runs the command line (argv without the program name) and writes to the
// given streams. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hornrev::cli

#endif

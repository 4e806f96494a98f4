#ifndef ASSOFORM_CLI_HPP
#define ASSOFORM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace assoform::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;        // usage, I/O and parse errors
inline constexpr int kExitPrecondition = 2;  // e.g. not a regular sequence

// Runs one `assoform` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace assoform::cli

#endif  // ASSOFORM_CLI_HPP

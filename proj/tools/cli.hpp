#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from WKIT_THREADS (default 1). Throws wkit::ParseError on a
/// value that is not a positive integer.
unsigned threads_from_environment();

} // namespace wkit::cli

#ifndef FANFREE_CLI_HPP
#define FANFREE_CLI_HPP

#include <ostream>

namespace fanfree::cli {

/// Dispatches one command line. Output goes to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 2 bad flags or invalid input, 3 capacity or
/// iteration budget exhausted, 4 internal invariant breach.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fanfree::cli

#endif

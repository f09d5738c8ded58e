#pragma once

#include <iosfwd>

namespace seveninv::cli {

/// Parses argv and dispatches to a subcommand. Exit codes: 0 success,
/// 1 failed invariant check or I/O error, 2 invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seveninv::cli

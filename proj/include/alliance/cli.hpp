#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alliance::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_capacity = 3;

/// Runs one command line (args excludes the program name) against the given streams.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace alliance::cli

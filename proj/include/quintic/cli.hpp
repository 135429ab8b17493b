#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quintic {

inline constexpr const char* kToolVersion = "0.1.0";

/// Attached to every mathematical output.
extern const char* const kHypothesisBanner;

/// Runs one command line (program name excluded). Returns the process exit
/// code: 0 success, 1 internal invariant failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quintic

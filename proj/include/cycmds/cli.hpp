#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cycmds/error.hpp"

namespace cycmds {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;
inline constexpr int kMismatch = 4;
inline constexpr int kInternal = 5;
inline constexpr int kBadPrime = 6;
inline constexpr int kZeroMinor = 7;
}  // namespace exit_code

int exit_code_for(ErrorCode code);

/// Parses "0,1,3", "0..3" or mixtures like "0..2,5". The result is sorted
/// and deduplicated; a warning is appended when the input was not already
/// strictly increasing. Throws Error(InvalidSpec) on malformed input.
std::vector<int> parse_defining_set(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Entry point shared by the executable and the tests. All output goes to
/// `out` (reports) and `err` (warnings, diagnostics).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cycmds

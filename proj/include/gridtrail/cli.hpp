#pragma once

#include <iosfwd>

namespace gridtrail::cli {

enum ExitCode : int {
  kSuccess = 0,   // success, or the trail covers
  kNegative = 1,  // valid input, negative verdict
  kUsage = 2,     // usage, parse or dimension errors
  kBudget = 3,    // resource budget exhausted
};

/// Entry point of the `gridtrail` tool: subcommands bounds, verify, solve,
/// table and render. Data goes to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gridtrail::cli

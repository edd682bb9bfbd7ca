#pragma once

#include <iosfwd>

namespace bilpair::cli {

// Exit codes.
constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

// Runs one subcommand: radical, h2, equiv, aut, extend, classify, verify-tables.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bilpair::cli

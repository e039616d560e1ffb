/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Subcommands: classify, congruence, count, iso, ring, reps, verify.
 * Exit codes: 0 success, 1 failed verification or computational limit,
 * 2 usage or parameter error. Nothing is written to `out` unless the command
 * completes.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ringforge/verify.hpp"

namespace ringforge {

/// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same, with the verify subcommand running `checks` instead of the default suite.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const std::vector<Check>& checks);

}  // namespace ringforge

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdlab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,         // computed, verified or true
  kFalsified = 1,  // predicate false, counterexample found, check failed
  kUsage = 2,      // bad flags, unknown family or theorem id, parameters out of domain
  kUnknown = 3,    // search budget exhausted before a decision
  kMalformed = 4,  // unreadable graph6 or coloring JSON
};

/// Runs one command line (without the program name). Graph arguments equal to
/// "-" are read from `in`, one non-empty line each.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mdlab::cli

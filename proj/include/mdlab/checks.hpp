#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdlab/solver.hpp"

namespace mdlab {

struct CheckOptions {
  /// Largest graph (or product) order the suite visits; 0 selects the suite default.
  int max_order = 0;
  /// Orders above this are sampled instead of enumerated exhaustively.
  int exhaustive_order = 7;
  std::size_t sample = 300;
  std::uint64_t seed = 1;
  int jobs = 1;
  SearchConfig search;
};

struct CheckResult {
  std::string id;
  std::string name;
  std::string statement;
  int max_order = 0;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::size_t unknown = 0;            // cases the solver could not decide within budget
  std::vector<std::string> failures;  // first few, deterministic order
  std::vector<std::string> notes;
  SearchStats stats;

  bool passed() const { return failure_count == 0 && unknown == 0 && cases > 0; }
};

struct CheckInfo {
  std::string id;     // short statement id, e.g. "thm4.1"
  std::string alias;  // descriptive name, e.g. "cartesian-additivity"
  std::string statement;
  int default_max_order = 0;
};

const std::vector<CheckInfo>& check_catalog();

/// Maps an id or alias (case-insensitive) to the catalog id.
std::optional<std::string> resolve_check(std::string_view name);

/// Runs one suite. Throws DomainError for unknown ids.
CheckResult run_check(std::string_view name, const CheckOptions& options = {});

}  // namespace mdlab

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdlab/coloring.hpp"
#include "mdlab/graph.hpp"

namespace mdlab {

/// Switches for the individual bounds used to bracket md(G).
struct BoundToggles {
  bool two_connected = true;   // md <= floor(n/2) for 2-connected graphs
  bool closure = true;         // md = 1 for closures
  bool min_degree = true;      // md = 1 when delta >= floor(n/2) + 1
  bool theta_classes = true;   // md <= number of theta classes
  bool forced_classes = true;  // md <= number of classes after 4-cycle merging
  bool soft_layer = true;      // md <= md(greedy soft-layer reduction)
  bool matching_cut = true;    // md >= 2 if a matching cut exists
  bool unicyclic = true;       // md >= floor(n/2) for unicyclic graphs
};

struct SearchConfig {
  std::uint64_t node_budget = 500'000'000;
  std::chrono::milliseconds time_budget{std::chrono::minutes(10)};
  BoundToggles bounds;
  /// Feasibility sweep direction: from the upper bound down (default) or
  /// from the lower bound up.
  bool descending = true;
  /// Search unit: theta classes joined across opposite edges of 4-cycles
  /// (true) or plain theta classes (false).
  bool merge_four_cycles = true;
  int matching_cut_cap = 16;
};

enum class BoundKind { kUpper, kLower };

struct Bound {
  std::string name;
  BoundKind kind = BoundKind::kUpper;
  int value = 0;

  bool operator==(const Bound&) const = default;
};

enum class SearchOutcome { kFound, kInfeasible, kUnknown };

struct Feasibility {
  SearchOutcome outcome = SearchOutcome::kUnknown;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

enum class MdStatus { kExact, kUnknown };

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

/// md(G) with an extremal MD-coloring certificate and the bounds that were applied.
/// When status is kUnknown, value holds the best proven lower bound and the
/// certificate realizes it.
struct MdResult {
  MdStatus status = MdStatus::kUnknown;
  int value = 0;
  int lower = 0;
  int upper = 0;
  EdgeColoring certificate;
  std::vector<Bound> bounds;
  SearchStats stats;

  bool exact() const { return status == MdStatus::kExact; }
};

/// Every applicable upper bound on md(g); g connected with n >= 2.
std::vector<Bound> upper_bounds(const Graph& g, const SearchConfig& cfg = {});
/// Every applicable lower bound on md(g); g connected with n >= 2.
std::vector<Bound> lower_bounds(const Graph& g, const SearchConfig& cfg = {});
/// The tightest upper bound (earliest in evaluation order on ties).
Bound md_upper_bound(const Graph& g, const SearchConfig& cfg = {});
/// The tightest lower bound.
Bound md_lower_bound(const Graph& g, const SearchConfig& cfg = {});

/// An MD-coloring of g with exactly k colors, none, or unknown when the
/// budget runs out.
Feasibility md_feasible(const Graph& g, int k, const SearchConfig& cfg = {});

/// Exact md(g) by block decomposition and per-block feasibility sweeps.
/// Throws GraphError for disconnected or empty graphs. md(K_1) = 0.
MdResult md_exact(const Graph& g, const SearchConfig& cfg = {});

inline constexpr std::size_t kOracleMaxEdges = 10;

/// Brute force over every set partition of the edge set (restricted growth
/// strings). Shares no pruning with md_exact. Throws CapacityError when
/// m > 10 and GraphError for disconnected input.
int md_oracle(const Graph& g);

}  // namespace mdlab

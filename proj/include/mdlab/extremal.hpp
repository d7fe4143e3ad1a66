#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdlab/graph.hpp"
#include "mdlab/solver.hpp"

namespace mdlab {

/// Minimum edge count forcing md <= r on connected graphs of order n.
/// Needs n >= 2 and 1 <= r <= n-1.
std::int64_t threshold_f(int n, int r);

/// Maximum edge count guaranteeing md >= r on connected graphs of order n.
/// Needs n >= 2 and 1 <= r <= n-1.
std::int64_t threshold_g(int n, int r);

/// e(H_nr(n, r)); needs n >= 6 and 3 <= r <= floor(n/2).
std::int64_t mu(int n, int r);

inline constexpr int kEnumerationCap = 8;

/// Minimum adjacency code over the vertex orders that list vertices by
/// non-increasing degree. Pairs (i, j), i < j, are read column by column
/// (j = 1, 2, ...; i = 0..j-1), first pair most significant. Needs n <= 11.
std::uint64_t canonical_code(const Graph& g);
/// The relabeling of g realizing canonical_code(g).
Graph canonical_form(const Graph& g);
Graph from_canonical_code(int n, std::uint64_t code);

/// One canonical representative per isomorphism class of connected graphs of
/// order n, sorted by canonical code. Throws CapacityError above max_order.
std::vector<Graph> enumerate_connected(int n, int max_order = kEnumerationCap);

struct CensusOptions {
  SearchConfig search;
  int jobs = 1;
  int max_order = kEnumerationCap;
};

struct CensusEntry {
  Graph graph;
  std::string graph6;
  MdResult md;
};

/// md of every connected graph of one order, computed once and shared by the
/// threshold checks.
class Census {
 public:
  /// Built-in enumeration.
  static Census enumerate(int n, const CensusOptions& options = {});
  /// External catalog (e.g. a graph6 file). Every graph must be connected of
  /// order n; isomorphic duplicates are dropped.
  static Census from_graphs(int n, const std::vector<Graph>& graphs, const CensusOptions& options = {});

  int order() const { return n_; }
  const std::vector<CensusEntry>& entries() const { return entries_; }
  const CensusOptions& options() const { return options_; }
  SearchStats stats() const { return stats_; }

 private:
  void evaluate();

  int n_ = 0;
  CensusOptions options_;
  std::vector<CensusEntry> entries_;
  SearchStats stats_;
};

struct ThresholdReport {
  char which = 'f';  // 'f' or 'g'
  int n = 0;
  int r = 0;
  std::int64_t threshold = 0;
  bool verified = false;
  std::vector<std::string> counterexamples;  // graph6, sorted
  std::vector<std::string> inconclusive;     // graph6 of budget-exhausted graphs that could matter
  std::optional<std::string> witness;        // graph6 of the sharpness graph
  std::optional<int> witness_md;
  /// "construction", "sweep", "domain-boundary" (no connected graph of order
  /// n has the required edge count, so sharpness holds vacuously) or "none".
  std::string witness_source = "none";
  bool construction_checked = false;  // a constructed witness was tried
  bool construction_ok = false;
  std::size_t graphs_checked = 0;
  SearchStats stats;
};

/// Every connected graph with e >= f(n,r) has md <= r, and some graph with
/// e = f(n,r) - 1 has md >= r + 1.
ThresholdReport verify_f(const Census& census, int r);
/// Every connected graph with e <= g(n,r) has md >= r, and some graph with
/// e = g(n,r) + 1 has md < r.
ThresholdReport verify_g(const Census& census, int r);

}  // namespace mdlab

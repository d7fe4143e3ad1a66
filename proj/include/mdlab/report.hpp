#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "mdlab/analysis.hpp"
#include "mdlab/coloring.hpp"
#include "mdlab/extremal.hpp"
#include "mdlab/graph.hpp"
#include "mdlab/solver.hpp"

namespace mdlab {

using Json = nlohmann::json;

// Every report is one JSON object. Timing-dependent fields live under the
// "stats" key; everything else is the canonical part, byte-stable across runs.

Json md_report(const Graph& g, const MdResult& result);
Json threshold_report(const ThresholdReport& report);
Json closure_report(const Graph& g, const ThetaPartition& theta, bool closure);
Json verification_report(const Graph& g, const EdgeColoring& c, const MdCheck& check);

/// The report without its "stats" member.
Json canonical_part(const Json& report);

/// Coloring files: {"graph6": "...", "colors": [c1, ..., cm]} with colors in
/// canonical edge order. Throws ParseError on malformed input.
std::pair<Graph, EdgeColoring> parse_coloring_json(std::string_view text);
Json coloring_json(const Graph& g, const EdgeColoring& c);

std::string to_string(MdStatus status);
std::string to_string(BoundKind kind);

}  // namespace mdlab

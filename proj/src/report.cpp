#include "mdlab/report.hpp"

#include "mdlab/errors.hpp"
#include "mdlab/graph6.hpp"

namespace mdlab {

std::string to_string(MdStatus status) { return status == MdStatus::kExact ? "exact" : "unknown"; }

std::string to_string(BoundKind kind) { return kind == BoundKind::kUpper ? "upper" : "lower"; }

namespace {

Json stats_json(const SearchStats& s) { return {{"nodes", s.nodes}, {"elapsed_ms", s.elapsed_ms}}; }

}  // namespace

Json md_report(const Graph& g, const MdResult& result) {
  Json bounds = Json::array();
  for (const Bound& b : result.bounds) bounds.push_back({{"name", b.name}, {"kind", to_string(b.kind)}, {"value", b.value}});
  return {
      {"graph6", to_graph6(g)},
      {"order", g.order()},
      {"size", g.size()},
      {"status", to_string(result.status)},
      {"value", result.value},
      {"lower", result.lower},
      {"upper", result.upper},
      {"certificate", result.certificate.colors()},
      {"bounds", bounds},
      {"stats", stats_json(result.stats)},
  };
}

Json threshold_report(const ThresholdReport& r) {
  Json out = {
      {"function", std::string(1, r.which)},
      {"n", r.n},
      {"r", r.r},
      {"threshold", r.threshold},
      {"verified", r.verified},
      {"counterexamples", r.counterexamples},
      {"inconclusive", r.inconclusive},
      {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
      {"witness_md", r.witness_md ? Json(*r.witness_md) : Json(nullptr)},
      {"witness_source", r.witness_source},
      {"construction_checked", r.construction_checked},
      {"construction_ok", r.construction_ok},
      {"graphs_checked", r.graphs_checked},
      {"stats", stats_json(r.stats)},
  };
  return out;
}

Json closure_report(const Graph& g, const ThetaPartition& theta, bool closure) {
  std::size_t covered = 0;
  for (bool c : theta.covered) covered += c ? 1 : 0;
  return {
      {"graph6", to_graph6(g)},
      {"closure", closure},
      {"theta_classes", theta.classes.size()},
      {"gadgets", theta.gadget_count()},
      {"covered_edges", covered},
      {"size", g.size()},
  };
}

Json verification_report(const Graph& g, const EdgeColoring& c, const MdCheck& check) {
  Json witnesses = Json::array();
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) witnesses.push_back({u, v, check.certificate.witness(u, v)});
  }
  Json unseparated = Json::array();
  for (const Edge& e : check.certificate.unseparated()) unseparated.push_back({e.u, e.v});
  return {
      {"graph6", to_graph6(g)},
      {"md_coloring", check.md},
      {"colors_used", c.k()},
      {"witnesses", witnesses},
      {"unseparated", unseparated},
  };
}

Json canonical_part(const Json& report) {
  if (report.is_array()) {
    Json out = Json::array();
    for (const Json& r : report) out.push_back(canonical_part(r));
    return out;
  }
  if (!report.is_object()) return report;
  Json out = report;
  out.erase("stats");
  for (auto& [key, value] : out.items()) {
    if (value.is_object() || value.is_array()) value = canonical_part(value);
  }
  return out;
}

std::pair<Graph, EdgeColoring> parse_coloring_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("coloring JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("graph6") || !doc["graph6"].is_string()) {
    throw ParseError("coloring JSON: missing string field \"graph6\"");
  }
  if (!doc.contains("colors") || !doc["colors"].is_array()) {
    throw ParseError("coloring JSON: missing array field \"colors\"");
  }
  Graph g = from_graph6(doc["graph6"].get<std::string>());
  std::vector<Color> colors;
  for (const Json& c : doc["colors"]) {
    if (!c.is_number_integer()) throw ParseError("coloring JSON: colors must be integers");
    colors.push_back(c.get<Color>());
  }
  try {
    EdgeColoring c(g, std::move(colors));
    return {std::move(g), std::move(c)};
  } catch (const GraphError& e) {
    throw ParseError(std::string("coloring JSON: ") + e.what());
  }
}

Json coloring_json(const Graph& g, const EdgeColoring& c) { return {{"graph6", to_graph6(g)}, {"colors", c.colors()}}; }

}  // namespace mdlab

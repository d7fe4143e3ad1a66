#include "mdlab/families.hpp"

#include <algorithm>
#include <array>

#include "mdlab/errors.hpp"

namespace mdlab {

namespace {

struct FamilyInfo {
  FamilyKind kind;
  const char* name;
  std::size_t arity;
  std::vector<const char*> aliases;
};

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {FamilyKind::kPath, "path", 1, {"P"}},
      {FamilyKind::kCycle, "cycle", 1, {"C"}},
      {FamilyKind::kComplete, "complete", 1, {"K"}},
      {FamilyKind::kCompleteBipartite, "complete_bipartite", 2, {"K_ab"}},
      {FamilyKind::kCompleteMinusEdge, "complete_minus_edge", 1, {"K_minus"}},
      {FamilyKind::kStar, "star", 1, {}},
      {FamilyKind::kSemiWheel, "semi_wheel", 1, {"SW"}},
      {FamilyKind::kD, "D", 1, {}},
      {FamilyKind::kF, "F", 1, {}},
      {FamilyKind::kH, "H", 1, {}},
      {FamilyKind::kHnr, "H_nr", 2, {}},
      {FamilyKind::kCliqueMatchingClique, "clique_matching_clique", 1, {}},
      {FamilyKind::kCrown, "crown", 1, {}},
      {FamilyKind::kFExtremal, "f_extremal", 2, {"thm33_G1"}},
      {FamilyKind::kFSharp, "f_sharp", 2, {"thm33_G2"}},
      {FamilyKind::kCliqueTail, "clique_tail", 2, {"T_k"}},
  };
  return table;
}

const FamilyInfo& info(FamilyKind kind) {
  for (const auto& entry : family_table()) {
    if (entry.kind == kind) return entry;
  }
  throw DomainError("unknown family kind");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::string name_with(const char* prefix, int i) { return prefix + std::to_string(i); }

void add_clique(std::vector<Edge>& edges, int first, int count) {
  for (int a = first; a < first + count; ++a) {
    for (int b = a + 1; b < first + count; ++b) edges.push_back({a, b});
  }
}

// Semi-wheel on hub 0 and path 1..k, with the spokes to v_i for i in
// [first_sub, last_sub] replaced by u - w_i - v_i; w_i = k + i - 1.
NamedGraph subdivided_semi_wheel(int k, int first_sub, int last_sub) {
  std::vector<Edge> edges;
  NamedGraph out;
  out.names.emplace_back("u", 0);
  for (int i = 1; i <= k; ++i) out.names.emplace_back(name_with("v", i), i);
  for (int i = 1; i < k; ++i) edges.push_back({i, i + 1});
  int n = k + 1;
  for (int i = 1; i <= k; ++i) {
    if (i >= first_sub && i <= last_sub) {
      const int w = k + i - 1;
      edges.push_back({0, w});
      edges.push_back(make_edge(w, i));
      out.names.emplace_back(name_with("w", i), w);
      n = std::max(n, w + 1);
    } else {
      edges.push_back({0, i});
    }
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

// Endpoints used to attach a path to H(m) for odd m >= 3.
std::array<Vertex, 2> attachment_points(int m) {
  if (m == 3) return {0, 1};
  const int k = (m + 1) / 2;  // H(m) = D(k): v1 = 1, vk = k
  return {1, k};
}

}  // namespace

std::string family_name(FamilyKind kind) { return info(kind).name; }

std::size_t family_arity(FamilyKind kind) { return info(kind).arity; }

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (const auto& entry : family_table()) {
    if (name == entry.name) return entry.kind;
    for (const char* alias : entry.aliases) {
      if (name == alias) return entry.kind;
    }
  }
  return std::nullopt;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& entry : family_table()) out.emplace_back(entry.name);
  return out;
}

Graph path_graph(int n) {
  require(n >= 1 && n <= kMaxVertices, "path: need 1 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle: need 3 <= n <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  require(n >= 1 && n <= kMaxVertices, "complete: need 1 <= n <= 64");
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 1 && b >= 1 && a + b <= kMaxVertices, "complete_bipartite: need a, b >= 1 and a + b <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, std::move(edges));
}

Graph complete_minus_edge(int n) {
  require(n >= 2 && n <= kMaxVertices, "complete_minus_edge: need 2 <= n <= 64");
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  edges.erase(edges.begin());  // the edge 01
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  require(leaves >= 1 && leaves < kMaxVertices, "star: need 1 <= leaves <= 63");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

NamedGraph semi_wheel(int k) {
  require(k >= 1 && k < kMaxVertices, "semi_wheel: need 1 <= k <= 63");
  return subdivided_semi_wheel(k, 1, 0);
}

NamedGraph d_graph(int k) {
  require(k >= 3 && 2 * k - 1 <= kMaxVertices, "D: need 3 <= k <= 32");
  return subdivided_semi_wheel(k, 2, k - 1);
}

NamedGraph f_graph(int k) {
  require(k >= 4 && 2 * k - 2 <= kMaxVertices, "F: need 4 <= k <= 33");
  return subdivided_semi_wheel(k, 2, k - 2);
}

NamedGraph h_graph(int n) {
  require(n >= 1 && n <= kMaxVertices, "H: need 1 <= n <= 64");
  if (n <= 3) return {complete_graph(n), {}};
  if (n == 4) return {complete_minus_edge(4), {}};
  if (n % 2 == 1) return d_graph((n + 1) / 2);
  return f_graph((n + 2) / 2);
}

Graph attach_path(const Graph& g, Vertex a, Vertex b, int length) {
  const int n = g.order();
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw GraphError("attach_path needs two distinct vertices of g");
  if (length < 1) throw GraphError("attach_path needs a path with at least one edge");
  if (length == 1 && g.has_edge(a, b)) throw GraphError("attach_path: a one-edge path would duplicate an edge");
  const int interior = length - 1;
  if (n + interior > kMaxVertices) throw CapacityError("attach_path: result exceeds 64 vertices");
  std::vector<Edge> edges = g.edges();
  Vertex prev = a;
  for (int i = 0; i < interior; ++i) {
    edges.push_back(make_edge(prev, n + i));
    prev = n + i;
  }
  edges.push_back(make_edge(prev, b));
  return Graph(n + interior, std::move(edges));
}

NamedGraph h_nr_graph(int n, int r) {
  require(n >= 6, "H_nr: need n >= 6");
  require(r >= 3 && r <= n / 2, "H_nr: need 3 <= r <= floor(n/2)");
  require(n <= kMaxVertices, "H_nr: need n <= 64");
  if (n % 2 == 0 && 2 * r == n) return {cycle_graph(n), {}};
  const int m = n % 2 == 0 ? n - 2 * r + 1 : n - 2 * r + 2;
  const int length = n % 2 == 0 ? 2 * r : 2 * r - 1;
  NamedGraph base = h_graph(m);
  const auto [a, b] = attachment_points(m);
  NamedGraph out{attach_path(base.graph, a, b, length), base.names};
  out.names.emplace_back("attach1", a);
  out.names.emplace_back("attach2", b);
  return out;
}

NamedGraph clique_matching_clique(int n) {
  require(n >= 2 && n <= kMaxVertices, "clique_matching_clique: need 2 <= n <= 64");
  const int k = n / 2;
  std::vector<Edge> edges;
  NamedGraph out;
  add_clique(edges, 0, k);
  add_clique(edges, k, k);
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, k + i});
    out.names.emplace_back(name_with("v", i + 1), i);
    out.names.emplace_back(name_with("u", i + 1), k + i);
  }
  if (n % 2 == 1) {
    // Extra vertex joined to the whole first clique keeps the minimum degree at floor(n/2).
    for (int i = 0; i < k; ++i) edges.push_back({i, 2 * k});
    out.names.emplace_back("x", 2 * k);
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

Graph crown_graph(int n) {
  require(n >= 2 && 2 * n <= kMaxVertices, "crown: need 2 <= n <= 32");
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < n; ++t) {
      if (j != t) edges.push_back({j, n + t});
    }
  }
  return Graph(2 * n, std::move(edges));
}

Graph clique_tail_graph(int n, int k) {
  require(n >= 2 && n <= kMaxVertices, "clique_tail: need 2 <= n <= 64");
  require(k >= 1 && k <= n - 1, "clique_tail: need 1 <= k <= n-1");
  const int c = n - k + 1;
  std::vector<Edge> edges;
  add_clique(edges, 0, c);
  for (int v = c; v < n; ++v) edges.push_back({v - 1, v});
  return Graph(n, std::move(edges));
}

Graph f_extremal_graph(int n, int r) {
  require(n >= 3 && n <= kMaxVertices, "f_extremal: need 3 <= n <= 64");
  require(r >= 1 && r <= n - 2, "f_extremal: need 1 <= r <= n-2");
  const int b = n - r + 1;  // order of the non-trivial block
  std::vector<Edge> edges;
  add_clique(edges, 0, b - 1);
  edges.push_back({0, b - 1});
  edges.push_back({1, b - 1});
  for (int v = b; v < n; ++v) edges.push_back({v - 1, v});
  return Graph(n, std::move(edges));
}

Graph f_sharp_graph(int n, int r) {
  require(n >= 3 && n <= kMaxVertices, "f_sharp: need 3 <= n <= 64");
  require(r >= 1 && r <= n - 2, "f_sharp: need 1 <= r <= n-2");
  return clique_tail_graph(n, r + 1);
}

NamedGraph build(const FamilySpec& spec) {
  const FamilyInfo& fam = info(spec.kind);
  if (spec.params.size() != fam.arity) {
    throw DomainError(std::string(fam.name) + ": expected " + std::to_string(fam.arity) + " parameter(s), got " +
                      std::to_string(spec.params.size()));
  }
  const auto p = [&](std::size_t i) { return spec.params[i]; };
  switch (spec.kind) {
    case FamilyKind::kPath: return {path_graph(p(0)), {}};
    case FamilyKind::kCycle: return {cycle_graph(p(0)), {}};
    case FamilyKind::kComplete: return {complete_graph(p(0)), {}};
    case FamilyKind::kCompleteBipartite: return {complete_bipartite_graph(p(0), p(1)), {}};
    case FamilyKind::kCompleteMinusEdge: return {complete_minus_edge(p(0)), {}};
    case FamilyKind::kStar: return {star_graph(p(0)), {{"center", 0}}};
    case FamilyKind::kSemiWheel: return semi_wheel(p(0));
    case FamilyKind::kD: return d_graph(p(0));
    case FamilyKind::kF: return f_graph(p(0));
    case FamilyKind::kH: return h_graph(p(0));
    case FamilyKind::kHnr: return h_nr_graph(p(0), p(1));
    case FamilyKind::kCliqueMatchingClique: return clique_matching_clique(p(0));
    case FamilyKind::kCrown: return {crown_graph(p(0)), {}};
    case FamilyKind::kFExtremal: return {f_extremal_graph(p(0), p(1)), {}};
    case FamilyKind::kFSharp: return {f_sharp_graph(p(0), p(1)), {}};
    case FamilyKind::kCliqueTail: return {clique_tail_graph(p(0), p(1)), {}};
  }
  throw DomainError("unknown family kind");
}

EdgeColoring h_nr_coloring(int n, int r) {
  const NamedGraph h = h_nr_graph(n, r);
  if (n % 2 == 0 && 2 * r == n) return cycle_md_coloring(n);
  const int m = n % 2 == 0 ? n - 2 * r + 1 : n - 2 * r + 2;
  const Color base_color = n % 2 == 0 ? 1 : r;
  const auto [a, b] = attachment_points(m);
  // Path vertices in order: a, m, m+1, ..., n-1, b.
  std::vector<Vertex> walk{a};
  for (Vertex v = m; v < n; ++v) walk.push_back(v);
  walk.push_back(b);
  std::vector<Color> colors(h.graph.size(), base_color);
  for (std::size_t i = 1; i < walk.size(); ++i) {
    colors[*h.graph.edge_index(walk[i - 1], walk[i])] = static_cast<Color>((i - 1) % static_cast<std::size_t>(r)) + 1;
  }
  return EdgeColoring(h.graph, std::move(colors));
}

EdgeColoring cycle_md_coloring(int n) {
  require(n >= 3, "cycle coloring: need n >= 3");
  const Graph c = cycle_graph(n);
  const int half = n / 2;
  std::vector<Color> colors(c.size());
  for (int i = 1; i <= n; ++i) {
    const Vertex a = i - 1;
    const Vertex b = i % n;
    colors[*c.edge_index(a, b)] = ((i - 1) % half) + 1;
  }
  return EdgeColoring(c, std::move(colors));
}

}  // namespace mdlab

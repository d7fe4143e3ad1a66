#include "mdlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "mdlab/errors.hpp"

namespace mdlab {

namespace {

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

// Vertices reachable from `start` inside the vertex set `within`.
VertexMask reach(const Graph& g, Vertex start, VertexMask within) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbor_mask(std::countr_zero(f));
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::string edge_text(Edge e) {
  std::ostringstream out;
  out << "(" << e.u << "," << e.v << ")";
  return out.str();
}

}  // namespace

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge " + edge_text(e) + " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw GraphError("duplicate edge " + edge_text(*dup));
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  masks_.assign(static_cast<std::size_t>(n), 0);
  edge_ids_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    masks_[u] |= bit(v);
    masks_[v] |= bit(u);
    edge_ids_[static_cast<std::size_t>(u * n + v)] = static_cast<int>(i);
    edge_ids_[static_cast<std::size_t>(v * n + u)] = static_cast<int>(i);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(n_));
  }
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

VertexMask Graph::neighbor_mask(Vertex v) const { return masks_[static_cast<std::size_t>(v)]; }

VertexMask Graph::all_vertices_mask() const {
  return n_ == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[v].size());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  return (masks_[a] & bit(b)) != 0;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const int id = edge_ids_[static_cast<std::size_t>(a * n_ + b)];
  if (id < 0) return std::nullopt;
  return static_cast<std::size_t>(id);
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

int min_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = v == 0 ? g.degree(v) : std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                        g.neighbors(b).end(), std::back_inserter(out));
  return out;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.all_vertices_mask()); }

bool is_connected_within(const Graph& g, VertexMask within) {
  if (within == 0) return true;
  return reach(g, std::countr_zero(within), within) == within;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  VertexMask left = g.all_vertices_mask();
  while (left != 0) {
    const VertexMask comp = reach(g, std::countr_zero(left), left);
    std::vector<Vertex> members;
    for (VertexMask m = comp; m != 0; m &= m - 1) members.push_back(std::countr_zero(m));
    out.push_back(std::move(members));
    left &= ~comp;
  }
  return out;
}

Transformed induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  VertexMask chosen = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    if (chosen & bit(v)) throw GraphError("vertex " + std::to_string(v) + " listed twice");
    chosen |= bit(v);
  }
  VertexMap map{std::vector<Vertex>(static_cast<std::size_t>(g.order()), kNoImage), 0};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (chosen & bit(v)) map.image[v] = map.new_order++;
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if ((chosen & bit(e.u)) && (chosen & bit(e.v))) kept.push_back({map[e.u], map[e.v]});
  }
  return {Graph(map.new_order, std::move(kept)), std::move(map)};
}

Transformed delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("cannot delete vertex " + std::to_string(v) + ": out of range");
  std::vector<Vertex> keep;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != v) keep.push_back(w);
  }
  return induced_subgraph(g, keep);
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<char> drop(g.size(), 0);
  for (const Edge& e : removed) {
    const auto idx = (e.u >= 0 && e.v >= 0 && e.u < g.order() && e.v < g.order()) ? g.edge_index(e.u, e.v)
                                                                                   : std::nullopt;
    if (!idx) throw GraphError("cannot delete " + edge_text(e) + ": not an edge");
    drop[*idx] = 1;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!drop[i]) kept.push_back(g.edge(i));
  }
  return Graph(g.order(), std::move(kept));
}

Graph spanning_subgraph(const Graph& g, std::span<const std::size_t> kept_edges) {
  std::vector<Edge> kept;
  kept.reserve(kept_edges.size());
  for (std::size_t i : kept_edges) {
    if (i >= g.size()) throw GraphError("edge index " + std::to_string(i) + " out of range");
    kept.push_back(g.edge(i));
  }
  return Graph(g.order(), std::move(kept));
}

Transformed contract_edge_set(const Graph& g, std::span<const Edge> contracted) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : contracted) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.has_edge(e.u, e.v)) {
      throw GraphError("cannot contract " + edge_text(e) + ": not an edge");
    }
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  VertexMap map{std::vector<Vertex>(static_cast<std::size_t>(g.order()), kNoImage), 0};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (find(v) == v) map.image[v] = map.new_order++;
  }
  for (Vertex v = 0; v < g.order(); ++v) map.image[v] = map.image[find(v)];
  std::vector<Edge> merged;
  for (const Edge& e : g.edges()) {
    const Vertex a = map[e.u];
    const Vertex b = map[e.v];
    if (a != b) merged.push_back(make_edge(a, b));
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return {Graph(map.new_order, std::move(merged)), std::move(map)};
}

Graph subdivide_edge(const Graph& g, Edge e) {
  const Edge key = make_edge(e.u, e.v);
  if (key.u < 0 || key.v >= g.order() || !g.has_edge(key.u, key.v)) {
    throw GraphError("cannot subdivide " + edge_text(e) + ": not an edge");
  }
  if (g.order() >= kMaxVertices) throw GraphError("cannot subdivide: graph already has the maximum order");
  const Vertex mid = g.order();
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f != key) edges.push_back(f);
  }
  edges.push_back({key.u, mid});
  edges.push_back({key.v, mid});
  return Graph(g.order() + 1, std::move(edges));
}

Transformed split_off(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("cannot split off at vertex " + std::to_string(v) + ": out of range");
  if (g.degree(v) != 2) {
    throw GraphError("cannot split off at vertex " + std::to_string(v) + ": degree is " + std::to_string(g.degree(v)) +
                     ", expected 2");
  }
  const Vertex a = g.neighbors(v)[0];
  const Vertex b = g.neighbors(v)[1];
  if (g.has_edge(a, b)) {
    throw GraphError("cannot split off at vertex " + std::to_string(v) + ": neighbors " + std::to_string(a) + " and " +
                     std::to_string(b) + " are already adjacent");
  }
  Transformed removed = delete_vertex(g, v);
  std::vector<Edge> edges = removed.graph.edges();
  edges.push_back(make_edge(removed.map[a], removed.map[b]));
  return {Graph(removed.graph.order(), std::move(edges)), std::move(removed.map)};
}

bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

std::optional<int> odd_girth(const Graph& g) {
  // A BFS layer edge (equal distances d) closes an odd walk of length 2d+1
  // through the root; the minimum over all roots is the odd girth.
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        } else if (dist[y] == dist[x]) {
          const int length = 2 * dist[x] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    const VertexMask comp = reach(g, v, g.all_vertices_mask()) & ~bit(v);
    if (!is_connected_within(g, comp)) out.push_back(v);
  }
  return out;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g); }

bool has_pendent_edge(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) return true;
  }
  return false;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mdlab

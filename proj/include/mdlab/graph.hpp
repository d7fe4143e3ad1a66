#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdlab {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Hard upper bound on the order of any Graph value (adjacency is kept as 64-bit masks).
inline constexpr int kMaxVertices = 64;

/// Unordered vertex pair stored with u < v once it is part of a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Marker used by VertexMap for vertices that have no image (deleted vertices).
inline constexpr Vertex kNoImage = -1;

/// Maps old vertex ids to new ids after a structural transform.
struct VertexMap {
  std::vector<Vertex> image;  // image[old] = new id or kNoImage
  int new_order = 0;

  Vertex operator[](Vertex old) const { return image[static_cast<std::size_t>(old)]; }
  bool operator==(const VertexMap&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept in canonical form (u < v, sorted, duplicate free), so
/// two Graph values compare equal iff they have the same order and edge list.
/// Edge indices used throughout the library refer to positions in edges().
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws GraphError on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  const std::vector<Vertex>& neighbors(Vertex v) const;
  VertexMask neighbor_mask(Vertex v) const;
  VertexMask all_vertices_mask() const;
  int degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of edge ab in edges(), or nullopt.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexMask> masks_;
  std::vector<int> edge_ids_;  // n*n, -1 for non-edges
};

/// A graph produced by a transform together with the old -> new vertex map.
struct Transformed {
  Graph graph;
  VertexMap map;
};

int degree(const Graph& g, Vertex v);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b);

/// The 0-vertex graph counts as connected.
bool is_connected(const Graph& g);
/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
/// Connectivity of the subgraph induced by the vertex set `within` (empty set counts as connected).
bool is_connected_within(const Graph& g, VertexMask within);

/// Removes v; survivors keep their relative order.
Transformed delete_vertex(const Graph& g, Vertex v);
/// Removes the given edges and keeps every vertex. Throws on non-edges.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);
/// Subgraph induced by `vertices` (any order, no repeats), relabeled order-preservingly.
Transformed induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Spanning subgraph keeping exactly the listed edge indices.
Graph spanning_subgraph(const Graph& g, std::span<const std::size_t> kept_edges);

/// Identifies the endpoints of every edge in `contracted` (transitively), then
/// drops loops and parallel edges. Each class of identified vertices takes the
/// position of its smallest member.
Transformed contract_edge_set(const Graph& g, std::span<const Edge> contracted);

/// Inserts a new vertex (id n) into edge e.
Graph subdivide_edge(const Graph& g, Edge e);

/// Replaces the two edges at a degree-2 vertex v by one edge joining its
/// neighbors. Rejects the case where the neighbors are already adjacent.
Transformed split_off(const Graph& g, Vertex v);

bool is_bipartite(const Graph& g);
/// Length of a shortest odd cycle; nullopt stands for +infinity (bipartite graphs).
std::optional<int> odd_girth(const Graph& g);

/// Cut vertices of g (per component), sorted.
std::vector<Vertex> cut_vertices(const Graph& g);
bool is_tree(const Graph& g);
bool has_pendent_edge(const Graph& g);

/// Attribute-free DOT rendering.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace mdlab

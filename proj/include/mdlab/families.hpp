#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdlab/coloring.hpp"
#include "mdlab/graph.hpp"

namespace mdlab {

enum class FamilyKind {
  kPath,                  // path(n): n vertices 0-1-...-(n-1)
  kCycle,                 // cycle(n)
  kComplete,              // complete(n)
  kCompleteBipartite,     // complete_bipartite(a, b), part A = 0..a-1
  kCompleteMinusEdge,     // complete_minus_edge(n), edge 01 removed
  kStar,                  // star(t) = K_{1,t}, center 0
  kSemiWheel,             // semi_wheel(k): hub u plus path v1..vk
  kD,                     // D(k), k >= 3: semi-wheel with spokes to v2..v(k-1) subdivided
  kF,                     // F(k), k >= 4: semi-wheel with spokes to v2..v(k-2) subdivided
  kH,                     // H(n): md-1 graph of order n with ceil(3(n-1)/2) edges
  kHnr,                   // H_nr(n, r): md-r graph at the sparse threshold
  kCliqueMatchingClique,  // two cliques of order floor(n/2) joined by a perfect matching
  kCrown,                 // crown(n): K_{n,n} minus a perfect matching
  kFExtremal,             // f_extremal(n, r): f(n,r) edges, md = r
  kFSharp,                // f_sharp(n, r): f(n,r)-1 edges, md = r+1
  kCliqueTail,            // clique_tail(n, k): K_{n-k+1} with a pendent path of k-1 edges
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<int> params;
};

/// A constructed graph plus the names of distinguished vertices (hub "u",
/// path vertices "v1".., subdivision vertices "w2".., attachment points).
struct NamedGraph {
  Graph graph;
  std::vector<std::pair<std::string, Vertex>> names;
};

/// Canonical family name (as accepted by parse_family).
std::string family_name(FamilyKind kind);
/// Number of integer parameters the family takes.
std::size_t family_arity(FamilyKind kind);
/// Accepts canonical names and their aliases ("thm33_G1", "T_k", "K", ...).
std::optional<FamilyKind> parse_family(std::string_view name);
std::vector<std::string> family_names();

/// Throws DomainError naming the violated parameter constraint.
NamedGraph build(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph complete_minus_edge(int n);
Graph star_graph(int leaves);
NamedGraph semi_wheel(int k);
NamedGraph d_graph(int k);
NamedGraph f_graph(int k);
NamedGraph h_graph(int n);
NamedGraph h_nr_graph(int n, int r);
NamedGraph clique_matching_clique(int n);
Graph crown_graph(int n);
Graph f_extremal_graph(int n, int r);
Graph f_sharp_graph(int n, int r);
Graph clique_tail_graph(int n, int k);

/// Identifies the ends of a fresh path with `length` edges with the distinct
/// vertices a and b of g. Interior path vertices get ids n, n+1, ... in order
/// from a towards b. Throws GraphError when a == b or out of range.
Graph attach_path(const Graph& g, Vertex a, Vertex b, int length);

/// The MD-coloring realizing md(H_nr(n, r)) = r on h_nr_graph(n, r).
EdgeColoring h_nr_coloring(int n, int r);

/// The floor(n/2)-color MD-coloring of cycle_graph(n): the i-th edge along
/// the cycle gets color ((i-1) mod floor(n/2)) + 1.
EdgeColoring cycle_md_coloring(int n);

}  // namespace mdlab

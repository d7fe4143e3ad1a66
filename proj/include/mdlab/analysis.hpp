#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mdlab/graph.hpp"

namespace mdlab {

/// One block of a connected graph: a maximal 2-connected subgraph or a bridge.
struct Block {
  std::vector<Vertex> vertices;    // sorted, global ids
  std::vector<std::size_t> edges;  // indices into the parent graph's edge list, sorted
  Graph graph;                     // induced block graph on 0..|vertices|-1
  std::vector<Vertex> to_parent;   // local id -> global id

  bool trivial() const { return vertices.size() == 2; }
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // ordered by (smallest vertex, vertex list)
  std::vector<Vertex> cut_vertices;
};

/// Throws GraphError when g is disconnected. The 1-vertex graph has no blocks.
BlockDecomposition block_decomposition(const Graph& g);

/// Partition of the edge set under the closure of "shares a triangle or a
/// K_{2,3}" with another edge.
struct ThetaPartition {
  std::vector<int> class_of;                     // edge index -> class id
  std::vector<std::vector<std::size_t>> classes;  // ordered by smallest edge index
  std::vector<char> covered;                      // edge lies in some triangle or K_{2,3}
  std::size_t triangle_count = 0;
  std::size_t k23_hub_pairs = 0;  // vertex pairs with >= 3 common neighbors

  std::size_t gadget_count() const { return triangle_count + k23_hub_pairs; }
};

ThetaPartition theta_classes(const Graph& g);

/// True iff g has an edge, every edge lies in a gadget and all edges form one class.
bool is_closure(const Graph& g);

/// Refinement of the theta partition that also merges opposite edges of every
/// 4-cycle. Every MD-coloring is constant on each part.
std::vector<std::vector<std::size_t>> forced_color_classes(const Graph& g);

inline constexpr int kDefaultMatchingCutCap = 16;

/// Matching cuts of a connected graph as sorted edge-index lists, ordered by
/// (size, lexicographic). With minimal_only, only matching bonds are returned.
/// Throws CapacityError above `max_order` vertices and GraphError on
/// disconnected input.
std::vector<std::vector<std::size_t>> find_matching_cuts(const Graph& g, bool minimal_only,
                                                         int max_order = kDefaultMatchingCutCap);

/// Early-exit existence test with the same cap semantics.
bool has_matching_cut(const Graph& g, int max_order = kDefaultMatchingCutCap);

/// The edges of a cut, validated as a matching and as an edge cut.
bool is_matching(const Graph& g, std::span<const std::size_t> edges);
bool is_edge_cut(const Graph& g, std::span<const std::size_t> edges);

struct SoftLayerResult {
  Graph reduced;
  std::vector<Vertex> removed;  // original ids, in removal order
  VertexMap map;                // original -> reduced
};

/// Greedy soft-layer: repeatedly delete the smallest vertex of degree >= 2
/// that is not a cut vertex of the current graph.
SoftLayerResult soft_layer_reduce(const Graph& g);

/// Maximum edge count of a connected graph with n vertices and r blocks.
std::int64_t max_edges_with_r_blocks(int n, int r);

}  // namespace mdlab

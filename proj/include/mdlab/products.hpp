#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mdlab/coloring.hpp"
#include "mdlab/graph.hpp"

namespace mdlab {

enum class ProductKind { kCartesian, kStrong, kLexicographic, kTensor };

std::string to_string(ProductKind kind);
/// Case-insensitive; accepts the full names and the short forms box, strong, lex, tensor.
std::optional<ProductKind> parse_product_kind(std::string_view name);

/// Vertex (u, v) gets id u * h.order() + v. Throws CapacityError beyond 64 vertices.
Graph product(const Graph& g, const Graph& h, ProductKind kind);

/// Each edge of the Cartesian product takes the color of its projection:
/// G-fiber edges keep cg, H-fiber edges take ch offset by the largest color of cg.
/// Throws GraphError unless cg and ch are MD-colorings of g and h.
EdgeColoring cartesian_md_coloring(const Graph& g, const EdgeColoring& cg, const Graph& h, const EdgeColoring& ch);

/// Whether the tensor product of two connected nontrivial graphs is
/// connected, i.e. at least one factor is not bipartite. Throws DomainError
/// on disconnected or single-vertex factors.
bool tensor_connected(const Graph& g, const Graph& h);

/// min of the two odd girths, an upper bound on md of the tensor product.
/// Throws DomainError when a factor is disconnected, has a pendent edge, or
/// both factors are bipartite.
int tensor_md_upper(const Graph& g, const Graph& h);

}  // namespace mdlab

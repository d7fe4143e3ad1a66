#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdlab/graph.hpp"

namespace mdlab {

using Color = int;

/// Identity of the graph a coloring belongs to: order, size and an edge-list hash.
struct GraphKey {
  int order = 0;
  std::size_t size = 0;
  std::uint64_t hash = 0;

  static GraphKey of(const Graph& g);
  bool operator==(const GraphKey&) const = default;
};

/// Edge coloring aligned with a graph's canonical edge order. Colors are
/// positive integers; `normalize` renumbers them to 1..k.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  /// Throws GraphError if the color count differs from g.size() or a color is < 1.
  EdgeColoring(const Graph& g, std::vector<Color> colors);

  const std::vector<Color>& colors() const { return colors_; }
  Color operator[](std::size_t edge) const { return colors_[edge]; }
  const GraphKey& key() const { return key_; }
  /// Number of distinct colors.
  int k() const { return k_; }
  bool matches(const Graph& g) const { return key_ == GraphKey::of(g); }
  /// True iff the colors used are exactly {1..k}.
  bool is_dense() const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  EdgeColoring(GraphKey key, std::vector<Color> colors);
  friend EdgeColoring normalize(const EdgeColoring& c);
  friend EdgeColoring merge_to_k(const EdgeColoring& c, int r);

  GraphKey key_;
  std::vector<Color> colors_;
  int k_ = 0;
};

/// For every unordered pair {u,v}, the smallest color whose removal separates
/// u from v, or 0 when no color does.
class SeparationCertificate {
 public:
  SeparationCertificate() = default;
  explicit SeparationCertificate(int n) : n_(n), witness_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int order() const { return n_; }
  Color witness(Vertex u, Vertex v) const { return witness_[static_cast<std::size_t>(u * n_ + v)]; }
  void set(Vertex u, Vertex v, Color c) {
    witness_[static_cast<std::size_t>(u * n_ + v)] = c;
    witness_[static_cast<std::size_t>(v * n_ + u)] = c;
  }
  /// Pairs (u < v) with no witness.
  std::vector<Edge> unseparated() const;

 private:
  int n_ = 0;
  std::vector<Color> witness_;
};

struct MdCheck {
  bool md = false;
  SeparationCertificate certificate;
};

/// The MD-coloring predicate with a per-pair certificate.
/// Throws GraphError when the coloring does not belong to g.
MdCheck is_md_coloring(const Graph& g, const EdgeColoring& c);

/// Boolean-only fast path over raw colors (aligned with g's edges, any
/// positive ids). No certificate, no graph-identity check.
bool is_md_coloring_fast(const Graph& g, std::span<const Color> colors);

/// Color M with 1 and the remaining edges with 2. Throws GraphError unless M
/// (edge indices) is a matching and an edge cut of g.
EdgeColoring matching_cut_coloring(const Graph& g, std::span<const std::size_t> cut);

/// Recolors every color >= r with r (after normalization if the palette is
/// not already {1..k}). Throws DomainError unless 1 <= r <= c.k().
EdgeColoring merge_to_k(const EdgeColoring& c, int r);

/// Renumbers colors by first occurrence in edge order. Idempotent.
EdgeColoring normalize(const EdgeColoring& c);

/// Restriction of c to a subgraph given as (edge index in g) per subgraph edge.
EdgeColoring restrict_coloring(const Graph& sub, const EdgeColoring& c, std::span<const std::size_t> parent_edges);

}  // namespace mdlab

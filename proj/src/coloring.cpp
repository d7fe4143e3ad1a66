#include "mdlab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "mdlab/analysis.hpp"
#include "mdlab/errors.hpp"

namespace mdlab {

namespace {

int distinct_count(const std::vector<Color>& colors) {
  return static_cast<int>(std::set<Color>(colors.begin(), colors.end()).size());
}

// Component of `start` under the given per-vertex neighbor masks.
VertexMask component(std::span<const VertexMask> adjacency, Vertex start) {
  VertexMask seen = VertexMask{1} << start;
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= adjacency[static_cast<std::size_t>(std::countr_zero(f))];
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

GraphKey GraphKey::of(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (const Edge& e : g.edges()) mix((static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint64_t>(e.v));
  return {g.order(), g.size(), h};
}

EdgeColoring::EdgeColoring(const Graph& g, std::vector<Color> colors) : EdgeColoring(GraphKey::of(g), std::move(colors)) {}

EdgeColoring::EdgeColoring(GraphKey key, std::vector<Color> colors) : key_(key), colors_(std::move(colors)) {
  if (colors_.size() != key_.size) {
    throw GraphError("coloring has " + std::to_string(colors_.size()) + " colors for a graph with " +
                     std::to_string(key_.size) + " edges");
  }
  for (Color c : colors_) {
    if (c < 1) throw GraphError("color ids must be positive (got " + std::to_string(c) + ")");
  }
  k_ = distinct_count(colors_);
}

bool EdgeColoring::is_dense() const {
  return colors_.empty() || *std::max_element(colors_.begin(), colors_.end()) == k_;
}

std::vector<Edge> SeparationCertificate::unseparated() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (witness(u, v) == 0) out.push_back({u, v});
    }
  }
  return out;
}

MdCheck is_md_coloring(const Graph& g, const EdgeColoring& c) {
  if (!c.matches(g)) throw GraphError("coloring does not belong to this graph");
  const int n = g.order();
  MdCheck out{true, SeparationCertificate(n)};
  std::vector<Color> palette(c.colors());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

  std::vector<VertexMask> adjacency(static_cast<std::size_t>(n));
  for (Color color : palette) {
    std::fill(adjacency.begin(), adjacency.end(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (c[i] == color) continue;
      const auto [u, v] = g.edge(i);
      adjacency[u] |= VertexMask{1} << v;
      adjacency[v] |= VertexMask{1} << u;
    }
    for (Vertex u = 0; u < n; ++u) {
      const VertexMask reach = component(adjacency, u);
      for (Vertex v = u + 1; v < n; ++v) {
        if (out.certificate.witness(u, v) == 0 && !((reach >> v) & 1)) out.certificate.set(u, v, color);
      }
    }
  }
  for (Vertex u = 0; u < n && out.md; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (out.certificate.witness(u, v) == 0) {
        out.md = false;
        break;
      }
    }
  }
  return out;
}

bool is_md_coloring_fast(const Graph& g, std::span<const Color> colors) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<Color> palette(colors.begin(), colors.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

  // separated[v]: vertices already split from v by some color.
  std::vector<VertexMask> separated(static_cast<std::size_t>(n), 0);
  std::vector<VertexMask> adjacency(static_cast<std::size_t>(n));
  for (Color color : palette) {
    std::fill(adjacency.begin(), adjacency.end(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (colors[i] == color) continue;
      const auto [u, v] = g.edge(i);
      adjacency[u] |= VertexMask{1} << v;
      adjacency[v] |= VertexMask{1} << u;
    }
    VertexMask left = g.all_vertices_mask();
    while (left != 0) {
      const VertexMask comp = component(adjacency, std::countr_zero(left));
      for (VertexMask m = comp; m != 0; m &= m - 1) separated[static_cast<std::size_t>(std::countr_zero(m))] |= ~comp;
      left &= ~comp;
    }
  }
  const VertexMask all = g.all_vertices_mask();
  for (Vertex v = 0; v < n; ++v) {
    if (((separated[v] | (VertexMask{1} << v)) & all) != all) return false;
  }
  return true;
}

EdgeColoring matching_cut_coloring(const Graph& g, std::span<const std::size_t> cut) {
  if (!is_matching(g, cut)) throw GraphError("matching-cut coloring: edge set is not a matching");
  if (!is_edge_cut(g, cut)) throw GraphError("matching-cut coloring: edge set is not an edge cut");
  std::vector<Color> colors(g.size(), 2);
  for (std::size_t e : cut) colors[e] = 1;
  return EdgeColoring(g, std::move(colors));
}

EdgeColoring normalize(const EdgeColoring& c) {
  std::map<Color, Color> relabel;
  std::vector<Color> colors;
  colors.reserve(c.colors().size());
  for (Color x : c.colors()) {
    auto [it, inserted] = relabel.try_emplace(x, static_cast<Color>(relabel.size()) + 1);
    colors.push_back(it->second);
  }
  return EdgeColoring(c.key(), std::move(colors));
}

EdgeColoring merge_to_k(const EdgeColoring& c, int r) {
  if (r < 1 || r > c.k()) {
    throw DomainError("merge_to_k needs 1 <= r <= " + std::to_string(c.k()) + " (got " + std::to_string(r) + ")");
  }
  const EdgeColoring base = c.is_dense() ? c : normalize(c);
  std::vector<Color> colors(base.colors());
  for (Color& x : colors) x = std::min(x, r);
  return EdgeColoring(base.key(), std::move(colors));
}

EdgeColoring restrict_coloring(const Graph& sub, const EdgeColoring& c, std::span<const std::size_t> parent_edges) {
  if (parent_edges.size() != sub.size()) throw GraphError("restriction needs one parent edge per subgraph edge");
  std::vector<Color> colors;
  colors.reserve(parent_edges.size());
  for (std::size_t e : parent_edges) {
    if (e >= c.colors().size()) throw GraphError("parent edge index out of range");
    colors.push_back(c[e]);
  }
  return EdgeColoring(sub, std::move(colors));
}

}  // namespace mdlab

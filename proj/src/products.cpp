#include "mdlab/products.hpp"

#include <algorithm>
#include <cctype>

#include "mdlab/errors.hpp"

namespace mdlab {

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::kCartesian: return "cartesian";
    case ProductKind::kStrong: return "strong";
    case ProductKind::kLexicographic: return "lexicographic";
    case ProductKind::kTensor: return "tensor";
  }
  return "?";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "cartesian" || s == "box") return ProductKind::kCartesian;
  if (s == "strong") return ProductKind::kStrong;
  if (s == "lexicographic" || s == "lex") return ProductKind::kLexicographic;
  if (s == "tensor" || s == "direct") return ProductKind::kTensor;
  return std::nullopt;
}

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng < 1 || nh < 1) throw GraphError("product factors need at least one vertex");
  if (ng * nh > kMaxVertices) {
    throw CapacityError("product order " + std::to_string(ng * nh) + " exceeds 64 vertices");
  }
  const auto id = [nh](Vertex u, Vertex v) { return u * nh + v; };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < ng; ++u) {
    for (Vertex v = 0; v < nh; ++v) {
      for (Vertex u2 = 0; u2 < ng; ++u2) {
        for (Vertex v2 = 0; v2 < nh; ++v2) {
          const int a = id(u, v);
          const int b = id(u2, v2);
          if (a >= b) continue;
          const bool gu = g.has_edge(u, u2);
          const bool hv = h.has_edge(v, v2);
          bool adjacent = false;
          switch (kind) {
            case ProductKind::kCartesian: adjacent = (gu && v == v2) || (u == u2 && hv); break;
            case ProductKind::kStrong: adjacent = (gu && v == v2) || (u == u2 && hv) || (gu && hv); break;
            case ProductKind::kLexicographic: adjacent = gu || (u == u2 && hv); break;
            case ProductKind::kTensor: adjacent = gu && hv; break;
          }
          if (adjacent) edges.push_back({a, b});
        }
      }
    }
  }
  return Graph(ng * nh, std::move(edges));
}

EdgeColoring cartesian_md_coloring(const Graph& g, const EdgeColoring& cg, const Graph& h, const EdgeColoring& ch) {
  if (!is_md_coloring(g, cg).md) throw GraphError("cartesian coloring: first coloring is not an MD-coloring");
  if (!is_md_coloring(h, ch).md) throw GraphError("cartesian coloring: second coloring is not an MD-coloring");
  const Graph p = product(g, h, ProductKind::kCartesian);
  const int nh = h.order();
  const Color offset = cg.colors().empty() ? 0 : *std::max_element(cg.colors().begin(), cg.colors().end());
  std::vector<Color> colors(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto [a, b] = p.edge(i);
    const Vertex u = a / nh, v = a % nh, u2 = b / nh, v2 = b % nh;
    colors[i] = v == v2 ? cg[*g.edge_index(u, u2)] : offset + ch[*h.edge_index(v, v2)];
  }
  return EdgeColoring(p, std::move(colors));
}

namespace {

void require_factor(const Graph& g, const char* which) {
  if (g.order() < 2) throw DomainError(std::string(which) + " factor must have at least two vertices");
  if (!is_connected(g)) throw DomainError(std::string(which) + " factor must be connected");
}

}  // namespace

bool tensor_connected(const Graph& g, const Graph& h) {
  require_factor(g, "first");
  require_factor(h, "second");
  return !is_bipartite(g) || !is_bipartite(h);
}

int tensor_md_upper(const Graph& g, const Graph& h) {
  require_factor(g, "first");
  require_factor(h, "second");
  if (has_pendent_edge(g)) throw DomainError("first factor has a pendent edge");
  if (has_pendent_edge(h)) throw DomainError("second factor has a pendent edge");
  const auto og = odd_girth(g);
  const auto oh = odd_girth(h);
  if (!og && !oh) throw DomainError("both factors are bipartite");
  if (!og) return *oh;
  if (!oh) return *og;
  return std::min(*og, *oh);
}

}  // namespace mdlab

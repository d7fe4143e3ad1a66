#include "mdlab/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

#include "mdlab/errors.hpp"

namespace mdlab {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<std::size_t>> collect_classes(DisjointSets& sets, std::size_t m) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<int> slot(m, -1);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t root = sets.find(e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[root])].push_back(e);
  }
  return classes;
}

std::size_t index_of(const Graph& g, Vertex a, Vertex b) { return *g.edge_index(a, b); }

void union_theta(const Graph& g, DisjointSets& sets, ThetaPartition* stats) {
  const int n = g.order();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [u, v] = g.edge(i);
    VertexMask common = g.neighbor_mask(u) & g.neighbor_mask(v);
    common &= ~((VertexMask{2} << v) - 1);  // apex > v: each triangle once
    for (; common != 0; common &= common - 1) {
      const Vertex w = std::countr_zero(common);
      sets.unite(i, index_of(g, u, w));
      sets.unite(i, index_of(g, v, w));
      if (stats) {
        ++stats->triangle_count;
        stats->covered[i] = stats->covered[index_of(g, u, w)] = stats->covered[index_of(g, v, w)] = 1;
      }
    }
  }
  // Any two K_{2,3} on the same hub pair {a,b} share edges, so the whole
  // star from a and b into their common neighborhood is one class.
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      VertexMask common = g.neighbor_mask(a) & g.neighbor_mask(b);
      if (std::popcount(common) < 3) continue;
      if (stats) ++stats->k23_hub_pairs;
      const std::size_t anchor = index_of(g, a, std::countr_zero(common));
      for (; common != 0; common &= common - 1) {
        const Vertex w = std::countr_zero(common);
        const std::size_t ea = index_of(g, a, w);
        const std::size_t eb = index_of(g, b, w);
        sets.unite(anchor, ea);
        sets.unite(anchor, eb);
        if (stats) stats->covered[ea] = stats->covered[eb] = 1;
      }
    }
  }
}

// Tarjan's biconnected components with an explicit edge stack.
struct BlockSearch {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::size_t> edge_stack;
  std::vector<std::vector<std::size_t>> found;
  int timer = 0;

  explicit BlockSearch(const Graph& graph)
      : g(graph), disc(static_cast<std::size_t>(graph.order()), -1), low(static_cast<std::size_t>(graph.order()), 0) {}

  void visit(Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Vertex w : g.neighbors(v)) {
      const std::size_t e = index_of(g, v, w);
      if (disc[w] < 0) {
        edge_stack.push_back(e);
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<std::size_t> block;
          while (true) {
            const std::size_t top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          found.push_back(std::move(block));
        }
      } else if (w != parent && disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw GraphError("block decomposition needs a connected graph");
  BlockDecomposition out;
  if (g.order() <= 1) return out;

  BlockSearch search(g);
  search.visit(0, -1);

  for (auto& edge_ids : search.found) {
    Block block;
    std::sort(edge_ids.begin(), edge_ids.end());
    VertexMask members = 0;
    for (std::size_t e : edge_ids) members |= (VertexMask{1} << g.edge(e).u) | (VertexMask{1} << g.edge(e).v);
    for (VertexMask m = members; m != 0; m &= m - 1) block.vertices.push_back(std::countr_zero(m));
    block.edges = std::move(edge_ids);
    Transformed induced = induced_subgraph(g, block.vertices);
    block.graph = std::move(induced.graph);
    block.to_parent = block.vertices;
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  std::vector<int> membership(static_cast<std::size_t>(g.order()), 0);
  for (const Block& b : out.blocks) {
    for (Vertex v : b.vertices) ++membership[v];
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (membership[v] > 1) out.cut_vertices.push_back(v);
  }
  return out;
}

ThetaPartition theta_classes(const Graph& g) {
  ThetaPartition out;
  out.covered.assign(g.size(), 0);
  DisjointSets sets(g.size());
  union_theta(g, sets, &out);
  out.classes = collect_classes(sets, g.size());
  out.class_of.assign(g.size(), -1);
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    for (std::size_t e : out.classes[c]) out.class_of[e] = static_cast<int>(c);
  }
  return out;
}

bool is_closure(const Graph& g) {
  if (g.size() == 0) return false;
  const ThetaPartition theta = theta_classes(g);
  return theta.classes.size() == 1 && std::all_of(theta.covered.begin(), theta.covered.end(), [](char c) { return c != 0; });
}

std::vector<std::vector<std::size_t>> forced_color_classes(const Graph& g) {
  DisjointSets sets(g.size());
  union_theta(g, sets, nullptr);
  // 4-cycles a-b-c-d: for every pair {a,c} and two common neighbors b,d.
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      const VertexMask common = g.neighbor_mask(a) & g.neighbor_mask(c);
      if (std::popcount(common) < 2) continue;
      for (VertexMask bs = common; bs != 0; bs &= bs - 1) {
        const Vertex b = std::countr_zero(bs);
        for (VertexMask ds = bs & (bs - 1); ds != 0; ds &= ds - 1) {
          const Vertex d = std::countr_zero(ds);
          sets.unite(index_of(g, a, b), index_of(g, c, d));
          sets.unite(index_of(g, b, c), index_of(g, d, a));
        }
      }
    }
  }
  return collect_classes(sets, g.size());
}

bool is_matching(const Graph& g, std::span<const std::size_t> edges) {
  VertexMask used = 0;
  for (std::size_t e : edges) {
    if (e >= g.size()) throw GraphError("edge index " + std::to_string(e) + " out of range");
    const VertexMask ends = (VertexMask{1} << g.edge(e).u) | (VertexMask{1} << g.edge(e).v);
    if (used & ends) return false;
    used |= ends;
  }
  return true;
}

bool is_edge_cut(const Graph& g, std::span<const std::size_t> edges) {
  std::vector<char> drop(g.size(), 0);
  for (std::size_t e : edges) {
    if (e >= g.size()) throw GraphError("edge index " + std::to_string(e) + " out of range");
    drop[e] = 1;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!drop[i]) kept.push_back(g.edge(i));
  }
  return !edges.empty() && !is_connected(Graph(g.order(), std::move(kept)));
}

namespace {

// Calls visit(side, crossing_edges) for every S containing vertex 0 whose
// crossing set is a matching; stops early when visit returns false.
template <typename Visit>
void for_each_matching_cut(const Graph& g, bool minimal_only, int max_order, Visit&& visit) {
  if (g.order() > max_order) {
    throw CapacityError("matching-cut search refuses graphs with more than " + std::to_string(max_order) +
                        " vertices (got " + std::to_string(g.order()) + ")");
  }
  if (!is_connected(g)) throw GraphError("matching-cut search needs a connected graph");
  const int n = g.order();
  if (n < 2) return;
  const VertexMask all = g.all_vertices_mask();
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  std::vector<std::size_t> crossing;
  for (std::uint64_t rest = 0; rest + 1 < total; ++rest) {
    const VertexMask side = 1 | (rest << 1);  // vertex 0 always in S, S != V
    bool matching = true;
    VertexMask touched = 0;
    crossing.clear();
    for (VertexMask s = side; s != 0 && matching; s &= s - 1) {
      const Vertex u = std::countr_zero(s);
      const VertexMask out = g.neighbor_mask(u) & ~side;
      if (out == 0) continue;
      if (std::popcount(out) > 1 || (touched & out)) {
        matching = false;
        break;
      }
      touched |= out;
      crossing.push_back(index_of(g, u, std::countr_zero(out)));
    }
    if (!matching) continue;
    if (minimal_only && !(is_connected_within(g, side) && is_connected_within(g, all & ~side))) continue;
    std::sort(crossing.begin(), crossing.end());
    if (!visit(crossing)) return;
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> find_matching_cuts(const Graph& g, bool minimal_only, int max_order) {
  std::vector<std::vector<std::size_t>> cuts;
  for_each_matching_cut(g, minimal_only, max_order, [&](const std::vector<std::size_t>& cut) {
    cuts.push_back(cut);
    return true;
  });
  std::sort(cuts.begin(), cuts.end(), [](const auto& a, const auto& b) {
    return std::forward_as_tuple(a.size(), a) < std::forward_as_tuple(b.size(), b);
  });
  return cuts;
}

bool has_matching_cut(const Graph& g, int max_order) {
  bool found = false;
  for_each_matching_cut(g, false, max_order, [&](const std::vector<std::size_t>&) {
    found = true;
    return false;
  });
  return found;
}

SoftLayerResult soft_layer_reduce(const Graph& g) {
  if (!is_connected(g)) throw GraphError("soft-layer reduction needs a connected graph");
  SoftLayerResult out{g, {}, {}};
  out.map.image.resize(static_cast<std::size_t>(g.order()));
  std::iota(out.map.image.begin(), out.map.image.end(), 0);
  out.map.new_order = g.order();
  std::vector<Vertex> original(out.map.image);  // current id -> original id

  while (true) {
    const std::vector<Vertex> cuts = cut_vertices(out.reduced);
    Vertex pick = kNoImage;
    for (Vertex v = 0; v < out.reduced.order(); ++v) {
      if (out.reduced.degree(v) >= 2 && !std::binary_search(cuts.begin(), cuts.end(), v)) {
        pick = v;
        break;
      }
    }
    if (pick == kNoImage) break;
    out.removed.push_back(original[pick]);
    Transformed next = delete_vertex(out.reduced, pick);
    for (Vertex& image : out.map.image) {
      if (image != kNoImage) image = next.map[image];
    }
    original.erase(original.begin() + pick);
    out.reduced = std::move(next.graph);
  }
  out.map.new_order = out.reduced.order();
  return out;
}

std::int64_t max_edges_with_r_blocks(int n, int r) {
  if (n < 2 || r < 1 || r > n - 1) {
    throw DomainError("max_edges_with_r_blocks needs 1 <= r <= n-1 (got n=" + std::to_string(n) +
                      ", r=" + std::to_string(r) + ")");
  }
  const std::int64_t big = n - r + 1;
  return big * (big - 1) / 2 + r - 1;
}

}  // namespace mdlab

#include "mdlab/checks.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "mdlab/analysis.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/extremal.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph6.hpp"
#include "mdlab/products.hpp"

namespace mdlab {

namespace {

constexpr std::size_t kMaxReportedFailures = 10;
constexpr int kColoringWitnessOrder = 30;

struct Ctx {
  const CheckOptions& opt;
  CheckResult& res;

  std::optional<int> md(const Graph& g) {
    const MdResult r = md_exact(g, opt.search);
    res.stats.nodes += r.stats.nodes;
    if (!r.exact()) {
      ++res.unknown;
      return std::nullopt;
    }
    return r.value;
  }

  std::optional<MdResult> solve(const Graph& g) {
    MdResult r = md_exact(g, opt.search);
    res.stats.nodes += r.stats.nodes;
    if (!r.exact()) {
      ++res.unknown;
      return std::nullopt;
    }
    return r;
  }

  template <typename Describe>
  void expect(bool ok, Describe describe) {
    ++res.cases;
    if (ok) return;
    ++res.failure_count;
    if (res.failures.size() < kMaxReportedFailures) res.failures.push_back(describe());
  }

  void note(std::string text) { res.notes.push_back(std::move(text)); }
};

std::string g6(const Graph& g) { return to_graph6(g); }

const std::vector<Graph>& connected_graphs(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_connected(n)).first;
  return it->second;
}

// Connected graphs of order 2..max_order; orders above exhaustive_order are sampled.
std::vector<Graph> graph_pool(const CheckOptions& opt, int max_order, int min_order = 2) {
  std::vector<Graph> out;
  for (int n = min_order; n <= max_order; ++n) {
    const auto& all = connected_graphs(n);
    if (n <= opt.exhaustive_order || all.size() <= opt.sample) {
      out.insert(out.end(), all.begin(), all.end());
      continue;
    }
    std::vector<std::size_t> idx(all.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(n));
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(opt.sample);
    std::sort(idx.begin(), idx.end());
    for (std::size_t i : idx) out.push_back(all[i]);
  }
  return out;
}

struct Named {
  std::string name;
  Graph graph;
};

// Factors used by the product suites.
std::vector<Named> product_catalog() {
  return {
      {"K2", complete_graph(2)},   {"P3", path_graph(3)},   {"P4", path_graph(4)},
      {"C3", cycle_graph(3)},      {"C4", cycle_graph(4)},  {"C5", cycle_graph(5)},
      {"K4", complete_graph(4)},   {"K1,3", star_graph(3)},
  };
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, std::move(edges));
}

std::vector<Named> extended_catalog() {
  std::vector<Named> out = product_catalog();
  out.push_back({"C6", cycle_graph(6)});
  out.push_back({"P6", path_graph(6)});
  out.push_back({"K2,3", complete_bipartite_graph(2, 3)});
  out.push_back({"Petersen", petersen()});
  return out;
}

std::string pair_name(const Named& a, const Named& b, const char* op) { return a.name + op + b.name; }

// Connected subgraphs of g with at least one edge, one per isomorphism class.
std::vector<Graph> connected_subgraphs(const Graph& g, bool pendent_free) {
  const std::size_t m = g.size();
  if (m > 16) throw CapacityError("subgraph enumeration needs at most 16 edges");
  std::set<std::pair<int, std::uint64_t>> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<int> id(static_cast<std::size_t>(g.order()), -1);
    int n = 0;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      const Edge e = g.edge(i);
      for (Vertex v : {e.u, e.v}) {
        if (id[v] < 0) id[v] = n++;
      }
      edges.push_back(make_edge(id[e.u], id[e.v]));
    }
    Graph sub(n, std::move(edges));
    if (!is_connected(sub)) continue;
    if (pendent_free && has_pendent_edge(sub)) continue;
    if (seen.insert({n, canonical_code(sub)}).second) out.push_back(canonical_form(sub));
  }
  return out;
}

std::vector<Edge> edges_of(const Graph& g, const std::vector<std::size_t>& idx) {
  std::vector<Edge> out;
  for (std::size_t i : idx) out.push_back(g.edge(i));
  return out;
}

// ---------------------------------------------------------------------------
// Suites

void oracle_equivalence(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order, 1)) {
    if (g.size() > kOracleMaxEdges) continue;
    const auto md = c.md(g);
    if (!md) continue;
    const int oracle = md_oracle(g);
    c.expect(*md == oracle, [&] {
      return g6(g) + ": solver " + std::to_string(*md) + ", oracle " + std::to_string(oracle);
    });
  }
}

void family_constants(Ctx& c, int max_order) {
  const auto want = [&](const std::string& name, const Graph& g, int expected) {
    const auto md = c.md(g);
    if (!md) return;
    c.expect(*md == expected, [&] {
      return name + " (" + g6(g) + "): md " + std::to_string(*md) + ", expected " + std::to_string(expected);
    });
  };
  for (int n = 2; n <= 7; ++n) want("K" + std::to_string(n), complete_graph(n), 1);
  for (int n = 4; n <= 7; ++n) want("K" + std::to_string(n) + "^-", complete_minus_edge(n), 1);
  for (int a = 2; a <= 7; ++a) {
    for (int t = 3; t <= 5; ++t) want("K" + std::to_string(a) + "," + std::to_string(t), complete_bipartite_graph(a, t), 1);
  }
  for (int n = 3; n <= 10; ++n) want("C" + std::to_string(n), cycle_graph(n), n / 2);
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (static_cast<int>(g.size()) == n - 1) want("tree", g, n - 1);
    }
  }
  for (int n = 2; n <= std::max(11, max_order); ++n) want("H(" + std::to_string(n) + ")", h_graph(n).graph, 1);
  for (int n = 6; n <= std::max(11, max_order); ++n) {
    for (int r = 3; r <= n / 2; ++r) {
      want("H_nr(" + std::to_string(n) + "," + std::to_string(r) + ")", h_nr_graph(n, r).graph, r);
    }
  }
  want("P3*K3", product(path_graph(4), complete_graph(3), ProductKind::kTensor), 1);
  want("K2*K5", product(complete_graph(2), complete_graph(5), ProductKind::kTensor), 1);
}

void block_sum_trees_cycles(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    const auto md = c.md(g);
    if (!md) continue;
    const int n = g.order();
    const bool tree = is_tree(g);
    c.expect((*md == n - 1) == tree, [&] { return g6(g) + ": md = n-1 must hold exactly for trees"; });
    int block_sum = 0;
    bool known = true;
    for (const Block& b : block_decomposition(g).blocks) {
      const auto part = b.trivial() ? std::optional<int>(1) : c.md(b.graph);
      if (!part) known = false;
      block_sum += part.value_or(0);
    }
    if (known) {
      c.expect(block_sum == *md, [&] { return g6(g) + ": block sum " + std::to_string(block_sum) + " != md"; });
    }
    if (static_cast<int>(g.size()) == n) {
      c.expect(*md <= n - 2 && *md >= n / 2, [&] { return g6(g) + ": unicyclic md outside [floor(n/2), n-2]"; });
    }
  }
}

void restriction(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    const auto r = c.solve(g);
    if (!r) continue;
    // Connected subgraphs: each vertex-deleted subgraph that stays connected, and each block.
    for (Vertex v = 0; v < g.order(); ++v) {
      const Transformed t = delete_vertex(g, v);
      if (t.graph.order() < 2 || !is_connected(t.graph)) continue;
      std::vector<Vertex> back(static_cast<std::size_t>(t.graph.order()));
      for (Vertex u = 0; u < g.order(); ++u) {
        if (t.map[u] != kNoImage) back[t.map[u]] = u;
      }
      std::vector<std::size_t> parent;
      for (const Edge& e : t.graph.edges()) parent.push_back(*g.edge_index(back[e.u], back[e.v]));
      const EdgeColoring sub = restrict_coloring(t.graph, r->certificate, parent);
      c.expect(is_md_coloring(t.graph, sub).md, [&] { return g6(g) + ": restriction to G-" + std::to_string(v) + " not MD"; });
    }
    for (const Block& b : block_decomposition(g).blocks) {
      const EdgeColoring sub = restrict_coloring(b.graph, r->certificate, b.edges);
      c.expect(is_md_coloring(b.graph, sub).md, [&] { return g6(g) + ": restriction to a block not MD"; });
    }
  }
}

void spanning_subgraph(Ctx& c, int max_order) {
  // Every connected spanning subgraph is reachable by single edge deletions
  // that keep connectivity, so one-edge steps cover the statement.
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    const auto md = c.md(g);
    if (!md) continue;
    for (const Edge& e : g.edges()) {
      const Graph h = delete_edges(g, std::span<const Edge>(&e, 1));
      if (!is_connected(h)) continue;
      const auto mh = c.md(h);
      if (!mh) continue;
      c.expect(*mh >= *md, [&] { return g6(g) + " minus " + std::to_string(e.u) + "-" + std::to_string(e.v) + ": md drops"; });
    }
  }
}

void two_connected_cap(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order, 3)) {
    if (!cut_vertices(g).empty()) continue;
    const auto md = c.md(g);
    if (!md) continue;
    c.expect(*md <= g.order() / 2, [&] { return g6(g) + ": 2-connected with md " + std::to_string(*md); });
  }
}

void matching_immune(Ctx& c, int max_order) {
  for (int n = 2; n <= max_order; ++n) {
    const std::size_t limit = static_cast<std::size_t>((3 * (n - 1) + 1) / 2 - 1);
    for (const Graph& g : connected_graphs(n)) {
      if (g.size() > limit) continue;
      c.expect(has_matching_cut(g), [&] { return g6(g) + ": sparse graph without a matching cut"; });
    }
  }
}

void closure_rule(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    if (!is_closure(g)) continue;
    const auto md = c.md(g);
    if (!md) continue;
    c.expect(*md == 1, [&] { return g6(g) + ": closure with md " + std::to_string(*md); });
  }
}

void vertex_deletion(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order, 3)) {
    const auto md = c.md(g);
    if (!md) continue;
    const std::vector<Vertex> cuts = cut_vertices(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) <= 1 || std::binary_search(cuts.begin(), cuts.end(), v)) continue;
      const auto mv = c.md(delete_vertex(g, v).graph);
      if (!mv) continue;
      c.expect(*md <= *mv, [&] { return g6(g) + ": md(G) > md(G-" + std::to_string(v) + ")"; });
    }
  }
}

void soft_layer(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    const SoftLayerResult s = soft_layer_reduce(g);
    if (s.removed.empty()) continue;
    const auto md = c.md(g);
    const auto mr = c.md(s.reduced);
    if (!md || !mr) continue;
    c.expect(*md <= *mr, [&] { return g6(g) + ": md exceeds md of its soft-layer reduction"; });
  }
}

void matching_cut_coloring_valid(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    for (const auto& cut : find_matching_cuts(g, false)) {
      const EdgeColoring col = matching_cut_coloring(g, cut);
      c.expect(is_md_coloring(g, col).md, [&] { return g6(g) + ": matching-cut coloring is not MD"; });
    }
  }
}

void merge_preserves(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    const auto r = c.solve(g);
    if (!r) continue;
    for (int k = 1; k <= r->certificate.k(); ++k) {
      const EdgeColoring merged = merge_to_k(r->certificate, k);
      c.expect(merged.k() == k && is_md_coloring(g, merged).md,
               [&] { return g6(g) + ": merging to " + std::to_string(k) + " colors breaks MD"; });
    }
  }
}

void min_degree_rule(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    if (min_degree(g) < g.order() / 2 + 1) continue;
    const auto md = c.md(g);
    if (!md) continue;
    c.expect(*md == 1, [&] { return g6(g) + ": high minimum degree but md " + std::to_string(*md); });
  }
  for (int n = 4; n <= 12; n += 2) {
    const Graph h = clique_matching_clique(n).graph;
    const auto md = c.md(h);
    if (!md) continue;
    c.expect(min_degree(h) == n / 2 && *md >= 2, [&] {
      return "clique_matching_clique(" + std::to_string(n) + "): delta " + std::to_string(min_degree(h)) + ", md " +
             std::to_string(*md);
    });
  }
  std::ostringstream odd;
  odd << "odd-order extension of the sharpness graph (md):";
  for (int n = 5; n <= 11; n += 2) odd << " n=" << n << ":" << c.md(clique_matching_clique(n).graph).value_or(-1);
  c.note(odd.str());
}

void block_edge_bound(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    const int r = static_cast<int>(block_decomposition(g).blocks.size());
    const std::int64_t bound = max_edges_with_r_blocks(g.order(), r);
    c.expect(static_cast<std::int64_t>(g.size()) <= bound, [&] { return g6(g) + ": too many edges for its block count"; });
  }
}

void dense_threshold(Ctx& c, int max_order) {
  for (int n = 4; n <= max_order; ++n) {
    const std::size_t limit = static_cast<std::size_t>((n - 1) * (n - 2) / 2 + 2);
    for (const Graph& g : connected_graphs(n)) {
      if (g.size() < limit) continue;
      const auto md = c.md(g);
      if (!md) continue;
      c.expect(*md == 1, [&] { return g6(g) + ": dense graph with md " + std::to_string(*md); });
    }
    const Graph sharp = clique_tail_graph(n, 2);  // K_{n-1} plus a pendent edge
    const auto md = c.md(sharp);
    if (md) c.expect(sharp.size() == limit - 1 && *md == 2, [&] { return "K_{n-1} plus pendent edge is not sharp at n=" + std::to_string(n); });
  }
}

void threshold_sweep(Ctx& c, int max_order, char which) {
  CensusOptions co;
  co.search = c.opt.search;
  co.jobs = c.opt.jobs;
  for (int n = 2; n <= max_order; ++n) {
    const Census census = Census::enumerate(n, co);
    c.res.stats.nodes += census.stats().nodes;
    for (int r = 1; r <= n - 1; ++r) {
      const ThresholdReport rep = which == 'f' ? verify_f(census, r) : verify_g(census, r);
      c.res.unknown += rep.inconclusive.size();
      c.expect(rep.counterexamples.empty() && rep.witness_source != "none", [&] {
        std::string s = std::string(1, which) + "(" + std::to_string(n) + "," + std::to_string(r) + ") = " +
                        std::to_string(rep.threshold) + ": ";
        if (!rep.counterexamples.empty()) s += "counterexample " + rep.counterexamples.front();
        else s += "no sharpness witness";
        return s;
      });
      if (rep.construction_checked && !rep.construction_ok) {
        c.note(std::string(1, which) + "(" + std::to_string(n) + "," + std::to_string(r) +
               "): constructed witness failed, sweep used");
      }
    }
  }
}

void split_off_rule(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order, 3)) {
    std::optional<int> md;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 2) continue;
      const auto& nb = g.neighbors(v);
      if (g.has_edge(nb[0], nb[1])) continue;
      if (!md) md = c.md(g);
      if (!md) break;
      const Transformed s = split_off(g, v);
      const auto r = c.solve(s.graph);
      if (!r) continue;
      c.expect(r->value <= *md, [&] { return g6(g) + ": md(split at " + std::to_string(v) + ") > md(G)"; });
      // Lift the split graph's extremal coloring: both edges at v take the new edge's color.
      const std::size_t joined = *s.graph.edge_index(s.map[nb[0]], s.map[nb[1]]);
      std::vector<Color> lifted;
      for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) lifted.push_back(r->certificate[joined]);
        else lifted.push_back(r->certificate[*s.graph.edge_index(s.map[e.u], s.map[e.v])]);
      }
      c.expect(is_md_coloring(g, EdgeColoring(g, lifted)).md, [&] { return g6(g) + ": lifted coloring not MD"; });
    }
  }
}

void matching_cut_contraction(Ctx& c, int max_order) {
  for (const Graph& g : graph_pool(c.opt, max_order)) {
    const auto cuts = find_matching_cuts(g, true);
    if (cuts.empty()) continue;
    const auto md = c.md(g);
    if (!md) continue;
    for (const auto& cut : cuts) {
      const std::vector<Edge> m = edges_of(g, cut);
      const Transformed t = contract_edge_set(g, m);
      const auto mc = c.md(t.graph);
      if (!mc) continue;
      c.expect(*mc <= *md - 1, [&] { return g6(g) + ": contracting a minimal matching cut keeps md"; });
    }
  }
}

void h_family(Ctx& c, int max_order) {
  for (int n = 3; n <= 20; ++n) {
    const Graph h = h_graph(n).graph;
    const std::size_t want = static_cast<std::size_t>((3 * (n - 1) + 1) / 2);
    c.expect(h.order() == n && h.size() == want, [&] { return "H(" + std::to_string(n) + ") has the wrong size"; });
  }
  for (int n = 2; n <= max_order; ++n) {
    const auto md = c.md(h_graph(n).graph);
    if (md) c.expect(*md == 1, [&] { return "md(H(" + std::to_string(n) + ")) = " + std::to_string(*md); });
  }
}

void h_nr_family(Ctx& c, int max_order) {
  for (int n = 6; n <= 20; ++n) {
    for (int r = 3; r <= n / 2; ++r) {
      const Graph h = h_nr_graph(n, r).graph;
      c.expect(h.order() == n && static_cast<std::int64_t>(h.size()) == mu(n, r),
               [&] { return "H_nr(" + std::to_string(n) + "," + std::to_string(r) + ") has the wrong size"; });
    }
  }
  for (int n = 6; n <= max_order; ++n) {
    for (int r = 3; r <= n / 2; ++r) {
      const Graph h = h_nr_graph(n, r).graph;
      const EdgeColoring col = h_nr_coloring(n, r);
      c.expect(col.k() == r && is_md_coloring(h, col).md,
               [&] { return "h_nr_coloring(" + std::to_string(n) + "," + std::to_string(r) + ") is not an MD r-coloring"; });
      const auto md = c.md(h);
      if (md) c.expect(*md == r, [&] { return "md(H_nr(" + std::to_string(n) + "," + std::to_string(r) + ")) = " + std::to_string(*md); });
    }
  }
}

void attachment_sweep(Ctx& c, int max_order) {
  std::size_t deviating = 0;
  std::map<std::string, int> tally;
  for (int n = 6; n <= max_order; ++n) {
    for (int r = 3; r <= n / 2; ++r) {
      if (n % 2 == 0 && 2 * r == n) continue;  // the cycle case has no attachment
      const int m = n % 2 == 0 ? n - 2 * r + 1 : n - 2 * r + 2;
      const int length = n % 2 == 0 ? 2 * r : 2 * r - 1;
      const Graph base = h_graph(m).graph;
      for (Vertex a = 0; a < m; ++a) {
        for (Vertex b = a + 1; b < m; ++b) {
          const Graph g = attach_path(base, a, b, length);
          const auto md = c.md(g);
          if (!md) continue;
          ++c.res.cases;
          ++tally[std::to_string(*md - r)];
          if (*md != r) {
            ++deviating;
            if (c.res.failures.size() < kMaxReportedFailures) {
              c.res.failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) + " attach " +
                                       std::to_string(a) + "," + std::to_string(b) + ": md " + std::to_string(*md));
            }
          }
        }
      }
    }
  }
  c.res.failure_count += deviating;
  std::string summary = "md - r over all attachment pairs:";
  for (const auto& [delta, count] : tally) summary += " [" + delta + "]x" + std::to_string(count);
  c.note(summary);
}

template <typename Visit>
void catalog_pairs(const std::vector<Named>& cat, int max_order, bool unordered, Visit visit) {
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = unordered ? i : 0; j < cat.size(); ++j) {
      if (cat[i].graph.order() * cat[j].graph.order() > max_order) continue;
      visit(cat[i], cat[j]);
    }
  }
}

void cartesian_additivity(Ctx& c, int max_order) {
  const auto cat = product_catalog();
  catalog_pairs(cat, max_order, true, [&](const Named& a, const Named& b) {
    const auto ma = c.md(a.graph), mb = c.md(b.graph);
    const auto mp = c.md(product(a.graph, b.graph, ProductKind::kCartesian));
    if (!ma || !mb || !mp) return;
    c.expect(*mp == *ma + *mb, [&] { return pair_name(a, b, " x ") + ": md " + std::to_string(*mp); });
  });
  catalog_pairs(extended_catalog(), std::max(max_order, kColoringWitnessOrder), true, [&](const Named& a, const Named& b) {
    const auto ra = c.solve(a.graph), rb = c.solve(b.graph);
    if (!ra || !rb) return;
    const EdgeColoring col = cartesian_md_coloring(a.graph, ra->certificate, b.graph, rb->certificate);
    const Graph p = product(a.graph, b.graph, ProductKind::kCartesian);
    c.expect(col.k() == ra->value + rb->value && is_md_coloring(p, col).md,
             [&] { return pair_name(a, b, " x ") + ": product coloring is not an MD coloring with the full count"; });
  });
}

void cartesian_three(Ctx& c, int) {
  const Graph k2 = complete_graph(2);
  const auto cube = product(product(k2, k2, ProductKind::kCartesian), k2, ProductKind::kCartesian);
  const auto md = c.md(cube);
  if (md) c.expect(*md == 3, [&] { return "cube: md " + std::to_string(*md); });
  const auto prism = product(product(cycle_graph(3), k2, ProductKind::kCartesian), k2, ProductKind::kCartesian);
  const auto mp = c.md(prism);
  if (mp) c.expect(*mp == 3, [&] { return "C3 x K2 x K2: md " + std::to_string(*mp); });
  const auto mixed = product(product(k2, path_graph(3), ProductKind::kCartesian), k2, ProductKind::kCartesian);
  const auto mm = c.md(mixed);
  if (mm) c.expect(*mm == 4, [&] { return "K2 x P3 x K2: md " + std::to_string(*mm); });
}

void strong_spanning(Ctx& c, int max_order) {
  catalog_pairs(extended_catalog(), max_order, false, [&](const Named& a, const Named& b) {
    const Graph s = product(a.graph, b.graph, ProductKind::kStrong);
    const Graph l = product(a.graph, b.graph, ProductKind::kLexicographic);
    const Graph box = product(a.graph, b.graph, ProductKind::kCartesian);
    const Graph t = product(a.graph, b.graph, ProductKind::kTensor);
    bool inside = is_connected(s);
    for (const Edge& e : s.edges()) inside = inside && l.has_edge(e.u, e.v);
    c.expect(inside && s.order() == l.order(), [&] { return pair_name(a, b, " strong ") + " is not a connected spanning subgraph of the lexicographic product"; });
    bool split = s.size() == box.size() + t.size();
    for (const Edge& e : box.edges()) split = split && s.has_edge(e.u, e.v) && !t.has_edge(e.u, e.v);
    for (const Edge& e : t.edges()) split = split && s.has_edge(e.u, e.v);
    c.expect(split, [&] { return pair_name(a, b, " strong ") + " is not the disjoint union of Cartesian and tensor edges"; });
  });
}

void tensor_connectivity(Ctx& c, int max_order) {
  catalog_pairs(extended_catalog(), max_order, false, [&](const Named& a, const Named& b) {
    const bool predicted = tensor_connected(a.graph, b.graph);
    const bool actual = is_connected(product(a.graph, b.graph, ProductKind::kTensor));
    c.expect(predicted == actual, [&] { return pair_name(a, b, " * ") + ": connectivity prediction wrong"; });
  });
}

void strong_paths(Ctx& c, int max_order) {
  for (int a = 2; a <= max_order; ++a) {
    for (int b = 2; a * b <= max_order; ++b) {
      const Graph s = product(path_graph(a), path_graph(b), ProductKind::kStrong);
      c.expect(is_closure(s), [&] { return "P" + std::to_string(a) + " strong P" + std::to_string(b) + " is not a closure"; });
    }
  }
}

void strong_closure(Ctx& c, int max_order) {
  catalog_pairs(extended_catalog(), max_order, true, [&](const Named& a, const Named& b) {
    c.expect(is_closure(product(a.graph, b.graph, ProductKind::kStrong)),
             [&] { return pair_name(a, b, " strong ") + " is not a closure"; });
  });
}

void lexicographic(Ctx& c, int max_order) {
  catalog_pairs(product_catalog(), std::min(max_order, 12), false, [&](const Named& a, const Named& b) {
    const auto md = c.md(product(a.graph, b.graph, ProductKind::kLexicographic));
    if (md) c.expect(*md == 1, [&] { return pair_name(a, b, " lex ") + ": md " + std::to_string(*md); });
  });
  // Larger orders: the strong product is a spanning subgraph and a closure.
  catalog_pairs(extended_catalog(), 60, false, [&](const Named& a, const Named& b) {
    if (a.graph.order() * b.graph.order() <= 12) return;
    c.expect(is_closure(product(a.graph, b.graph, ProductKind::kStrong)),
             [&] { return pair_name(a, b, " lex ") + ": spanning strong product is not a closure"; });
  });
}

void tensor_specials(Ctx& c, int) {
  for (int n = 5; n <= 12; ++n) {
    const Graph crown = crown_graph(n);
    c.expect(is_closure(crown), [&] { return "crown(" + std::to_string(n) + ") is not a closure"; });
    const Graph t = product(complete_graph(2), complete_graph(n), ProductKind::kTensor);
    bool same = t == crown;
    if (2 * n <= 11) same = same && canonical_code(t) == canonical_code(crown);
    c.expect(same, [&] { return "crown(" + std::to_string(n) + ") differs from K2 * K" + std::to_string(n); });
  }
  const auto p = c.md(product(path_graph(4), complete_graph(3), ProductKind::kTensor));
  if (p) c.expect(*p == 1, [&] { return "md(P3 * K3) = " + std::to_string(*p); });
  const auto k = c.md(product(complete_graph(2), complete_graph(5), ProductKind::kTensor));
  if (k) c.expect(*k == 1, [&] { return "md(K2 * K5) = " + std::to_string(*k); });
}

void tensor_monotonicity(Ctx& c, int max_order) {
  const auto cat = product_catalog();
  std::vector<Named> hs;
  for (const Named& h : cat) {
    if (min_degree(h.graph) >= 2) hs.push_back(h);
  }
  for (const Named& g : cat) {
    for (const Named& h : hs) {
      if (g.graph.order() * h.graph.order() > max_order) continue;
      if (is_bipartite(g.graph) && is_bipartite(h.graph)) continue;  // no admissible subgraph
      const auto mg = c.md(product(g.graph, h.graph, ProductKind::kTensor));
      if (!mg) continue;
      for (const Graph& sub : connected_subgraphs(g.graph, false)) {
        if (is_bipartite(sub) && is_bipartite(h.graph)) continue;
        const auto ms = c.md(product(sub, h.graph, ProductKind::kTensor));
        if (!ms) continue;
        c.expect(*mg <= *ms, [&] { return g.name + " * " + h.name + " vs subgraph " + g6(sub) + ": md grows"; });
      }
    }
  }
}

void tensor_subgraphs(Ctx& c, int max_order) {
  std::vector<Named> cat;
  for (const Named& x : extended_catalog()) {
    if (!has_pendent_edge(x.graph) && x.graph.size() <= 12) cat.push_back(x);
  }
  cat.push_back({"K4^-", complete_minus_edge(4)});
  std::size_t compared = 0;
  for (const Named& g : cat) {
    for (const Named& h : cat) {
      if (g.graph.order() * h.graph.order() > max_order) continue;
      if (is_bipartite(g.graph) && is_bipartite(h.graph)) continue;
      const auto big = c.md(product(g.graph, h.graph, ProductKind::kTensor));
      if (!big) continue;
      for (const Graph& gs : connected_subgraphs(g.graph, true)) {
        for (const Graph& hs : connected_subgraphs(h.graph, true)) {
          if (is_bipartite(gs) && is_bipartite(hs)) continue;
          const auto small = c.md(product(gs, hs, ProductKind::kTensor));
          if (!small) continue;
          ++compared;
          c.expect(*big <= *small, [&] {
            return g.name + " * " + h.name + " (md " + std::to_string(*big) + ") vs " + g6(gs) + " * " + g6(hs) +
                   " (md " + std::to_string(*small) + ")";
          });
        }
      }
    }
  }
  c.note("subgraph pairs compared: " + std::to_string(compared));
}

void tensor_odd_girth(Ctx& c, int max_order) {
  catalog_pairs(product_catalog(), max_order, false, [&](const Named& a, const Named& b) {
    if (has_pendent_edge(a.graph) || has_pendent_edge(b.graph)) return;
    if (is_bipartite(a.graph) && is_bipartite(b.graph)) return;
    const int bound = tensor_md_upper(a.graph, b.graph);
    const auto md = c.md(product(a.graph, b.graph, ProductKind::kTensor));
    if (md) c.expect(*md <= bound, [&] { return pair_name(a, b, " * ") + ": md " + std::to_string(*md) + " > " + std::to_string(bound); });
  });
}

void tensor_triangle(Ctx& c, int max_order) {
  const auto cat = product_catalog();
  for (const Named& g : cat) {
    // Neither a tree nor unicyclic with a triangle.
    const bool tree = is_tree(g.graph);
    const bool unicyclic_triangle = g.graph.size() == static_cast<std::size_t>(g.graph.order()) && odd_girth(g.graph) == 3;
    for (const Named& h : cat) {
      if (g.graph.order() * h.graph.order() > max_order) continue;
      if (!tree && !unicyclic_triangle && odd_girth(h.graph) == 3 && !has_pendent_edge(h.graph)) {
        const auto md = c.md(product(g.graph, h.graph, ProductKind::kTensor));
        if (md) c.expect(*md == 1, [&] { return pair_name(g, h, " * ") + ": md " + std::to_string(*md); });
      }
    }
    if (g.graph.order() * 5 <= max_order) {
      const auto md = c.md(product(g.graph, complete_graph(5), ProductKind::kTensor));
      if (md) c.expect(*md == 1, [&] { return g.name + " * K5: md " + std::to_string(*md); });
    }
  }
}

// ---------------------------------------------------------------------------

struct Suite {
  CheckInfo info;
  std::function<void(Ctx&, int)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> table = {
      {{"oracle", "oracle-equivalence", "md_exact agrees with brute force over all edge partitions (m <= 10)", 6}, oracle_equivalence},
      {{"constants", "family-constants", "md of complete, complete bipartite, cycles, trees, H, H_nr and two tensor products", 11}, family_constants},
      {{"prop1.2", "block-sum", "md is additive over blocks; md = n-1 iff tree; unicyclic bounds", 7}, block_sum_trees_cycles},
      {{"prop1.3", "restriction", "an MD-coloring restricted to a connected subgraph is MD", 7}, restriction},
      {{"lem1.4", "spanning-subgraph", "md(H) >= md(G) for connected spanning subgraphs H", 7}, spanning_subgraph},
      {{"thm1.7", "two-connected-cap", "2-connected graphs have md <= floor(n/2)", 7}, two_connected_cap},
      {{"thm1.8", "matching-immune", "graphs with fewer than ceil(3(n-1)/2) edges have a matching cut", 8}, matching_immune},
      {{"lem2.1", "closure", "closures have md 1", 7}, closure_rule},
      {{"lem2.2", "vertex-deletion", "md(G) <= md(G - v) for non-pendent non-cut v", 7}, vertex_deletion},
      {{"lem2.3", "soft-layer", "md(G) <= md of the soft-layer reduction", 7}, soft_layer},
      {{"lem2.4", "matching-cut-coloring", "the matching-cut 2-coloring is MD", 7}, matching_cut_coloring_valid},
      {{"lem2.5", "merge", "merging the top colors keeps an MD-coloring MD", 7}, merge_preserves},
      {{"thm2.6", "min-degree", "delta >= floor(n/2)+1 forces md 1; two cliques plus a matching are sharp", 7}, min_degree_rule},
      {{"lem3.1", "block-edge-bound", "e(G) <= C(n-r+1,2) + r - 1 for r blocks", 7}, block_edge_bound},
      {{"lem3.2", "dense-threshold", "e >= C(n-1,2)+2 forces md 1, sharp", 7}, dense_threshold},
      {{"thm3.3", "f-threshold", "exhaustive check of f(n,r) with sharpness", 7}, [](Ctx& c, int m) { threshold_sweep(c, m, 'f'); }},
      {{"claim3.4", "split-off", "splitting off a degree-2 vertex does not raise md; colorings lift", 7}, split_off_rule},
      {{"lem3.5", "matching-cut-contraction", "contracting a minimal matching cut lowers md", 7}, matching_cut_contraction},
      {{"lem3.7", "h-family", "md(H(n)) = 1 and e(H(n)) = ceil(3(n-1)/2)", 11}, h_family},
      {{"lem3.8", "h-nr-family", "md(H_nr(n,r)) = r, e = mu(n,r), explicit coloring MD", 11}, h_nr_family},
      {{"thm3.14", "g-threshold", "exhaustive check of g(n,r) with sharpness", 7}, [](Ctx& c, int m) { threshold_sweep(c, m, 'g'); }},
      {{"h-nr-attachments", "attachment-sweep", "md(I(P, H_m)) = r for every pair of attachment vertices", 10}, attachment_sweep},
      {{"thm4.1", "cartesian-additivity", "md(G x H) = md(G) + md(H); product coloring is MD", 12}, cartesian_additivity},
      {{"cor4.3", "cartesian-three-factor", "additivity over three factors", 12}, cartesian_three},
      {{"prop1.9", "strong-spanning", "strong product spans the lexicographic one and splits into Cartesian plus tensor", 30}, strong_spanning},
      {{"prop1.10", "tensor-connectivity", "G * H connected iff a factor is non-bipartite", 30}, tensor_connectivity},
      {{"lem4.4", "strong-paths", "strong products of paths are closures", 60}, strong_paths},
      {{"thm4.5", "strong-closure", "strong products of nontrivial connected graphs are closures", 60}, strong_closure},
      {{"thm4.6", "lexicographic", "lexicographic products have md 1", 12}, lexicographic},
      {{"lem4.7", "tensor-specials", "crowns are closures, crown = K2 * Kn, md(P3 * K3) = md(K2 * K5) = 1", 12}, tensor_specials},
      {{"lem4.8", "tensor-monotonicity", "md(G * H) <= md(G' * H) for connected subgraphs G'", 20}, tensor_monotonicity},
      {{"thm4.9", "tensor-subgraphs", "md(G * H) <= md(G' * H') for pendent-free connected subgraphs", 20}, tensor_subgraphs},
      {{"cor4.10", "tensor-odd-girth", "md(G * H) <= min odd girth", 20}, tensor_odd_girth},
      {{"cor4.11", "tensor-triangle", "tensor products with a triangle factor or K5 have md 1", 20}, tensor_triangle},
  };
  return table;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Suite& s : suites()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

std::optional<std::string> resolve_check(std::string_view name) {
  const std::string key = lower(name);
  for (const Suite& s : suites()) {
    if (key == s.info.id || key == s.info.alias) return s.info.id;
  }
  return std::nullopt;
}

CheckResult run_check(std::string_view name, const CheckOptions& options) {
  const auto id = resolve_check(name);
  if (!id) throw DomainError("unknown theorem id: " + std::string(name));
  const auto start = std::chrono::steady_clock::now();
  for (const Suite& s : suites()) {
    if (s.info.id != *id) continue;
    CheckResult res;
    res.id = s.info.id;
    res.name = s.info.alias;
    res.statement = s.info.statement;
    res.max_order = options.max_order > 0 ? options.max_order : s.info.default_max_order;
    Ctx ctx{options, res};
    s.run(ctx, res.max_order);
    res.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
  }
  throw DomainError("unknown theorem id: " + std::string(name));
}

}  // namespace mdlab

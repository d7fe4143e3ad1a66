#include "mdlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mdlab/analysis.hpp"
#include "mdlab/errors.hpp"

namespace mdlab {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {};

class Budget {
 public:
  explicit Budget(const SearchConfig& cfg) : limit_(cfg.node_budget), deadline_(Clock::now() + cfg.time_budget) {}

  void tick() {
    if (++nodes_ > limit_) throw BudgetExceeded{};
    if ((nodes_ & 0x3ff) == 0 && Clock::now() > deadline_) throw BudgetExceeded{};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_ = 0;
  std::uint64_t limit_;
  Clock::time_point deadline_;
};

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

bool is_two_connected(const Graph& g) { return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty(); }

EdgeColoring trivial_coloring(const Graph& g) { return EdgeColoring(g, std::vector<Color>(g.size(), 1)); }

// Assigns whole classes to colors 1..k with first-use symmetry breaking and
// rejects partial assignments in which some pair can no longer be separated.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::vector<std::vector<std::size_t>> classes, int k, Budget& budget)
      : g_(g),
        classes_(std::move(classes)),
        k_(k),
        budget_(budget),
        color_adj_(static_cast<std::size_t>(k) + 1, std::vector<VertexMask>(static_cast<std::size_t>(g.order()), 0)),
        all_adj_(static_cast<std::size_t>(g.order()), 0),
        together_(static_cast<std::size_t>(g.order()), 0),
        edge_color_(g.size(), 0) {
    std::stable_sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a.front() < b.front();
    });
  }

  std::optional<std::vector<Color>> run() {
    if (descend(0, 0)) return edge_color_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t index, int open) {
    budget_.tick();
    const int remaining = static_cast<int>(classes_.size() - index);
    if (open + remaining < k_) return false;
    if (index == classes_.size()) return open == k_ && is_md_coloring_fast(g_, edge_color_);

    // A fresh color first, then the open ones in increasing order.
    std::vector<Color> choices;
    if (open < k_) choices.push_back(open + 1);
    for (Color c = 1; c <= open; ++c) choices.push_back(c);
    for (Color c : choices) {
      const int next_open = std::max(open, c);
      paint(index, c);
      if (!doomed(next_open) && descend(index + 1, next_open)) return true;
      erase(index, c);
    }
    return false;
  }

  void paint(std::size_t index, Color c) {
    auto& adj = color_adj_[static_cast<std::size_t>(c)];
    for (std::size_t e : classes_[index]) {
      const auto [u, v] = g_.edge(e);
      adj[u] |= bit(v);
      adj[v] |= bit(u);
      all_adj_[u] |= bit(v);
      all_adj_[v] |= bit(u);
      edge_color_[e] = c;
    }
  }

  void erase(std::size_t index, Color c) {
    auto& adj = color_adj_[static_cast<std::size_t>(c)];
    for (std::size_t e : classes_[index]) {
      const auto [u, v] = g_.edge(e);
      adj[u] &= ~bit(v);
      adj[v] &= ~bit(u);
      all_adj_[u] &= ~bit(v);
      all_adj_[v] &= ~bit(u);
      edge_color_[e] = 0;
    }
  }

  // Intersects together_[v] with v's component in the view "assigned edges
  // minus color c" (c == 0: all assigned edges). Returns true once every
  // vertex is alone.
  bool intersect_view(Color c) {
    const auto& removed = color_adj_[static_cast<std::size_t>(c)];
    VertexMask left = g_.all_vertices_mask();
    bool all_alone = true;
    while (left != 0) {
      VertexMask comp = bit(std::countr_zero(left));
      VertexMask frontier = comp;
      while (frontier != 0) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1) {
          const auto v = static_cast<std::size_t>(std::countr_zero(f));
          next |= c == 0 ? all_adj_[v] : (all_adj_[v] & ~removed[v]);
        }
        next &= ~comp;
        comp |= next;
        frontier = next;
      }
      for (VertexMask m = comp; m != 0; m &= m - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(m));
        together_[v] &= comp;
        if (together_[v] != bit(static_cast<Vertex>(v))) all_alone = false;
      }
      left &= ~comp;
    }
    return all_alone;
  }

  // Some pair is connected, avoiding every color that could still separate it.
  bool doomed(int open) {
    std::fill(together_.begin(), together_.end(), g_.all_vertices_mask());
    // Colors that are not open yet can only land on unassigned edges.
    if (open < k_ && intersect_view(0)) return false;
    for (Color c = 1; c <= open; ++c) {
      if (intersect_view(c)) return false;
    }
    for (std::size_t v = 0; v < together_.size(); ++v) {
      if (together_[v] != bit(static_cast<Vertex>(v))) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<std::size_t>> classes_;
  int k_;
  Budget& budget_;
  std::vector<std::vector<VertexMask>> color_adj_;  // [color][vertex]; slot 0 unused
  std::vector<VertexMask> all_adj_;
  std::vector<VertexMask> together_;
  std::vector<Color> edge_color_;
};

Feasibility feasible_impl(const Graph& g, int k, const SearchConfig& cfg, Budget& budget) {
  Feasibility out;
  const std::uint64_t before = budget.nodes();
  if (k < 1) throw DomainError("md_feasible needs k >= 1");
  if (g.size() == 0) {
    out.outcome = SearchOutcome::kInfeasible;
    return out;
  }
  if (k == 1) {
    out.outcome = SearchOutcome::kFound;
    out.coloring = trivial_coloring(g);
    return out;
  }
  auto classes = cfg.merge_four_cycles ? forced_color_classes(g) : theta_classes(g).classes;
  if (static_cast<int>(classes.size()) < k) {
    out.outcome = SearchOutcome::kInfeasible;
    return out;
  }
  try {
    PartitionSearch search(g, std::move(classes), k, budget);
    if (auto colors = search.run()) {
      out.outcome = SearchOutcome::kFound;
      out.coloring = EdgeColoring(g, std::move(*colors));
    } else {
      out.outcome = SearchOutcome::kInfeasible;
    }
  } catch (const BudgetExceeded&) {
    out.outcome = SearchOutcome::kUnknown;
  }
  out.nodes = budget.nodes() - before;
  return out;
}

MdResult exact_impl(const Graph& g, const SearchConfig& cfg, Budget& budget);

void require_solvable(const Graph& g) {
  if (g.order() < 2) throw GraphError("bounds need a graph with at least 2 vertices");
  if (!is_connected(g)) throw GraphError("md is defined for connected graphs only");
}

std::vector<Bound> cheap_upper_bounds(const Graph& g, const SearchConfig& cfg) {
  std::vector<Bound> out;
  const int n = g.order();
  out.push_back({"spanning-tree n-1", BoundKind::kUpper, n - 1});
  if (cfg.bounds.two_connected && is_two_connected(g)) out.push_back({"2-connected floor(n/2)", BoundKind::kUpper, n / 2});
  if (cfg.bounds.closure && is_closure(g)) out.push_back({"closure", BoundKind::kUpper, 1});
  if (cfg.bounds.min_degree && min_degree(g) >= n / 2 + 1) out.push_back({"min-degree", BoundKind::kUpper, 1});
  if (cfg.bounds.theta_classes) {
    out.push_back({"theta-classes", BoundKind::kUpper, static_cast<int>(theta_classes(g).classes.size())});
  }
  if (cfg.bounds.forced_classes) {
    out.push_back({"forced-classes", BoundKind::kUpper, static_cast<int>(forced_color_classes(g).size())});
  }
  return out;
}

std::optional<Bound> soft_layer_bound(const Graph& g, const SearchConfig& cfg, Budget& budget) {
  if (!cfg.bounds.soft_layer) return std::nullopt;
  const SoftLayerResult reduced = soft_layer_reduce(g);
  if (reduced.removed.empty() || reduced.reduced.order() < 2) return std::nullopt;
  const MdResult sub = exact_impl(reduced.reduced, cfg, budget);
  if (!sub.exact()) return std::nullopt;
  return Bound{"soft-layer", BoundKind::kUpper, sub.value};
}

std::vector<Bound> lower_impl(const Graph& g, const SearchConfig& cfg) {
  std::vector<Bound> out;
  const int n = g.order();
  out.push_back({"trivial", BoundKind::kLower, 1});
  if (is_tree(g)) out.push_back({"tree", BoundKind::kLower, n - 1});
  if (cfg.bounds.unicyclic && g.size() == static_cast<std::size_t>(n)) {
    out.push_back({"unicyclic floor(n/2)", BoundKind::kLower, n / 2});
  }
  if (cfg.bounds.matching_cut && n <= cfg.matching_cut_cap && has_matching_cut(g, cfg.matching_cut_cap)) {
    out.push_back({"matching-cut", BoundKind::kLower, 2});
  }
  return out;
}

template <typename Better>
Bound pick(const std::vector<Bound>& bounds, Better better) {
  Bound best = bounds.front();
  for (const Bound& b : bounds) {
    if (better(b.value, best.value)) best = b;
  }
  return best;
}

int min_value(const std::vector<Bound>& bounds) {
  return pick(bounds, [](int a, int b) { return a < b; }).value;
}
int max_value(const std::vector<Bound>& bounds) {
  return pick(bounds, [](int a, int b) { return a > b; }).value;
}

struct BlockSolution {
  MdStatus status = MdStatus::kExact;
  int value = 1;
  int lower = 1;
  int upper = 1;
  std::vector<Color> colors;  // block-local edge order
};

std::vector<Color> certificate_for_lower(const Graph& b, int lower, const SearchConfig& cfg) {
  if (lower >= 2 && b.order() <= cfg.matching_cut_cap) {
    const auto cuts = find_matching_cuts(b, true, cfg.matching_cut_cap);
    if (!cuts.empty()) return matching_cut_coloring(b, cuts.front()).colors();
  }
  return std::vector<Color>(b.size(), 1);
}

BlockSolution solve_block(const Graph& b, const SearchConfig& cfg, Budget& budget) {
  BlockSolution out;
  if (b.size() == 1) {
    out.colors = {1};
    return out;
  }
  std::vector<Bound> ups = cheap_upper_bounds(b, cfg);
  const std::vector<Bound> lows = lower_impl(b, cfg);
  out.lower = max_value(lows);
  out.upper = min_value(ups);
  if (out.upper > out.lower) {
    try {
      if (auto soft = soft_layer_bound(b, cfg, budget)) out.upper = std::min(out.upper, soft->value);
    } catch (const BudgetExceeded&) {
      // The sweep below reports the block as unknown.
    }
  }
  if (out.upper < out.lower) throw std::logic_error("inconsistent md bounds on a block");

  auto attempt = [&](int k) { return feasible_impl(b, k, cfg, budget); };

  if (cfg.descending) {
    for (int k = out.upper; k >= out.lower; --k) {
      Feasibility f = attempt(k);
      if (f.outcome == SearchOutcome::kFound) {
        out.value = out.lower = out.upper = k;
        out.colors = f.coloring->colors();
        return out;
      }
      if (f.outcome == SearchOutcome::kUnknown) {
        out.status = MdStatus::kUnknown;
        out.upper = k;
        break;
      }
    }
    if (out.status == MdStatus::kExact) throw std::logic_error("no coloring found at a proven lower bound");
  } else {
    std::optional<std::vector<Color>> best;
    for (int k = out.lower; k <= out.upper; ++k) {
      Feasibility f = attempt(k);
      if (f.outcome == SearchOutcome::kFound) {
        best = f.coloring->colors();
        out.value = out.lower = k;
        continue;
      }
      if (f.outcome == SearchOutcome::kInfeasible) {
        if (!best) throw std::logic_error("no coloring found at a proven lower bound");
        out.upper = k - 1;
        out.colors = std::move(*best);
        return out;
      }
      out.status = MdStatus::kUnknown;
      break;
    }
    if (out.status == MdStatus::kExact) {
      out.colors = std::move(*best);
      return out;
    }
    if (best) {
      out.colors = std::move(*best);
      return out;
    }
  }
  out.value = out.lower;
  out.colors = certificate_for_lower(b, out.lower, cfg);
  out.value = out.lower = static_cast<int>(EdgeColoring(b, out.colors).k());
  return out;
}

MdResult exact_impl(const Graph& g, const SearchConfig& cfg, Budget& budget) {
  if (g.order() == 0) throw GraphError("md is undefined for the empty graph");
  if (!is_connected(g)) throw GraphError("md is defined for connected graphs only");
  MdResult out;
  if (g.order() == 1) {
    out.status = MdStatus::kExact;
    out.certificate = EdgeColoring(g, {});
    return out;
  }

  for (Bound& b : cheap_upper_bounds(g, cfg)) out.bounds.push_back(std::move(b));
  for (Bound& b : lower_impl(g, cfg)) out.bounds.push_back(std::move(b));

  const BlockDecomposition blocks = block_decomposition(g);
  std::vector<Color> colors(g.size(), 0);
  Color offset = 0;
  bool exact = true;
  for (const Block& block : blocks.blocks) {
    const BlockSolution s = solve_block(block.graph, cfg, budget);
    exact = exact && s.status == MdStatus::kExact;
    out.lower += s.lower;
    out.upper += s.upper;
    // Block-local edges follow the canonical order of the induced graph.
    for (std::size_t i = 0; i < block.graph.size(); ++i) {
      const Edge local = block.graph.edge(i);
      const std::size_t global = *g.edge_index(block.to_parent[local.u], block.to_parent[local.v]);
      colors[global] = s.colors[i] + offset;
    }
    offset += static_cast<Color>(EdgeColoring(block.graph, s.colors).k());
  }
  out.bounds.push_back({"block-sum", BoundKind::kLower, out.lower});
  out.bounds.push_back({"block-sum", BoundKind::kUpper, out.upper});
  out.status = exact ? MdStatus::kExact : MdStatus::kUnknown;
  out.certificate = normalize(EdgeColoring(g, std::move(colors)));
  out.value = out.certificate.k();
  return out;
}

}  // namespace

std::vector<Bound> upper_bounds(const Graph& g, const SearchConfig& cfg) {
  require_solvable(g);
  std::vector<Bound> out = cheap_upper_bounds(g, cfg);
  Budget budget(cfg);
  try {
    if (auto soft = soft_layer_bound(g, cfg, budget)) out.push_back(*soft);
  } catch (const BudgetExceeded&) {
  }
  return out;
}

std::vector<Bound> lower_bounds(const Graph& g, const SearchConfig& cfg) {
  require_solvable(g);
  return lower_impl(g, cfg);
}

Bound md_upper_bound(const Graph& g, const SearchConfig& cfg) {
  return pick(upper_bounds(g, cfg), [](int a, int b) { return a < b; });
}

Bound md_lower_bound(const Graph& g, const SearchConfig& cfg) {
  return pick(lower_bounds(g, cfg), [](int a, int b) { return a > b; });
}

Feasibility md_feasible(const Graph& g, int k, const SearchConfig& cfg) {
  if (!is_connected(g) || g.order() == 0) throw GraphError("md_feasible needs a connected graph");
  Budget budget(cfg);
  return feasible_impl(g, k, cfg, budget);
}

MdResult md_exact(const Graph& g, const SearchConfig& cfg) {
  const auto start = Clock::now();
  Budget budget(cfg);
  MdResult out;
  try {
    out = exact_impl(g, cfg, budget);
  } catch (const BudgetExceeded&) {
    // Only reachable from a soft-layer recursion outside any feasibility search.
    out = MdResult{};
    out.status = MdStatus::kUnknown;
    out.value = out.lower = 1;
    out.upper = g.order() - 1;
    out.certificate = trivial_coloring(g);
  }
  out.stats.nodes = budget.nodes();
  out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

}  // namespace mdlab

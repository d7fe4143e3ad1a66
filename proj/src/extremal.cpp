#include "mdlab/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "mdlab/errors.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph6.hpp"

namespace mdlab {

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

void require_nr(int n, int r, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + ": need n >= 2");
  if (r < 1 || r > n - 1) throw DomainError(std::string(what) + ": need 1 <= r <= n-1");
}

constexpr int kCanonicalMaxOrder = 11;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    // Positions [class_start, class_end) share a degree; vertices may only permute inside their class.
    class_start_.resize(static_cast<std::size_t>(n_));
    class_end_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) {
      const bool same = p > 0 && g.degree(order_[p]) == g.degree(order_[p - 1]);
      class_start_[p] = same ? class_start_[p - 1] : p;
    }
    for (int p = n_ - 1; p >= 0; --p) {
      const bool same = p + 1 < n_ && g.degree(order_[p]) == g.degree(order_[p + 1]);
      class_end_[p] = same ? class_end_[p + 1] : p + 1;
    }
    total_bits_ = n_ * (n_ - 1) / 2;
    placed_.assign(static_cast<std::size_t>(n_), kNoImage);
  }

  void run() {
    if (n_ <= 1) return;
    search(0, 0, 0);
  }

  std::uint64_t best() const { return best_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  void search(int pos, std::uint64_t code, VertexMask used) {
    if (pos == n_) {
      if (!found_ || code < best_) {
        best_ = code;
        found_ = true;
        best_order_ = placed_;
      }
      return;
    }
    for (int q = class_start_[pos]; q < class_end_[pos]; ++q) {
      const Vertex v = order_[q];
      if ((used >> v) & 1) continue;
      std::uint64_t next = code;
      for (int i = 0; i < pos; ++i) next = (next << 1) | (g_.has_edge(placed_[i], v) ? 1U : 0U);
      if (found_) {
        const int bits = pos * (pos + 1) / 2;
        const std::uint64_t best_prefix = best_ >> (total_bits_ - bits);
        if (next > best_prefix) continue;
      }
      placed_[pos] = v;
      search(pos + 1, next, used | (VertexMask{1} << v));
    }
    placed_[pos] = kNoImage;
  }

  const Graph& g_;
  int n_;
  int total_bits_ = 0;
  std::vector<Vertex> order_;
  std::vector<int> class_start_;
  std::vector<int> class_end_;
  std::vector<Vertex> placed_;
  std::vector<Vertex> best_order_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

void require_canonical_order(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) throw CapacityError("canonical form supports at most 11 vertices");
}

}  // namespace

std::int64_t threshold_f(int n, int r) {
  require_nr(n, r, "f");
  if (r == n - 1) return n - 1;
  return choose2(n - r + 1) - n + 2 * r + 1;
}

std::int64_t mu(int n, int r) {
  if (n < 6 || r < 3 || r > n / 2) throw DomainError("mu: need n >= 6 and 3 <= r <= floor(n/2)");
  return n % 2 == 0 ? 3 * n / 2 - r : (3 * n + 1) / 2 - r;
}

std::int64_t threshold_g(int n, int r) {
  require_nr(n, r, "g");
  if (r == 1) return choose2(n);
  if (r == 2) return (3 * (n - 1) + 1) / 2 - 1;
  if (r >= n / 2 + 1) return n - 1;
  if (n >= 6 && r >= 3 && r <= n / 2) return mu(n, r);
  throw DomainError("g: no closed form covers n = " + std::to_string(n) + ", r = " + std::to_string(r));
}

std::uint64_t canonical_code(const Graph& g) {
  require_canonical_order(g);
  Canonizer c(g);
  c.run();
  return c.best();
}

Graph canonical_form(const Graph& g) {
  require_canonical_order(g);
  if (g.order() <= 1) return g;
  Canonizer c(g);
  c.run();
  std::vector<Vertex> position(static_cast<std::size_t>(g.order()));
  for (int p = 0; p < g.order(); ++p) position[c.best_order()[p]] = p;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(make_edge(position[e.u], position[e.v]));
  return Graph(g.order(), std::move(edges));
}

Graph from_canonical_code(int n, std::uint64_t code) {
  if (n < 0 || n > kCanonicalMaxOrder) throw CapacityError("canonical form supports at most 11 vertices");
  const int total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int bit = total - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<Graph> enumerate_connected(int n, int max_order) {
  if (n < 1) throw DomainError("enumeration needs n >= 1");
  if (n > max_order || n > kCanonicalMaxOrder) {
    throw CapacityError("enumeration order " + std::to_string(n) + " exceeds the cap of " + std::to_string(max_order));
  }
  std::vector<std::uint64_t> level{0};  // K1
  for (int order = 2; order <= n; ++order) {
    std::unordered_set<std::uint64_t> seen;
    const int prev = order - 1;
    for (std::uint64_t code : level) {
      const Graph base = from_canonical_code(prev, code);
      for (VertexMask nbrs = 1; nbrs < (VertexMask{1} << prev); ++nbrs) {
        std::vector<Edge> edges = base.edges();
        for (Vertex v = 0; v < prev; ++v) {
          if ((nbrs >> v) & 1) edges.push_back({v, prev});
        }
        seen.insert(canonical_code(Graph(order, std::move(edges))));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(from_canonical_code(n, code));
  return out;
}

Census Census::enumerate(int n, const CensusOptions& options) {
  Census c;
  c.n_ = n;
  c.options_ = options;
  for (Graph& g : enumerate_connected(n, options.max_order)) c.entries_.push_back({std::move(g), {}, {}});
  c.evaluate();
  return c;
}

Census Census::from_graphs(int n, const std::vector<Graph>& graphs, const CensusOptions& options) {
  if (n < 1 || n > kCanonicalMaxOrder) throw CapacityError("census order must be between 1 and 11");
  Census c;
  c.n_ = n;
  c.options_ = options;
  std::vector<std::uint64_t> codes;
  for (const Graph& g : graphs) {
    if (g.order() != n) throw GraphError("census catalog mixes orders (expected " + std::to_string(n) + ")");
    if (!is_connected(g)) throw GraphError("census catalog contains a disconnected graph: " + to_graph6(g));
    codes.push_back(canonical_code(g));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  for (std::uint64_t code : codes) c.entries_.push_back({from_canonical_code(n, code), {}, {}});
  c.evaluate();
  return c;
}

void Census::evaluate() {
  const auto start = std::chrono::steady_clock::now();
  for (CensusEntry& e : entries_) e.graph6 = to_graph6(e.graph);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries_.size(); i = next++) entries_[i].md = md_exact(entries_[i].graph, options_.search);
  };
  const int jobs = std::max(1, options_.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const CensusEntry& e : entries_) stats_.nodes += e.md.stats.nodes;
  stats_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

namespace {

// Checks a candidate sharpness witness: md must satisfy `want` as decided by
// the solver's bracket (exact value or bounds).
template <typename Want>
std::optional<int> witness_md(const Graph& w, const SearchConfig& cfg, Want want) {
  const MdResult res = md_exact(w, cfg);
  if (res.exact()) return want(res.value, res.value) ? std::optional<int>(res.value) : std::nullopt;
  return want(res.lower, res.upper) ? std::optional<int>(res.lower) : std::nullopt;
}

void finish(ThresholdReport& rep, const Census& census, std::chrono::steady_clock::time_point start) {
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
  std::sort(rep.inconclusive.begin(), rep.inconclusive.end());
  rep.graphs_checked = census.entries().size();
  rep.verified = rep.counterexamples.empty() && rep.inconclusive.empty() && rep.witness_source != "none";
  rep.stats.nodes = census.stats().nodes;
  rep.stats.elapsed_ms = census.stats().elapsed_ms +
                         std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ThresholdReport verify_f(const Census& census, int r) {
  const auto start = std::chrono::steady_clock::now();
  const int n = census.order();
  ThresholdReport rep;
  rep.which = 'f';
  rep.n = n;
  rep.r = r;
  rep.threshold = threshold_f(n, r);
  const SearchConfig& cfg = census.options().search;

  for (const CensusEntry& e : census.entries()) {
    if (static_cast<std::int64_t>(e.graph.size()) < rep.threshold) continue;
    if (e.md.upper <= r) continue;
    if (e.md.exact() || e.md.lower > r) {
      rep.counterexamples.push_back(e.graph6);
    } else {
      rep.inconclusive.push_back(e.graph6);
    }
  }

  const auto sharp = [r](int lo, int) { return lo >= r + 1; };
  if (r == n - 1) {
    // f - 1 = n - 2 edges cannot span a connected graph of order n.
    rep.witness_source = "domain-boundary";
  } else {
    rep.construction_checked = true;
    const Graph w = f_sharp_graph(n, r);
    if (static_cast<std::int64_t>(w.size()) == rep.threshold - 1 && is_connected(w)) {
      if (auto md = witness_md(w, cfg, sharp)) {
        rep.construction_ok = true;
        rep.witness = to_graph6(w);
        rep.witness_md = md;
        rep.witness_source = "construction";
      }
    }
    if (!rep.construction_ok) {
      for (const CensusEntry& e : census.entries()) {
        if (static_cast<std::int64_t>(e.graph.size()) == rep.threshold - 1 && e.md.lower >= r + 1) {
          rep.witness = e.graph6;
          rep.witness_md = e.md.lower;
          rep.witness_source = "sweep";
          break;
        }
      }
    }
  }
  finish(rep, census, start);
  return rep;
}

namespace {

std::optional<Graph> g_witness_construction(int n, int r) {
  if (r == 2) return h_graph(n).graph;
  if (r >= n / 2 + 1) return cycle_graph(n);
  if (r >= 4) return h_nr_graph(n, r - 1).graph;
  if (r == 3 && n % 2 == 1) return h_graph(n).graph;
  return std::nullopt;
}

}  // namespace

ThresholdReport verify_g(const Census& census, int r) {
  const auto start = std::chrono::steady_clock::now();
  const int n = census.order();
  ThresholdReport rep;
  rep.which = 'g';
  rep.n = n;
  rep.r = r;
  rep.threshold = threshold_g(n, r);
  const SearchConfig& cfg = census.options().search;

  for (const CensusEntry& e : census.entries()) {
    if (static_cast<std::int64_t>(e.graph.size()) > rep.threshold) continue;
    if (e.md.lower >= r) continue;
    if (e.md.exact() || e.md.upper < r) {
      rep.counterexamples.push_back(e.graph6);
    } else {
      rep.inconclusive.push_back(e.graph6);
    }
  }

  const auto sharp = [r](int, int hi) { return hi < r; };
  if (r == 1) {
    // g + 1 = C(n,2) + 1 edges do not fit in a simple graph of order n.
    rep.witness_source = "domain-boundary";
  } else {
    if (auto w = g_witness_construction(n, r)) {
      rep.construction_checked = true;
      if (static_cast<std::int64_t>(w->size()) == rep.threshold + 1 && w->order() == n && is_connected(*w)) {
        if (auto md = witness_md(*w, cfg, sharp)) {
          rep.construction_ok = true;
          rep.witness = to_graph6(*w);
          rep.witness_md = md;
          rep.witness_source = "construction";
        }
      }
    }
    if (!rep.construction_ok) {
      for (const CensusEntry& e : census.entries()) {
        if (static_cast<std::int64_t>(e.graph.size()) == rep.threshold + 1 && e.md.upper < r) {
          rep.witness = e.graph6;
          rep.witness_md = e.md.upper;
          rep.witness_source = "sweep";
          break;
        }
      }
    }
  }
  finish(rep, census, start);
  return rep;
}

}  // namespace mdlab

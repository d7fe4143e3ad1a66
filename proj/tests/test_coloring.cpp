#include <doctest.h>

#include "helpers.hpp"
#include "mdlab/analysis.hpp"
#include "mdlab/coloring.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/families.hpp"

using namespace mdlab;

namespace {

EdgeColoring trivial(const Graph& g) { return EdgeColoring(g, std::vector<Color>(g.size(), 1)); }

std::vector<Color> along_cycle(const Graph& c, std::vector<Color> walk) {
  // cycle_graph edges are sorted: 01, 0(n-1), 12, 23, ...; walk lists colors of 01, 12, ..., (n-1)0.
  std::vector<Color> colors(c.size());
  const int n = c.order();
  for (int i = 0; i < n; ++i) colors[*c.edge_index(i, (i + 1) % n)] = walk[static_cast<std::size_t>(i)];
  return colors;
}

}  // namespace

TEST_CASE("trivial coloring is MD on connected graphs") {
  for (const Graph& g : mdlab::test::small_graphs(5)) CHECK(is_md_coloring(g, trivial(g)).md);
}

TEST_CASE("four-cycle colorings") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_md_coloring(c4, EdgeColoring(c4, along_cycle(c4, {1, 2, 1, 2}))).md);
  const MdCheck bad = is_md_coloring(c4, EdgeColoring(c4, along_cycle(c4, {1, 1, 1, 2})));
  CHECK_FALSE(bad.md);
  CHECK(bad.certificate.unseparated() == std::vector<Edge>{{0, 3}});
}

TEST_CASE("certificate witnesses separate their pairs") {
  const Graph c6 = cycle_graph(6);
  const EdgeColoring c = cycle_md_coloring(6);
  const MdCheck check = is_md_coloring(c6, c);
  REQUIRE(check.md);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      const Color w = check.certificate.witness(u, v);
      REQUIRE(w > 0);
      std::vector<Edge> removed;
      for (std::size_t e = 0; e < c6.size(); ++e) {
        if (c[e] == w) removed.push_back(c6.edge(e));
      }
      const auto comps = components(delete_edges(c6, removed));
      for (const auto& comp : comps) {
        const bool has_u = std::find(comp.begin(), comp.end(), u) != comp.end();
        const bool has_v = std::find(comp.begin(), comp.end(), v) != comp.end();
        CHECK_FALSE((has_u && has_v));
      }
    }
  }
}

TEST_CASE("coloring construction is validated") {
  const Graph k3 = complete_graph(3);
  CHECK_THROWS_AS(EdgeColoring(k3, {1, 1}), GraphError);
  CHECK_THROWS_AS(EdgeColoring(k3, {1, 0, 1}), GraphError);
  CHECK_THROWS_AS(is_md_coloring(cycle_graph(3), trivial(path_graph(4))), GraphError);
}

TEST_CASE("matching cut coloring") {
  const Graph c6 = cycle_graph(6);
  const std::vector<std::size_t> cut{*c6.edge_index(0, 1), *c6.edge_index(3, 4)};
  const EdgeColoring c = matching_cut_coloring(c6, cut);
  CHECK(c.k() == 2);
  CHECK(is_md_coloring(c6, c).md);

  const Graph tree = path_graph(5);
  const std::vector<std::size_t> bridge{1};
  CHECK(is_md_coloring(tree, matching_cut_coloring(tree, bridge)).md);

  const Graph k4 = complete_graph(4);
  const std::vector<std::size_t> any{0, 5};
  CHECK_THROWS_AS(matching_cut_coloring(k4, any), GraphError);
}

TEST_CASE("merge_to_k") {
  const Graph c6 = cycle_graph(6);
  const EdgeColoring three = cycle_md_coloring(6);
  CHECK(three.k() == 3);
  CHECK(merge_to_k(three, 3) == three);
  CHECK(merge_to_k(three, 1) == trivial(c6));
  const EdgeColoring two = merge_to_k(three, 2);
  CHECK(two.k() == 2);
  CHECK(is_md_coloring(c6, two).md);
  CHECK_THROWS_AS(merge_to_k(three, 0), DomainError);
  CHECK_THROWS_AS(merge_to_k(three, 4), DomainError);
}

TEST_CASE("merging preserves MD on every small graph") {
  for (const Graph& g : mdlab::test::small_graphs(5)) {
    std::vector<Color> distinct(g.size());
    for (std::size_t e = 0; e < g.size(); ++e) distinct[e] = static_cast<Color>(e + 1);
    const EdgeColoring c(g, distinct);
    if (!is_md_coloring(g, c).md) continue;
    for (int r = 1; r <= c.k(); ++r) CHECK(is_md_coloring(g, merge_to_k(c, r)).md);
  }
}

TEST_CASE("normalize") {
  const Graph k3 = complete_graph(3);
  CHECK(normalize(EdgeColoring(k3, {5, 5, 9})).colors() == std::vector<Color>{1, 1, 2});
  CHECK(normalize(EdgeColoring(k3, {1, 2, 3})).colors() == std::vector<Color>{1, 2, 3});
  const Graph c4 = cycle_graph(4);
  const EdgeColoring c(c4, {2, 1, 2, 1});
  CHECK(normalize(c).colors() == std::vector<Color>{1, 2, 1, 2});
  CHECK(normalize(normalize(c)) == normalize(c));
  CHECK_FALSE(EdgeColoring(k3, {5, 5, 9}).is_dense());
  CHECK(EdgeColoring(k3, {5, 5, 9}).k() == 2);
}

TEST_CASE("restriction to a subgraph") {
  const Graph c4 = cycle_graph(4);
  const EdgeColoring c(c4, {1, 2, 2, 1});
  const std::vector<std::size_t> kept{0, 2};
  const Graph sub = spanning_subgraph(c4, kept);
  const EdgeColoring r = restrict_coloring(sub, c, kept);
  CHECK(r.colors() == std::vector<Color>{1, 2});
}

#include <doctest.h>

#include "mdlab/errors.hpp"
#include "mdlab/extremal.hpp"
#include "mdlab/families.hpp"
#include "mdlab/solver.hpp"

using namespace mdlab;

namespace {

Vertex named(const NamedGraph& g, const std::string& name) {
  for (const auto& [label, v] : g.names) {
    if (label == name) return v;
  }
  FAIL("missing vertex name " << name);
  return -1;
}

}  // namespace

TEST_CASE("basic families") {
  CHECK(path_graph(4).size() == 3);
  CHECK(cycle_graph(6).size() == 6);
  CHECK(complete_graph(5).size() == 10);
  CHECK(complete_bipartite_graph(2, 3).size() == 6);
  CHECK(complete_minus_edge(4).size() == 5);
  CHECK_FALSE(complete_minus_edge(4).has_edge(0, 1));
  CHECK(star_graph(4).order() == 5);
  CHECK(crown_graph(4).size() == 12);
}

TEST_CASE("semi-wheel and its subdivisions") {
  const NamedGraph sw = semi_wheel(4);
  CHECK(sw.graph.order() == 5);
  CHECK(sw.graph.size() == 7);
  CHECK(named(sw, "u") == 0);

  const NamedGraph d = d_graph(4);  // spokes to v2, v3 subdivided
  CHECK(d.graph.order() == 7);
  CHECK(d.graph.size() == 9);
  CHECK(d.graph.has_edge(0, 1));
  CHECK(d.graph.has_edge(0, 4));
  CHECK_FALSE(d.graph.has_edge(0, 2));
  CHECK(d.graph.has_edge(0, named(d, "w2")));

  const NamedGraph f = f_graph(5);  // spokes to v2, v3 subdivided
  CHECK(f.graph.has_edge(0, 4));
  CHECK(f.graph.has_edge(0, 5));
  CHECK_FALSE(f.graph.has_edge(0, 3));

  CHECK_THROWS_AS(d_graph(2), DomainError);
  CHECK_THROWS_AS(f_graph(3), DomainError);
}

TEST_CASE("H(n) sizes") {
  const Graph h4 = h_graph(4).graph;
  CHECK(h4.order() == 4);
  CHECK(h4.size() == 5);
  const Graph h7 = h_graph(7).graph;
  CHECK(h7.order() == 7);
  CHECK(h7.size() == 9);
  CHECK(h_graph(2).graph == complete_graph(2));
  for (int n = 3; n <= 11; ++n) {
    const Graph h = h_graph(n).graph;
    CHECK(h.order() == n);
    CHECK(h.size() == static_cast<std::size_t>((3 * (n - 1) + 1) / 2));
    CHECK(is_connected(h));
  }
}

TEST_CASE("H_nr sizes and colorings") {
  const Graph h = h_nr_graph(10, 3).graph;
  CHECK(h.order() == 10);
  CHECK(h.size() == 12);
  CHECK(mu(10, 3) == 12);
  for (int n = 6; n <= 14; ++n) {
    for (int r = 3; r <= n / 2; ++r) {
      const Graph g = h_nr_graph(n, r).graph;
      CHECK(g.order() == n);
      CHECK(static_cast<std::int64_t>(g.size()) == mu(n, r));
      const EdgeColoring c = h_nr_coloring(n, r);
      CHECK(c.k() == r);
      CHECK(is_md_coloring(g, c).md);
    }
  }
  CHECK(h_nr_coloring(12, 6) == cycle_md_coloring(12));
  CHECK_THROWS_AS(h_nr_graph(5, 3), DomainError);
  CHECK_THROWS_AS(h_nr_graph(10, 6), DomainError);
  CHECK_THROWS_AS(h_nr_graph(10, 2), DomainError);
}

TEST_CASE("cycle colorings") {
  const Graph c4 = cycle_graph(4);
  const EdgeColoring alt = cycle_md_coloring(4);
  CHECK(alt[*c4.edge_index(0, 1)] == 1);
  CHECK(alt[*c4.edge_index(1, 2)] == 2);
  CHECK(alt[*c4.edge_index(2, 3)] == 1);
  CHECK(alt[*c4.edge_index(3, 0)] == 2);
  for (int n = 3; n <= 12; ++n) {
    const EdgeColoring c = cycle_md_coloring(n);
    CHECK(c.k() == n / 2);
    CHECK(is_md_coloring(cycle_graph(n), c).md);
  }
  const Graph c6 = cycle_graph(6);
  const EdgeColoring c = cycle_md_coloring(6);
  CHECK(c[*c6.edge_index(0, 1)] == c[*c6.edge_index(3, 4)]);
}

TEST_CASE("clique_matching_clique") {
  for (int n = 4; n <= 12; ++n) {
    const Graph g = clique_matching_clique(n).graph;
    CHECK(g.order() == n);
    CHECK(min_degree(g) == n / 2);
    CHECK(is_connected(g));
  }
  CHECK(md_exact(clique_matching_clique(8).graph).value >= 2);
}

TEST_CASE("extremal witnesses") {
  for (int n = 4; n <= 9; ++n) {
    for (int r = 1; r <= n - 2; ++r) {
      CHECK(static_cast<std::int64_t>(f_extremal_graph(n, r).size()) == threshold_f(n, r));
      CHECK(static_cast<std::int64_t>(f_sharp_graph(n, r).size()) == threshold_f(n, r) - 1);
    }
  }
  CHECK(md_exact(f_extremal_graph(6, 2)).value == 2);
  CHECK(md_exact(f_sharp_graph(6, 2)).value == 3);
  CHECK(clique_tail_graph(6, 3).size() == 8);
}

TEST_CASE("attach_path") {
  const Graph g = attach_path(complete_graph(3), 0, 1, 3);
  CHECK(g.order() == 5);
  CHECK(g.size() == 6);
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(3, 4));
  CHECK(g.has_edge(4, 1));
  CHECK_THROWS_AS(attach_path(complete_graph(3), 1, 1, 2), GraphError);
}

TEST_CASE("name table and build") {
  CHECK(parse_family("thm33_G1") == FamilyKind::kFExtremal);
  CHECK(parse_family("thm33_G2") == FamilyKind::kFSharp);
  CHECK(parse_family("T_k") == FamilyKind::kCliqueTail);
  CHECK(parse_family("K") == FamilyKind::kComplete);
  CHECK_FALSE(parse_family("nope").has_value());
  for (const std::string& name : family_names()) {
    const auto kind = parse_family(name);
    REQUIRE(kind);
    CHECK(family_name(*kind) == name);
  }
  CHECK(build({FamilyKind::kH, {7}}).graph == h_graph(7).graph);
  CHECK_THROWS_AS(build({FamilyKind::kH, {7, 1}}), DomainError);
  CHECK_THROWS_AS(build({FamilyKind::kHnr, {5, 3}}), DomainError);
}

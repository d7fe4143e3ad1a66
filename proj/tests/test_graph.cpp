#include <doctest.h>

#include "helpers.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph.hpp"

using namespace mdlab;
using mdlab::test::make;

TEST_CASE("edges are canonical and equality follows the edge list") {
  const Graph a = make(3, {{2, 1}, {0, 1}});
  const Graph b = make(3, {{0, 1}, {1, 2}});
  CHECK(a == b);
  CHECK(a.edge(0) == Edge{0, 1});
  CHECK(a.edge(1) == Edge{1, 2});
  CHECK(a.neighbors(1) == std::vector<Vertex>{0, 2});
  CHECK(a.edge_index(2, 1) == 1);
  CHECK_FALSE(a.edge_index(0, 2).has_value());
}

TEST_CASE("invalid edge lists are rejected") {
  CHECK_THROWS_AS(make(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(make(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(make(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph(65), GraphError);
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(complete_graph(3)));
  const Graph two = make(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two));
  CHECK(components(two) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
  const Graph c5 = cycle_graph(5);
  CHECK(is_connected(delete_edges(c5, std::vector<Edge>{{0, 1}})));
  CHECK(is_connected(Graph(0)));
  CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("delete_vertex and delete_edges") {
  const Transformed k3 = delete_vertex(complete_graph(4), 3);
  CHECK(k3.graph == complete_graph(3));
  CHECK(k3.map[3] == kNoImage);

  const Graph p = delete_edges(cycle_graph(4), std::vector<Edge>{{0, 1}});
  CHECK(p.order() == 4);
  CHECK(p.edges() == std::vector<Edge>{{0, 3}, {1, 2}, {2, 3}});

  const Transformed isolated = delete_vertex(star_graph(3), 0);
  CHECK(isolated.graph.order() == 3);
  CHECK(isolated.graph.size() == 0);
  CHECK(isolated.map.image == std::vector<Vertex>{kNoImage, 0, 1, 2});

  CHECK_THROWS_AS(delete_vertex(complete_graph(3), 3), GraphError);
  CHECK_THROWS_AS(delete_edges(cycle_graph(4), std::vector<Edge>{{0, 2}}), GraphError);
}

TEST_CASE("contract_edge_set") {
  const Graph k3 = complete_graph(3);
  CHECK(contract_edge_set(k3, std::vector<Edge>{{0, 1}}).graph == complete_graph(2));

  const Graph c6 = cycle_graph(6);
  const Transformed t = contract_edge_set(c6, std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(t.graph == complete_graph(3));
  CHECK(t.map.new_order == 3);
  CHECK(t.map[0] == t.map[1]);

  const Graph tree = path_graph(5);
  const Transformed all = contract_edge_set(tree, tree.edges());
  CHECK(all.graph.order() == 1);

  CHECK_THROWS_AS(contract_edge_set(c6, std::vector<Edge>{{0, 2}}), GraphError);
}

TEST_CASE("subdivide_edge") {
  const Graph c4 = subdivide_edge(complete_graph(3), {0, 1});
  CHECK(c4.order() == 4);
  CHECK(c4.size() == 4);
  CHECK(c4.has_edge(0, 3));
  CHECK(c4.has_edge(1, 3));
  CHECK_FALSE(c4.has_edge(0, 1));
  CHECK(min_degree(c4) == 2);

  CHECK(subdivide_edge(cycle_graph(4), {0, 1}).size() == 5);
  const Graph p = subdivide_edge(path_graph(3), {1, 2});
  CHECK(is_tree(p));
  CHECK(max_degree(p) == 2);
  CHECK_THROWS_AS(subdivide_edge(path_graph(3), {0, 2}), GraphError);
}

TEST_CASE("split_off") {
  CHECK(split_off(path_graph(3), 1).graph == complete_graph(2));
  const Transformed s = split_off(cycle_graph(5), 2);
  CHECK(s.graph.order() == 4);
  CHECK(s.graph.size() == 4);
  CHECK(min_degree(s.graph) == 2);
  CHECK(max_degree(s.graph) == 2);
  CHECK(split_off(cycle_graph(4), 0).graph == complete_graph(3));
  CHECK_THROWS_AS(split_off(complete_graph(3), 0), GraphError);
  CHECK_THROWS_AS(split_off(star_graph(3), 0), GraphError);
}

TEST_CASE("bipartiteness and odd girth") {
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(odd_girth(cycle_graph(6)).has_value());
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(odd_girth(cycle_graph(5)) == 5);
  CHECK(odd_girth(mdlab::test::petersen()) == 5);
  CHECK(odd_girth(complete_graph(4)) == 3);
}

TEST_CASE("degrees and common neighbors") {
  const Graph k23 = complete_bipartite_graph(2, 3);
  CHECK(common_neighbors(k23, 0, 1).size() == 3);
  CHECK(common_neighbors(complete_graph(4), 0, 3).size() == 2);
  CHECK(common_neighbors(cycle_graph(5), 0, 1).empty());
  CHECK(degree(k23, 0) == 3);
  CHECK(min_degree(k23) == 2);
  CHECK_THROWS_AS(degree(k23, 5), GraphError);
}

TEST_CASE("cut vertices, trees and pendent edges") {
  CHECK(cut_vertices(mdlab::test::two_triangles_at_vertex()) == std::vector<Vertex>{2});
  CHECK(cut_vertices(cycle_graph(5)).empty());
  CHECK(is_tree(star_graph(4)));
  CHECK_FALSE(is_tree(cycle_graph(3)));
  CHECK(has_pendent_edge(path_graph(3)));
  CHECK_FALSE(has_pendent_edge(cycle_graph(4)));
}

TEST_CASE("transform size invariants on all small graphs") {
  for (const Graph& g : mdlab::test::small_graphs(6)) {
    const Graph s = subdivide_edge(g, g.edge(0));
    CHECK(s.order() == g.order() + 1);
    CHECK(s.size() == g.size() + 1);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 2 || g.has_edge(g.neighbors(v)[0], g.neighbors(v)[1])) continue;
      const Graph t = split_off(g, v).graph;
      CHECK(t.order() == g.order() - 1);
      CHECK(t.size() == g.size() - 1);
    }
    // Contracting a spanning tree (here: every edge) leaves one vertex.
    CHECK(contract_edge_set(g, g.edges()).graph.order() == 1);
    const auto og = odd_girth(g);
    CHECK(og.has_value() == !is_bipartite(g));
    if (og) CHECK(*og % 2 == 1);
  }
}

TEST_CASE("dot export lists every edge") {
  const std::string dot = to_dot(complete_graph(3));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}

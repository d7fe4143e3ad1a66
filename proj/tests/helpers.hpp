#pragma once

#include <vector>

#include "mdlab/extremal.hpp"
#include "mdlab/graph.hpp"

namespace mdlab::test {

inline Graph make(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

inline Graph two_triangles_at_vertex() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

inline Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, std::move(edges));
}

/// Every connected graph with 2 <= n <= max_order, up to isomorphism.
inline std::vector<Graph> small_graphs(int max_order) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_order; ++n) {
    for (Graph& g : enumerate_connected(n)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace mdlab::test

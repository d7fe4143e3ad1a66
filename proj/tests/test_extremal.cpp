#include <doctest.h>

#include <random>
#include <set>

#include "mdlab/errors.hpp"
#include "mdlab/extremal.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph6.hpp"

using namespace mdlab;

namespace {

std::int64_t choose2(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.order(), edges);
}

}  // namespace

TEST_CASE("f values") {
  CHECK(threshold_f(7, 2) == 13);
  CHECK(threshold_f(5, 1) == 8);
  for (int n = 2; n <= 20; ++n) CHECK(threshold_f(n, n - 1) == n - 1);
  for (int n = 4; n <= 50; ++n) CHECK(threshold_f(n, 1) == choose2(n - 1) + 2);
  CHECK_THROWS_AS(threshold_f(5, 0), DomainError);
  CHECK_THROWS_AS(threshold_f(5, 5), DomainError);
}

TEST_CASE("g values") {
  CHECK(threshold_g(7, 3) == 8);
  CHECK(threshold_g(6, 3) == 6);
  CHECK(threshold_g(7, 2) == 8);
  CHECK(threshold_g(5, 3) == 4);
  for (int n = 2; n <= 30; ++n) {
    CHECK(threshold_g(n, 1) == choose2(n));
    for (int r = 2; r <= n - 1; ++r) CHECK(threshold_g(n, r) <= threshold_g(n, r - 1));
  }
  for (int n = 6; n <= 30; ++n) {
    for (int r = 3; r <= n / 2; ++r) CHECK(threshold_g(n, r) == mu(n, r));
    if (n % 2 == 1) CHECK(threshold_g(n, 2) == threshold_g(n, 3));
  }
  CHECK_THROWS_AS(threshold_g(5, 6), DomainError);
  CHECK_THROWS_AS(mu(5, 3), DomainError);
}

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> known{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == known[static_cast<std::size_t>(n - 1)]);
  CHECK_THROWS_AS(enumerate_connected(9), CapacityError);
}

TEST_CASE("enumeration yields distinct canonical representatives") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const Graph& g : enumerate_connected(n)) {
      CHECK(is_connected(g));
      CHECK(canonical_form(g) == g);
      codes.insert(canonical_code(g));
    }
    CHECK(codes.size() == enumerate_connected(n).size());
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(7);
  for (const Graph& g : enumerate_connected(6)) {
    std::vector<Vertex> perm(6);
    for (int i = 0; i < 6; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    CHECK(canonical_code(h) == canonical_code(g));
    CHECK(from_canonical_code(6, canonical_code(h)) == canonical_form(g));
  }
}

TEST_CASE("threshold verification at small orders") {
  const Census c6 = Census::enumerate(6);
  CHECK(c6.entries().size() == 112);
  CHECK(verify_f(c6, 2).verified);
  CHECK(verify_g(c6, 3).verified);

  const Census c5 = Census::enumerate(5);
  const ThresholdReport f54 = verify_f(c5, 4);
  CHECK(f54.verified);
  CHECK(f54.witness_source == "domain-boundary");

  const Census c7 = Census::enumerate(7);
  const ThresholdReport g73 = verify_g(c7, 3);
  CHECK(g73.verified);
  CHECK(g73.threshold == 8);
  REQUIRE(g73.witness);
  CHECK(from_graph6(*g73.witness).size() == 9);
  CHECK(g73.witness_md == 1);
  CHECK(verify_f(c7, 1).verified);
  CHECK(verify_g(c7, 2).verified);
}

TEST_CASE("external catalogs are deduplicated and validated") {
  const std::vector<Graph> graphs{cycle_graph(4), from_graph6(to_graph6(cycle_graph(4))), path_graph(4)};
  const Census c = Census::from_graphs(4, graphs);
  CHECK(c.entries().size() == 2);
  CHECK_THROWS_AS(Census::from_graphs(4, {cycle_graph(5)}), GraphError);
  CHECK_THROWS_AS(Census::from_graphs(4, {Graph(4)}), GraphError);
}

TEST_CASE("parallel census matches the sequential one") {
  CensusOptions opts;
  opts.jobs = 3;
  const Census par = Census::enumerate(6, opts);
  const Census seq = Census::enumerate(6);
  REQUIRE(par.entries().size() == seq.entries().size());
  for (std::size_t i = 0; i < seq.entries().size(); ++i) {
    CHECK(par.entries()[i].graph6 == seq.entries()[i].graph6);
    CHECK(par.entries()[i].md.value == seq.entries()[i].md.value);
  }
}

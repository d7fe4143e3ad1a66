#include <doctest.h>

#include "helpers.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph6.hpp"

using namespace mdlab;

TEST_CASE("decoding small graphs") {
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK(from_graph6("Bg") == path_graph(3));
  const Graph one = from_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);
  CHECK(from_graph6(">>graph6<<Bw\n") == complete_graph(3));
  CHECK(from_graph6("?").order() == 0);
}

TEST_CASE("encoding small graphs") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(Graph(1)) == "@");
  const std::string c4 = to_graph6(cycle_graph(4));
  CHECK(c4.size() == 2);
  CHECK(from_graph6(c4) == cycle_graph(4));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("Bxx"), ParseError);  // trailing byte
  CHECK_THROWS_AS(from_graph6("B"), ParseError);    // missing adjacency
  CHECK_THROWS_AS(from_graph6("Bx"), ParseError);   // nonzero padding bits
  CHECK_THROWS_AS(from_graph6("B\x7f"), ParseError);
  CHECK_THROWS_AS(from_graph6("~"), ParseError);    // long form
  try {
    from_graph6("Bx");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(to_graph6(Graph(63)), CapacityError);
  const Graph big = cycle_graph(62);
  CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("round trip on every small connected graph") {
  for (const Graph& g : mdlab::test::small_graphs(6)) {
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK(from_graph6(to_graph6(mdlab::test::petersen())) == mdlab::test::petersen());
}

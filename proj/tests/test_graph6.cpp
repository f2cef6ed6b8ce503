#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "locdim/errors.hpp"
#include "locdim/graph6.hpp"

using namespace locdim;

TEST_CASE("parse fixed graph6 strings") {
  // "D?{": 5 vertices, first payload byte empty, second is 111100 -> the
  // column-order bits (0,4),(1,4),(2,4),(3,4): a star centered at 4.
  const Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edges() ==
        std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});

  const Graph empty2 = parse_graph6("A?");
  CHECK(empty2.order() == 2);
  CHECK(empty2.edge_count() == 0);

  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.edges() == std::vector<Edge>{{0, 1}});

  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("write fixed graphs") {
  CHECK(write_graph6(Graph(2)) == "A?");
  CHECK(write_graph6(Graph(2, {{0, 1}})) == "A_");
  CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("parse errors name the byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("~??"), ParseError);   // long-format header
  CHECK_THROWS_AS(parse_graph6("\x20"), ParseError);  // header below range
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);    // truncated payload
  CHECK_THROWS_AS(parse_graph6("A?x"), ParseError);   // trailing bytes
  CHECK_THROWS_AS(parse_graph6("A\x10"), ParseError); // payload below range

  try {
    parse_graph6("B\x10");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  try {
    parse_graph6("A?xyz");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("round trip on 500 random graphs up to n = 10") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 500; ++round) {
    const int n = static_cast<int>(rng() % 11);
    const Graph g = testing::random_labeled_graph(n, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

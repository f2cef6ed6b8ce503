#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "locdim/constructor.hpp"
#include "locdim/errors.hpp"
#include "locdim/generators.hpp"
#include "locdim/oracle.hpp"

using namespace locdim;

namespace {

// diamond {0,1,2,3} with degree-3 pair {0,2}, one triangle {4,5,6},
// connected through the degree-2 vertex 1.
Graph diamond_plus_triangle() {
  return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3},
                   {1, 4}, {4, 5}, {4, 6}, {5, 6}});
}

// diamond touching two triangles through both of its degree-2 vertices
Graph diamond_two_triangles() {
  return Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3},
                    {4, 5}, {4, 6}, {5, 6},
                    {7, 8}, {7, 9}, {8, 9},
                    {1, 4}, {3, 7}});
}

}  // namespace

TEST_CASE("initial selection keeps half of every fragment") {
  SUBCASE("diamond keeps its degree-2 pair") {
    const Graph g = named_graph("diamond");
    const auto d = local_vertex_division(g);
    CHECK(initial_selection(g, d) == (vertex_bit(1) | vertex_bit(3)));
  }
  SUBCASE("C4 keeps one diagonal") {
    const Graph g = named_graph("C4");
    const auto d = local_vertex_division(g);
    CHECK(initial_selection(g, d) == (vertex_bit(0) | vertex_bit(2)));
  }
  SUBCASE("P7 splits into a P4 and a P3 kept by its endpoints") {
    const Graph g = named_graph("P7");
    const auto d = local_vertex_division(g);
    REQUIRE(d.layers[4].size() == 1);
    REQUIRE(d.layers[7].size() == 1);
    // P4 {0,1,2,3} gives {0,2}; the path {4,5,6} gives its endpoints
    CHECK(initial_selection(g, d) ==
          (vertex_bit(0) | vertex_bit(2) | vertex_bit(4) | vertex_bit(6)));
  }
  SUBCASE("C6 splits into a P4 and a K2") {
    const Graph g = named_graph("C6");
    const auto d = local_vertex_division(g);
    REQUIRE(d.layers[4].size() == 1);
    REQUIRE(d.layers[8].size() == 1);
    // P4 {0,1,2,3} contributes its first non-adjacent pair {0,2}; the K2
    // {4,5} contributes its smaller vertex.
    CHECK(initial_selection(g, d) == (vertex_bit(0) | vertex_bit(2) | vertex_bit(4)));
  }
  SUBCASE("every non-triangle placement gives at least half its vertices") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 40; ++round) {
      const Graph g = random_k4_free(4 + static_cast<int>(rng() % 8), 0.4, rng());
      const auto d = local_vertex_division(g);
      const VertexSet s = initial_selection(g, d);
      for (int layer = 0; layer < 10; ++layer) {
        for (const auto& p : d.layers[static_cast<std::size_t>(layer)]) {
          if (layer == 2) {
            REQUIRE((s & p.mask()) == 0);
          } else {
            REQUIRE(2 * set_size(s & p.mask()) >= p.order());
          }
        }
      }
    }
  }
}

TEST_CASE("triangle adjacency sets") {
  const Graph g = diamond_two_triangles();
  const auto d = local_vertex_division(g);
  REQUIRE(d.layers[0].size() == 1);
  REQUIRE(d.layers[2].size() == 2);

  std::vector<bool> absorbed(2, false);
  const auto both = triangles_adjacent_to(g, d.layers[0][0].mask(), d.layers[2], absorbed);
  CHECK(both == std::vector<int>{0, 1});

  absorbed[0] = true;
  const auto one = triangles_adjacent_to(g, d.layers[0][0].mask(), d.layers[2], absorbed);
  CHECK(one == std::vector<int>{1});

  absorbed[1] = true;
  CHECK(triangles_adjacent_to(g, d.layers[0][0].mask(), d.layers[2], absorbed).empty());

  // a far-away vertex set touches nothing
  absorbed = {false, false};
  CHECK(triangles_adjacent_to(g, vertex_bit(0), d.layers[2], absorbed).empty());
}

TEST_CASE("distinguished pairs") {
  // u = 0 adjacent to triangle corners 1 and 2 but not 3; vertex 4 hangs off 3
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const DistanceMatrix dm = DistanceMatrix::compute(g);
  const auto tri = classify_induced(g, std::vector<int>{1, 2, 3});
  REQUIRE(tri.has_value());

  const std::vector<FragmentPlacement> y{*tri};
  const auto pairs = distinguished_pairs(dm, vertex_bit(0), y);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == Edge{1, 3});  // first listed edge whose corners 0 separates

  CHECK(distinguished_pairs(dm, vertex_bit(0), {}).empty());

  // inside K4 every corner is at distance one from everything
  const Graph k4 = named_graph("K4");
  const DistanceMatrix dk4 = DistanceMatrix::compute(k4);
  const auto tri4 = classify_induced(k4, std::vector<int>{1, 2, 3});
  REQUIRE(tri4.has_value());
  const std::vector<FragmentPlacement> y4{*tri4};
  CHECK(distinguished_pairs(dk4, vertex_bit(0), y4).empty());
}

TEST_CASE("processes leave triangle-free divisions untouched") {
  for (const char* name : {"C4", "C6", "P5", "K1,4"}) {
    const Graph g = named_graph(name);
    const auto d = local_vertex_division(g);
    const VertexSet s0 = initial_selection(g, d);
    const auto st = run_processes(g, d, s0);
    CHECK(st.s == s0);
    CHECK(st.trace.empty());
    CHECK(st.pairs1.empty());
    CHECK(st.pairs2.empty());
  }
}

TEST_CASE("a lone diamond-triangle contact goes through the Z1 drain") {
  const Graph g = diamond_plus_triangle();
  const auto d = local_vertex_division(g);
  const auto st = run_processes(g, d, initial_selection(g, d));
  REQUIRE(st.trace.size() == 1);
  CHECK(st.trace[0].process == 13);
  CHECK(st.trace[0].step == "13.3");
  CHECK(st.s == (vertex_bit(2) | vertex_bit(3) | vertex_bit(4) | vertex_bit(5)));
  CHECK(st.z1.empty());
  CHECK(st.z2.empty());
}

TEST_CASE("two triangles on one diamond go through process 1") {
  const Graph g = diamond_two_triangles();
  const auto d = local_vertex_division(g);
  const auto st = run_processes(g, d, initial_selection(g, d));
  REQUIRE_FALSE(st.trace.empty());
  CHECK(st.trace[0].process == 1);
  CHECK(st.absorbed_count() == 2);
  // both triangles contribute a distinguished pair; the diamond keeps the
  // vertex found by (1.5)
  const auto cert = construct_certificate(g);
  CHECK(cert.bound_ok);
  CHECK_FALSE(cert.repair_performed);
  CHECK(cert.w_size() <= 5);
}

TEST_CASE("trace replay is deterministic") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    const Graph g = random_k4_free(10, 0.35, rng());
    const auto d = local_vertex_division(g);
    const VertexSet s0 = initial_selection(g, d);
    const auto a = run_processes(g, d, s0);
    const auto b = run_processes(g, d, s0);
    CHECK(a.s == b.s);
    CHECK(trace_json(a.trace) == trace_json(b.trace));
  }
}

TEST_CASE("every triangle is handled exactly once") {
  std::mt19937_64 rng(53);
  int with_triangles = 0;
  for (int round = 0; round < 60; ++round) {
    const Graph g = random_k4_free(8 + static_cast<int>(rng() % 5), 0.45, rng());
    const auto d = local_vertex_division(g);
    const auto st = run_processes(g, d, initial_selection(g, d));
    with_triangles += !d.layers[2].empty();
    CHECK(st.z1.empty());
    CHECK(st.z2.empty());
    CHECK(st.absorbed_count() + static_cast<int>(st.pairs1.size() + st.pairs2.size()) ==
          static_cast<int>(d.layers[2].size()));
  }
  CHECK(with_triangles > 0);  // the corpus actually exercised the processes
}

TEST_CASE("certificates on fixed graphs") {
  SUBCASE("diamond") {
    const auto cert = construct_certificate(named_graph("diamond"));
    CHECK(cert.w == std::vector<int>{0, 2});
    CHECK(cert.bound == 2);
    CHECK(cert.bound_ok);
    CHECK_FALSE(cert.repair_performed);
    CHECK(cert.witness.empty());  // S = {1,3} spans no edge
  }
  SUBCASE("C5") {
    const auto cert = construct_certificate(named_graph("C5"));
    CHECK(cert.w_size() <= 2);
    CHECK(cert.bound_ok);
    CHECK(local_metric_dimension(named_graph("C5")).k == 2);  // so W is optimal
  }
  SUBCASE("friendship k=3") {
    const auto cert = construct_certificate(friendship_graph(3));
    CHECK(cert.w_size() == 3);
    CHECK(cert.bound_ok);
    CHECK(local_metric_dimension(friendship_graph(3)).k == 3);
  }
}

TEST_CASE("certificate witnesses check out against distances") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_k4_free(6 + static_cast<int>(rng() % 6), 0.45, rng());
    const auto cert = construct_certificate(g);
    const DistanceMatrix dm = DistanceMatrix::compute(g);
    const VertexSet w = to_vertex_set(cert.w);
    CHECK(is_local_resolving(g, dm, w).ok);
    // the table covers exactly the edges inside S
    std::size_t expected = 0;
    for (auto [u, v] : g.edges())
      expected += !contains(w, u) && !contains(w, v);
    REQUIRE(cert.witness.size() == expected);
    for (const auto& [u, v, x] : cert.witness) {
      REQUIRE(g.has_edge(u, v));
      REQUIRE(contains(w, x));
      REQUIRE_FALSE(contains(w, u));
      REQUIRE_FALSE(contains(w, v));
      REQUIRE(dm(x, u) != dm(x, v));
    }
  }
}

TEST_CASE("certificate input contract") {
  CHECK_THROWS_AS(construct_certificate(named_graph("K4")), InputContractError);
  CHECK_THROWS_AS(construct_certificate(named_graph("K5")), InputContractError);
  CHECK_THROWS_AS(construct_certificate(named_graph("triangle")), InputContractError);
  CHECK_THROWS_AS(construct_certificate(named_graph("2K2")), InputContractError);
}

TEST_CASE("strict mode agrees with the default on clean cases") {
  ConstructOptions strict;
  strict.strict = true;
  for (const Graph& g : {diamond_plus_triangle(), friendship_graph(4),
                         named_graph("C6"), diamond_two_triangles()}) {
    const auto a = construct_certificate(g);
    const auto b = construct_certificate(g, strict);
    CHECK(a.w == b.w);
    CHECK(certificate_json(a) == certificate_json(b));
  }
}

TEST_CASE("certificate json carries the documented fields") {
  const auto cert = construct_certificate(diamond_plus_triangle());
  const auto compact = certificate_json(cert, true);
  for (const char* key :
       {"\"n\":", "\"omega\":", "\"W\":", "\"bound\":", "\"bound_ok\":",
        "\"repair_performed\":", "\"witness\":", "\"trace\":"}) {
    CAPTURE(key);
    CHECK(compact.find(key) != std::string::npos);
  }
  const auto without = certificate_json(cert, false);
  CHECK(without.find("\"trace\":") == std::string::npos);
}

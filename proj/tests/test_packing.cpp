#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "locdim/errors.hpp"
#include "locdim/generators.hpp"
#include "locdim/packing.hpp"

using namespace locdim;

namespace {

Graph two_triangles() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace

TEST_CASE("maximum packings on fixed graphs") {
  const Graph t2 = two_triangles();
  CHECK(max_disjoint_packing(t2, FragmentClass::triangle, t2.vertex_mask()).size() == 2);

  const Graph c6 = named_graph("C6");
  CHECK(max_disjoint_packing(c6, FragmentClass::path4, c6.vertex_mask()).size() == 1);

  const Graph fr3 = friendship_graph(3);
  CHECK(max_disjoint_packing(fr3, FragmentClass::diamond, fr3.vertex_mask()).empty());
  CHECK(max_disjoint_packing(fr3, FragmentClass::paw, fr3.vertex_mask()).size() == 1);
}

TEST_CASE("packing size equals exhaustive recursion") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 80; ++round) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const Graph g = random_k4_free(n, 0.45, rng());
    const VertexSet allowed = g.vertex_mask();
    for (int c = 1; c <= 9; ++c) {
      const auto cls = fragment_class_at(c);
      REQUIRE(static_cast<int>(max_disjoint_packing(g, cls, allowed).size()) ==
              testing::brute_max_packing_size(g, cls, allowed));
    }
  }
}

TEST_CASE("packing respects the node budget") {
  // three hub-sharing triangles: the fractional bound stays above the
  // optimum of one, so the search must actually descend
  PackingBudget tiny;
  tiny.node_cap = 1;
  const Graph fr3 = friendship_graph(3);
  CHECK_THROWS_AS(
      max_disjoint_packing(fr3, FragmentClass::triangle, fr3.vertex_mask(), tiny),
      BudgetError);
  // a generous budget returns the optimum instead
  PackingBudget roomy;
  roomy.node_cap = 1000;
  CHECK(max_disjoint_packing(fr3, FragmentClass::triangle, fr3.vertex_mask(), roomy)
            .size() == 1);
}

TEST_CASE("division of fixed graphs") {
  SUBCASE("diamond") {
    const auto d = local_vertex_division(named_graph("diamond"));
    CHECK(d.layers[0].size() == 1);
    for (int i = 1; i < 10; ++i) CHECK(d.layers[static_cast<std::size_t>(i)].empty());
  }
  SUBCASE("C4") {
    const auto d = local_vertex_division(named_graph("C4"));
    CHECK(d.layers[3].size() == 1);
    CHECK(d.layer_mask(3) == named_graph("C4").vertex_mask());
  }
  SUBCASE("friendship k=2") {
    const auto d = local_vertex_division(friendship_graph(2));
    CHECK(d.layers[1].size() == 1);            // one paw through the hub
    CHECK(d.layers[1][0].mask() == 0b01111u);  // vertices {0,1,2,3}
    CHECK(d.layers[9].size() == 1);            // vertex 4 is left isolated
    CHECK(d.layers[9][0].slot[0] == 4);
    CHECK(d.layers[2].empty());
  }
}

TEST_CASE("division preconditions") {
  CHECK_THROWS_AS(local_vertex_division(named_graph("K4")), InputContractError);
  CHECK_THROWS_AS(local_vertex_division(named_graph("triangle")), InputContractError);
  CHECK_THROWS_AS(local_vertex_division(named_graph("2K2")), InputContractError);
}

TEST_CASE("division partitions the vertex set and every stage is optimal") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 40; ++round) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = random_k4_free(n, 0.4, rng());
    const auto d = local_vertex_division(g);

    VertexSet seen = 0;
    for (int i = 0; i < 10; ++i) {
      REQUIRE((seen & d.layer_mask(i)) == 0);
      seen |= d.layer_mask(i);
    }
    REQUIRE(seen == g.vertex_mask());

    // Each stage's packing size equals the exhaustive optimum computed on the
    // same residual, and no further placement fits next to it.
    for (int i = 0; i < 9; ++i) {
      const VertexSet residual = d.residual[static_cast<std::size_t>(i)];
      REQUIRE(static_cast<int>(d.layers[static_cast<std::size_t>(i)].size()) ==
              testing::brute_max_packing_size(g, fragment_class_at(i + 1), residual));
      REQUIRE(testing::brute_occurrence_masks(g, fragment_class_at(i + 1),
                                              residual & ~d.layer_mask(i))
                  .empty());
    }
  }
}

TEST_CASE("division is deterministic") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 10; ++round) {
    const Graph g = random_k4_free(9, 0.5, rng());
    const auto a = local_vertex_division(g);
    const auto b = local_vertex_division(g);
    CHECK(division_trace_json(a) == division_trace_json(b));
    for (int i = 0; i < 10; ++i)
      CHECK(a.layers[static_cast<std::size_t>(i)] ==
            b.layers[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("structural audit passes on small corpora") {
  for (int n = 4; n <= 5; ++n) {
    testing::for_each_labeled_graph(n, [](const Graph& g) {
      if (!is_connected(g) || has_k4(g)) return;
      const auto d = local_vertex_division(g);
      const auto report = check_division_facts(g, d);
      if (!report.all_pass()) {
        CAPTURE(report.first_failure()->name);
        CAPTURE(report.first_failure()->witness);
      }
      REQUIRE(report.all_pass());
    });
  }
}

TEST_CASE("structural audit names a corrupted division") {
  const Graph g = friendship_graph(2);
  auto d = local_vertex_division(g);
  // move the leftover vertex into a second fake F10 slot of the paw's hub
  FragmentPlacement fake;
  fake.cls = FragmentClass::single_vertex;
  fake.slot[0] = 0;
  d.layers[9].push_back(fake);
  const auto report = check_division_facts(g, d);
  CHECK_FALSE(report.all_pass());
  CHECK(report.first_failure()->name == "division_wellformed");
  CHECK(report.first_failure()->witness.find("vertex 0") != std::string::npos);
}

TEST_CASE("division trace is one json line per placement") {
  const auto d = local_vertex_division(friendship_graph(3));
  const auto trace = division_trace_json(d);
  std::size_t lines = 0;
  for (char ch : trace) lines += ch == '\n';
  std::size_t placements = 0;
  for (const auto& layer : d.layers) placements += layer.size();
  CHECK(lines == placements);
  CHECK(trace.find("\"class\":\"F2\"") != std::string::npos);
}

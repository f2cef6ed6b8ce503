#pragma once

#include <array>
#include <string>
#include <vector>

#include "locdim/fragments.hpp"
#include "locdim/graph.hpp"

namespace locdim {

struct PackingBudget {
  long long node_cap = 10'000'000;
};

// Exact maximum set of pairwise vertex-disjoint induced occurrences of cls
// inside `allowed`. Deterministic: depth-first over placements in
// lexicographic order, the first optimum found is kept. Throws BudgetError
// when the search exceeds the node cap; never degrades to a greedy answer.
std::vector<FragmentPlacement> max_disjoint_packing(
    const Graph& g, FragmentClass cls, VertexSet allowed,
    const PackingBudget& budget = {});

// The fixed local vertex division: layers[i] holds the stage-(i+1) maximum
// packing of F(i+1) in the shrinking residual graph, layers[9] the leftover
// isolated vertices. residual[i] is the vertex set the stage-(i+1) search
// ran on (residual[0] = V(G), residual[9] = final isolated set).
struct Division {
  std::array<std::vector<FragmentPlacement>, 10> layers;
  std::array<VertexSet, 10> residual{};

  VertexSet layer_mask(int layer_index0) const;
};

// Builds the division for a connected K4-free graph with n >= 4. Throws
// InputContractError naming the violated clause otherwise.
Division local_vertex_division(const Graph& g, const PackingBudget& budget = {});

struct FactCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // empty when the check passes
};

struct FactReport {
  std::vector<FactCheck> checks;
  bool all_pass() const;
  const FactCheck* first_failure() const;
};

// Evaluates the structural assertions the construction relies on: a
// well-formedness check of the division itself, five neighborhood facts
// about layers 1, 2, 4, 5 and 6..9, and four statements about how the
// triangle layer sits inside the graph. Failures are data, not errors.
FactReport check_division_facts(const Graph& g, const Division& d);

// JSON lines, one per placement: {"layer":i,"class":"Fi","vertices":[...],
// "roles":{"a1":v,...}}.
std::string division_trace_json(const Division& d);

}  // namespace locdim

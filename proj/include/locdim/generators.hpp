#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "locdim/graph.hpp"

namespace locdim {

// k triangles sharing hub vertex 0: n = 2k+1, edges {0,i} and {2i-1,2i}.
Graph friendship_graph(int k);

// Incremental-rejection sampler: visits all vertex pairs in a seeded random
// order, keeps each with probability p unless the edge would close a clique
// on omega_cap + 1 vertices, then joins components with random admissible
// edges until connected. Not uniform over the family; deterministic per seed.
Graph random_clique_capped(int n, double p, std::uint64_t seed, int omega_cap);

Graph random_k4_free(int n, double p, std::uint64_t seed);

// "C5", "P4", "K4", "K1,3", "friendship:3", fragment names ("diamond",
// "paw", "claw", "2K2", ...) and their F1..F10 aliases.
Graph named_graph(std::string_view name);

}  // namespace locdim

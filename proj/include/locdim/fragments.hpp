#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

// The fragment catalog: the nine non-complete graphs on at most four
// vertices without isolated vertices, plus the single vertex as F10.
enum class FragmentClass : int {
  diamond = 1,        // F1, K4 minus one edge
  paw = 2,            // F2, triangle with a pendant edge
  triangle = 3,       // F3
  cycle4 = 4,         // F4
  path4 = 5,          // F5
  claw = 6,           // F6, K_{1,3}
  two_k2 = 7,         // F7
  path3 = 8,          // F8
  single_edge = 9,    // F9
  single_vertex = 10  // F10
};

FragmentClass fragment_class_at(int index1);  // 1-based F-index

struct FragmentInfo {
  FragmentClass id;
  const char* name;  // "F1".."F10"
  int order;
  std::vector<Edge> slot_edges;               // edges over slot indices
  std::array<const char*, 4> slot_names;      // unused slots are nullptr
  std::array<int, 4> slot_degrees;            // degree of each slot, -1 unused
};

const FragmentInfo& fragment_info(FragmentClass cls);

// One induced occurrence of a catalog class, with slot -> vertex role map.
struct FragmentPlacement {
  FragmentClass cls = FragmentClass::single_vertex;
  std::array<int, 4> slot{-1, -1, -1, -1};

  int order() const { return fragment_info(cls).order; }
  VertexSet mask() const;
  std::vector<int> sorted_vertices() const;
  // Vertices of the given slots, as a set.
  VertexSet slots_mask(std::span<const int> slot_indices) const;

  friend bool operator==(const FragmentPlacement&, const FragmentPlacement&) = default;
};

// Classifies the subgraph induced by vs. Returns the catalog class and a
// canonical role map (degree-driven, smaller vertex index to the earlier
// slot), or nullopt when the induced subgraph is complete on >= 2 vertices
// or has an isolated vertex. Throws InputContractError on duplicate or
// out-of-range vertices.
std::optional<FragmentPlacement> classify_induced(const Graph& g,
                                                  std::span<const int> vs);

// All induced occurrences of cls with vertices inside `allowed`, one per
// vertex set, sorted lexicographically by sorted vertex tuple.
std::vector<FragmentPlacement> enumerate_placements(const Graph& g,
                                                    FragmentClass cls,
                                                    VertexSet allowed);

}  // namespace locdim

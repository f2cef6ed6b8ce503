#pragma once

#include <array>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "locdim/fragments.hpp"
#include "locdim/graph.hpp"
#include "locdim/packing.hpp"

namespace locdim {

struct ConstructOptions {
  // Strict mode follows the written procedure to the letter: a missing
  // degree/adjacency witness in steps (1.5)/(2.4) raises ConstructionError
  // instead of falling back, and the twelfth process draws its second index
  // from Z1 as written rather than from Z2.
  bool strict = false;
  PackingBudget budget{};
};

// The kept set S: half of every non-triangle fragment, everything else is
// handed to W = V(G) - S.
VertexSet initial_selection(const Graph& g, const Division& d);

// Indices (into layer 3 of the division) of the not-yet-absorbed triangles
// with at least one edge to h_mask.
std::vector<int> triangles_adjacent_to(const Graph& g, VertexSet h_mask,
                                       const std::vector<FragmentPlacement>& triangles,
                                       const std::vector<bool>& absorbed);

// Largest set of two-subsets {x, y} such that xy is an edge of a triangle in
// Y, some vertex of U has different distances to x and y, and each triangle
// contributes at most one pair. Per-triangle greedy with lexicographic edge
// choice; exact because triangles are handled independently.
std::vector<Edge> distinguished_pairs(const DistanceMatrix& dm, VertexSet u_set,
                                      std::span<const FragmentPlacement> y);

struct TraceStep {
  int process = 0;  // 1..15, 16 for post-hoc repair
  std::string step;
  std::vector<int> consumed;  // vertices that left S
  std::vector<int> produced;  // vertices that entered S
};

// A triangle paired with its host diamond (pairs1) or paw (pairs2), with
// the role labels the later processes manipulate. For a diamond host,
// h[1] is a degree-2 vertex adjacent to the triangle, h[3] the other
// degree-2 vertex, h[0]/h[2] the degree-3 pair; f[1] is a triangle vertex
// adjacent to h[1] and f[0] one that is not. For a paw host, h[1] is the
// degree-3 vertex, h[2] the pendant, h[3] the degree-2 vertex kept in S,
// h[0] the other; f[1] is adjacent to h[1], f[0] is not.
struct PairedTriangle {
  int triangle = -1;  // index into division layer 3
  int host = -1;      // index into division layer 1 or 2
  std::array<int, 3> f{-1, -1, -1};
  std::array<int, 4> h{-1, -1, -1, -1};
};

struct ProcessState {
  VertexSet s = 0;
  std::vector<bool> absorbed;  // per layer-3 placement
  std::vector<PairedTriangle> pairs1, pairs2;
  std::set<int> z1, z2;  // active indices into pairs1 / pairs2
  VertexSet pool10 = 0;  // leftover-vertex pool, shared by processes 4 and 14
  std::vector<TraceStep> trace;

  int absorbed_count() const;
};

// Runs the fifteen absorption processes over the initial selection, each as
// a fixed-point loop, threading S, the absorbed set, the pairings and the
// consumable pools. Deterministic for a fixed division.
ProcessState run_processes(const Graph& g, const Division& d, VertexSet s0,
                           const ConstructOptions& opt = {});

struct Certificate {
  int n = 0;
  int omega = 0;
  int bound = 0;  // floor(n/2)
  std::vector<int> w;
  bool bound_ok = false;
  bool repair_performed = false;
  // One entry per edge with both endpoints outside W: (u, v, witness in W).
  std::vector<std::tuple<int, int, int>> witness;
  std::vector<TraceStep> trace;

  int w_size() const { return static_cast<int>(w.size()); }
};

// Full pipeline: contract check, division, structural audit, initial
// selection, the fifteen processes, then unconditional oracle verification.
// If verification finds an unresolved edge, one endpoint is moved back to W
// and the repair is recorded; a bound violation is reported through the
// verdict fields, never an exception.
Certificate construct_certificate(const Graph& g, const ConstructOptions& opt = {});

std::string certificate_json(const Certificate& cert, bool include_trace = true,
                             int indent = -1);

std::string trace_json(const std::vector<TraceStep>& trace);

}  // namespace locdim

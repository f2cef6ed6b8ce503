#pragma once

#include <string>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

struct ResolveVerdict {
  bool ok = true;
  int u = -1;  // lexicographically first failing edge when !ok
  int v = -1;
};

// True verdict iff every edge with both endpoints outside W has a vertex of
// W at different distances from its endpoints. Requires a connected graph.
ResolveVerdict is_local_resolving(const Graph& g, VertexSet w);
ResolveVerdict is_local_resolving(const Graph& g, const DistanceMatrix& dm,
                                  VertexSet w);

struct OracleOptions {
  int cap = 16;  // maximum order for exhaustive search
};

struct DimlResult {
  int k = 0;
  std::vector<int> witness;  // first witness in (size, lex) order
};

// Exact local metric dimension by subset enumeration in increasing size,
// lexicographic within size. Throws OracleCapError above the cap.
DimlResult local_metric_dimension(const Graph& g, const OracleOptions& opt = {});

struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;   // vacuously true when not applicable
  bool tight = false;  // equality attained
  std::string detail;
};

struct BoundsReport {
  int n = 0;
  int omega = 0;
  int dim_l = 0;
  std::vector<BoundCheck> checks;
  bool all_hold() const;
};

// Computes dim_l exactly and evaluates every known bound that applies:
// the max(ceil(log2 w), n - 2^(n-w)) lower bound, the ((w-1)/w)n upper
// bound (tight only for complete graphs), the (2/5)n triangle-free bound
// (w = 2, n >= 3), and the floor(n/2) bound for K4-free graphs with n >= 4.
BoundsReport check_known_bounds(const Graph& g, const OracleOptions& opt = {});

std::string bounds_report_json(const BoundsReport& report);

}  // namespace locdim

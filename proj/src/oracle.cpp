#include "locdim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "locdim/errors.hpp"
#include "json.hpp"

namespace locdim {

ResolveVerdict is_local_resolving(const Graph& g, const DistanceMatrix& dm,
                                  VertexSet w) {
  if (w & ~g.vertex_mask())
    throw InputContractError("candidate set contains vertices outside the graph");
  for (auto [u, v] : g.edges()) {
    if (contains(w, u) || contains(w, v)) continue;
    bool resolved = false;
    for (int x : elements(w)) {
      if (dm(x, u) != dm(x, v)) {
        resolved = true;
        break;
      }
    }
    if (!resolved) return {false, u, v};
  }
  return {true, -1, -1};
}

ResolveVerdict is_local_resolving(const Graph& g, VertexSet w) {
  if (!is_connected(g))
    throw InputContractError("local resolving check requires a connected graph");
  return is_local_resolving(g, DistanceMatrix::compute(g), w);
}

DimlResult local_metric_dimension(const Graph& g, const OracleOptions& opt) {
  if (!is_connected(g))
    throw InputContractError("local metric dimension requires a connected graph");
  const int n = g.order();
  if (n > opt.cap)
    throw OracleCapError("order " + std::to_string(n) +
                         " above the exhaustive-search cap of " +
                         std::to_string(opt.cap));
  const DistanceMatrix dm = DistanceMatrix::compute(g);

  std::vector<int> idx;
  for (int k = 0; k <= n; ++k) {
    // k-combinations in lexicographic order
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      VertexSet w = 0;
      for (int v : idx) w |= vertex_bit(v);
      if (is_local_resolving(g, dm, w).ok) return {k, idx};
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  // W = V(G) always resolves, so the loop cannot fall through.
  throw std::logic_error("subset search exhausted without a witness");
}

bool BoundsReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.holds; });
}

namespace {

int ceil_log2(int w) { return w <= 1 ? 0 : std::bit_width(static_cast<unsigned>(w - 1)); }

}  // namespace

BoundsReport check_known_bounds(const Graph& g, const OracleOptions& opt) {
  BoundsReport report;
  report.dim_l = local_metric_dimension(g, opt).k;
  report.n = g.order();
  report.omega = clique_number(g);
  const long long n = report.n;
  const long long omega = report.omega;
  const long long dim_l = report.dim_l;

  {
    // max(ceil(log2 w), n - 2^(n-w)) <= dim_l
    const long long log_term = ceil_log2(report.omega);
    const long long pow_term =
        n - omega >= 62 ? std::numeric_limits<long long>::min()
                        : n - (1LL << (n - omega));
    const long long lhs = std::max(log_term, pow_term);
    BoundCheck c;
    c.name = "lower_clique";
    c.applicable = true;
    c.holds = lhs <= dim_l;
    c.tight = lhs == dim_l;
    c.detail = "max(" + std::to_string(log_term) + ", " +
               std::to_string(pow_term) + ") <= " + std::to_string(dim_l);
    report.checks.push_back(c);
  }
  {
    // dim_l <= ((w-1)/w) n, equality only for complete graphs
    BoundCheck c;
    c.name = "upper_clique_ratio";
    c.applicable = true;
    c.holds = dim_l * omega <= (omega - 1) * n;
    c.tight = dim_l * omega == (omega - 1) * n;
    c.detail = std::to_string(dim_l) + " <= " + std::to_string(omega - 1) +
               "/" + std::to_string(omega) + " * " + std::to_string(n);
    report.checks.push_back(c);
  }
  {
    // dim_l <= (2/5) n for triangle-free graphs on at least 3 vertices
    BoundCheck c;
    c.name = "upper_triangle_free";
    c.applicable = omega == 2 && n >= 3;
    if (c.applicable) {
      c.holds = 5 * dim_l <= 2 * n;
      c.tight = 5 * dim_l == 2 * n;
      c.detail = std::to_string(dim_l) + " <= 2/5 * " + std::to_string(n);
    }
    report.checks.push_back(c);
  }
  {
    // dim_l <= floor(n/2) for K4-free graphs on at least 4 vertices
    BoundCheck c;
    c.name = "upper_half_order";
    c.applicable = omega <= 3 && n >= 4;
    if (c.applicable) {
      c.holds = dim_l <= n / 2;
      c.tight = dim_l == n / 2;
      c.detail = std::to_string(dim_l) + " <= floor(" + std::to_string(n) + "/2)";
    }
    report.checks.push_back(c);
  }
  return report;
}

std::string bounds_report_json(const BoundsReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["omega"] = report.omega;
  j["dim_l"] = report.dim_l;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["applicable"] = c.applicable;
    if (c.applicable) {
      e["holds"] = c.holds;
      e["tight"] = c.tight;
      e["detail"] = c.detail;
    }
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j.dump();
}

}  // namespace locdim

#include "locdim/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <string>
#include <vector>

#include "locdim/errors.hpp"

namespace locdim {

Graph friendship_graph(int k) {
  if (k < 1) throw InputContractError("friendship graph needs k >= 1");
  const int n = 2 * k + 1;
  if (n > max_order)
    throw UnsupportedSizeError("friendship graph with k = " + std::to_string(k) +
                               " exceeds 62 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= k; ++i) edges.emplace_back(2 * i - 1, 2 * i);
  return Graph(n, edges);
}

namespace {

// Would adding uv close a clique on cap + 1 vertices?
bool closes_clique(const std::vector<VertexSet>& adj, int u, int v, int cap) {
  const VertexSet common = adj[static_cast<std::size_t>(u)] &
                           adj[static_cast<std::size_t>(v)];
  if (cap == 2) return common != 0;  // uv plus a common neighbor is a triangle
  // cap == 3: a K4 needs an edge inside the common neighborhood.
  for (int w : elements(common))
    if (adj[static_cast<std::size_t>(w)] & common &
        ~(vertex_bit(w) | (vertex_bit(w) - 1)))
      return true;
  return false;
}

std::vector<int> component_labels(const std::vector<VertexSet>& adj, int n) {
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    VertexSet seen = vertex_bit(s);
    VertexSet frontier = seen;
    while (frontier) {
      VertexSet nxt = 0;
      for (int v : elements(frontier)) nxt |= adj[static_cast<std::size_t>(v)];
      nxt &= ~seen;
      seen |= nxt;
      frontier = nxt;
    }
    for (int v : elements(seen)) label[static_cast<std::size_t>(v)] = next;
    ++next;
  }
  return label;
}

}  // namespace

Graph random_clique_capped(int n, double p, std::uint64_t seed, int omega_cap) {
  if (n < 1 || n > max_order)
    throw InputContractError("random graph order must be in 1..62");
  if (p < 0.0 || p > 1.0)
    throw InputContractError("edge probability must be in [0, 1]");
  if (omega_cap != 2 && omega_cap != 3)
    throw InputContractError("clique cap must be 2 or 3");

  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    adj[static_cast<std::size_t>(u)] |= vertex_bit(v);
    adj[static_cast<std::size_t>(v)] |= vertex_bit(u);
    edges.emplace_back(u, v);
  };

  std::bernoulli_distribution keep(p);
  for (auto [u, v] : pairs) {
    const bool wanted = keep(rng);
    if (wanted && !closes_clique(adj, u, v, omega_cap)) add(u, v);
  }

  // Join components with random cross edges; a cross edge has an empty
  // common neighborhood, so it can never close a clique.
  for (;;) {
    const auto label = component_labels(adj, n);
    if (*std::max_element(label.begin(), label.end()) == 0) break;
    std::vector<Edge> cross;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (label[static_cast<std::size_t>(u)] !=
            label[static_cast<std::size_t>(v)])
          cross.emplace_back(u, v);
    std::uniform_int_distribution<std::size_t> pick(0, cross.size() - 1);
    auto [u, v] = cross[pick(rng)];
    add(u, v);
  }
  return Graph(n, edges);
}

Graph random_k4_free(int n, double p, std::uint64_t seed) {
  return random_clique_capped(n, p, seed, 3);
}

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
    throw InputContractError("bad number in graph name: '" + std::string(s) + "'");
  return value;
}

Graph cycle(int n) {
  if (n < 3) throw InputContractError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  std::sort(edges.begin(), edges.end());
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  return Graph(n, edges);
}

Graph path(int n) {
  if (n < 1) throw InputContractError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw InputContractError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star(int leaves) {
  if (leaves < 1) throw InputContractError("star needs at least 1 leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name == "diamond" || name == "F1")
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  if (name == "paw" || name == "F2")
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  if (name == "triangle" || name == "F3") return cycle(3);
  if (name == "F4") return cycle(4);
  if (name == "F5") return path(4);
  if (name == "claw" || name == "F6") return star(3);
  if (name == "2K2" || name == "F7") return Graph(4, {{0, 1}, {2, 3}});
  if (name == "F8") return path(3);
  if (name == "F9") return complete(2);
  if (name == "F10") return complete(1);
  if (name == "petersen") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    for (auto& [u, v] : edges)
      if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    return Graph(10, edges);
  }

  constexpr std::string_view friendship_prefix = "friendship:";
  if (name.substr(0, friendship_prefix.size()) == friendship_prefix)
    return friendship_graph(parse_int(name.substr(friendship_prefix.size())));

  if (name.size() >= 2) {
    const char kind = name[0];
    const std::string_view rest = name.substr(1);
    if (kind == 'K') {
      const auto comma = rest.find(',');
      if (comma != std::string_view::npos) {
        if (parse_int(rest.substr(0, comma)) != 1)
          throw InputContractError("only K1,m stars are supported");
        return star(parse_int(rest.substr(comma + 1)));
      }
      return complete(parse_int(rest));
    }
    if (kind == 'C') return cycle(parse_int(rest));
    if (kind == 'P') return path(parse_int(rest));
  }
  throw InputContractError("unknown graph name: '" + std::string(name) + "'");
}

}  // namespace locdim

#include "locdim/graph.hpp"

#include <array>
#include <string>

#include "locdim/errors.hpp"

namespace locdim {

std::vector<int> to_vertex_list(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for (int v : elements(s)) out.push_back(v);
  return out;
}

VertexSet to_vertex_set(std::span<const int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vertex_bit(v);
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_order)
    throw UnsupportedSizeError("graph order must be between 0 and " +
                               std::to_string(max_order) + ", got " +
                               std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputContractError("vertex " + std::to_string(v) +
                             " out of range [0, " + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw InputContractError("self-loop at vertex " + std::to_string(u));
  if (contains(adj_[static_cast<std::size_t>(u)], v)) return;
  adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
  adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return contains(adj_[static_cast<std::size_t>(u)], v);
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::neighbor_list(int v) const {
  return to_vertex_list(neighbors(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : elements(adj_[static_cast<std::size_t>(u)]))
      if (v > u) out.emplace_back(u, v);
  return out;
}

std::vector<int> distances_from(const Graph& g, int source) {
  if (source < 0 || source >= g.order())
    throw InputContractError("BFS source " + std::to_string(source) +
                             " out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.order()),
                        unreachable_distance);
  dist[static_cast<std::size_t>(source)] = 0;
  VertexSet seen = vertex_bit(source);
  VertexSet frontier = seen;
  int level = 0;
  while (frontier) {
    VertexSet next = 0;
    for (int v : elements(frontier)) next |= g.neighbors(v);
    next &= ~seen;
    ++level;
    for (int v : elements(next)) dist[static_cast<std::size_t>(v)] = level;
    seen |= next;
    frontier = next;
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = vertex_bit(0);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (int v : elements(frontier)) next |= g.neighbors(v);
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == g.vertex_mask();
}

namespace {

struct CliqueSearch {
  const Graph& g;
  int best = 0;

  void expand(VertexSet cand, int size) {
    if (cand == 0) {
      if (size > best) best = size;
      return;
    }
    // Greedy coloring of the candidate set; color index bounds the clique
    // extension reachable through each vertex.
    std::array<int, max_order> order{};
    std::array<int, max_order> bound{};
    int cnt = 0;
    VertexSet uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      VertexSet cls = uncolored;
      while (cls) {
        int v = std::countr_zero(cls);
        cls &= ~(vertex_bit(v) | g.neighbors(v));
        uncolored &= ~vertex_bit(v);
        order[static_cast<std::size_t>(cnt)] = v;
        bound[static_cast<std::size_t>(cnt)] = color;
        ++cnt;
      }
    }
    for (int i = cnt - 1; i >= 0; --i) {
      if (size + bound[static_cast<std::size_t>(i)] <= best) return;
      int v = order[static_cast<std::size_t>(i)];
      expand(cand & g.neighbors(v), size + 1);
      cand &= ~vertex_bit(v);
    }
  }
};

}  // namespace

int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  CliqueSearch search{g};
  search.best = 1;
  search.expand(g.vertex_mask(), 0);
  return search.best;
}

bool has_k4(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    VertexSet above_u = g.neighbors(u) & ~(vertex_bit(u) | (vertex_bit(u) - 1));
    for (int v : elements(above_u)) {
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      for (int w : elements(common)) {
        if (g.neighbors(w) & common & ~(vertex_bit(w) | (vertex_bit(w) - 1)))
          return true;
      }
    }
  }
  return false;
}

DistanceMatrix DistanceMatrix::compute(const Graph& g) {
  DistanceMatrix dm;
  dm.n_ = g.order();
  dm.d_.resize(static_cast<std::size_t>(dm.n_) * dm.n_);
  for (int v = 0; v < dm.n_; ++v) {
    auto row = distances_from(g, v);
    std::copy(row.begin(), row.end(),
              dm.d_.begin() + static_cast<std::size_t>(v) * dm.n_);
  }
  return dm;
}

}  // namespace locdim

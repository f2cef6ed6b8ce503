#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace locdim {

// Vertices are dense indices 0..n-1 and vertex sets are 64-bit masks; the
// graph6 short format tops out at 62 vertices, which bounds the whole
// library to desk scale.
inline constexpr int max_order = 62;

// Distance reported by BFS for vertices not reached from the source.
inline constexpr int unreachable_distance = -1;

using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }

// Range over the members of a vertex set, ascending.
class VertexSetRange {
 public:
  explicit constexpr VertexSetRange(VertexSet s) : set_(s) {}
  class iterator {
   public:
    explicit constexpr iterator(VertexSet rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    VertexSet rest_;
  };
  constexpr iterator begin() const { return iterator{set_}; }
  constexpr iterator end() const { return iterator{0}; }

 private:
  VertexSet set_;
};

constexpr VertexSetRange elements(VertexSet s) { return VertexSetRange{s}; }

std::vector<int> to_vertex_list(VertexSet s);
VertexSet to_vertex_set(std::span<const int> vs);

// Immutable simple undirected graph with adjacency bitmasks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const;
  VertexSet neighbors(int v) const;
  int degree(int v) const { return std::popcount(neighbors(v)); }
  VertexSet vertex_mask() const {
    return n_ == 0 ? 0 : ~VertexSet{0} >> (64 - n_);
  }
  std::vector<int> neighbor_list(int v) const;
  std::vector<Edge> edges() const;  // (u, v) with u < v, lexicographic

  bool operator==(const Graph&) const = default;

 private:
  void add_edge(int u, int v);
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

// BFS levels from a source; unreachable vertices get unreachable_distance.
std::vector<int> distances_from(const Graph& g, int source);

bool is_connected(const Graph& g);

// Exact maximum clique size, branch and bound with a greedy coloring bound.
int clique_number(const Graph& g);

// Direct scan for four mutually adjacent vertices.
bool has_k4(const Graph& g);

// All-pairs BFS table, computed once and shared by subset checks.
class DistanceMatrix {
 public:
  static DistanceMatrix compute(const Graph& g);
  int operator()(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  int order() const { return n_; }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

}  // namespace locdim

#include "locdim/graph6.hpp"

#include <string>
#include <vector>

#include "locdim/errors.hpp"

namespace locdim {

// graph6 short format: one header byte n + 63, then the upper triangle in
// column order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...) packed big-endian
// into 6-bit groups, each group offset by 63.

namespace {

constexpr int g6_offset = 63;
constexpr int g6_max_byte = 126;

int payload_length(int n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == g6_max_byte)
    throw ParseError("extended size header: orders above 62 are unsupported", 0);
  if (header < g6_offset || header > g6_max_byte)
    throw ParseError("header byte outside graph6 range", 0);
  const int n = header - g6_offset;

  const int need = payload_length(n);
  if (static_cast<int>(text.size()) - 1 < need)
    throw ParseError("truncated bit vector: need " + std::to_string(need) +
                         " payload bytes, got " +
                         std::to_string(text.size() - 1),
                     text.size());
  if (static_cast<int>(text.size()) - 1 > need)
    throw ParseError("trailing data after graph6 payload",
                     static_cast<std::size_t>(1 + need));
  for (int i = 0; i < need; ++i) {
    const unsigned char c = static_cast<unsigned char>(text[1 + i]);
    if (c < g6_offset || c > g6_max_byte)
      throw ParseError("payload byte outside graph6 range",
                       static_cast<std::size_t>(1 + i));
  }

  std::vector<Edge> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      const int value = text[1 + bit / 6] - g6_offset;
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
      ++bit;
    }
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > max_order)
    throw UnsupportedSizeError("graph6 short format supports at most 62 vertices");
  std::vector<int> groups(static_cast<std::size_t>(payload_length(n)), 0);
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (g.has_edge(row, col))
        groups[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
      ++bit;
    }
  }
  std::string out;
  out.reserve(groups.size() + 1);
  out.push_back(static_cast<char>(g6_offset + n));
  for (int v : groups) out.push_back(static_cast<char>(g6_offset + v));
  return out;
}

}  // namespace locdim

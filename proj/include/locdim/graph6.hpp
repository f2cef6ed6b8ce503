#pragma once

#include <string>
#include <string_view>

#include "locdim/graph.hpp"

namespace locdim {

// Decodes one line of graph6 text (short format, n <= 62). Throws ParseError
// with the byte offset on malformed input.
Graph parse_graph6(std::string_view text);

// Encodes a graph as one graph6 line (no trailing newline). Throws
// UnsupportedSizeError for n > 62.
std::string write_graph6(const Graph& g);

}  // namespace locdim

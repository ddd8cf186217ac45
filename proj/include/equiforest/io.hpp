#pragma once

#include <string>
#include <string_view>

#include "equiforest/graph.hpp"

namespace equiforest {

/// Standard graph6 ASCII encoding: N(n) header, then the upper-triangle
/// adjacency bits in column order, 6 bits per character, offset 63.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// One "u v" pair of 0-based decimal indices per line. The vertex count is
/// max index + 1 unless a "#n=<int>" header line is present. Lines starting
/// with '#' are otherwise ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Same format, but each line is a directed pair. The underlying undirected
/// graph must be simple, so each edge appears exactly once.
Orientation parse_arc_list(std::string_view text);
std::string write_arc_list(const Orientation& o);

}  // namespace equiforest

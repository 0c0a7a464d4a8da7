#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "breadthkit/graph.hpp"

namespace breadthkit {

/// Edge list: one `u v` pair of non-negative integers per line, `#`
/// comment lines and blank lines ignored, duplicates collapsed. Labels are
/// remapped to dense indices in ascending label order and kept on the graph.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Single graph6 line (an optional `>>graph6<<` prefix and trailing
/// whitespace are accepted).
Graph parse_graph6(std::string_view line);

/// Every non-empty line of a graph6 stream.
std::vector<Graph> read_graph6(std::istream& in);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace breadthkit

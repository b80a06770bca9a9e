#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tds/graph.hpp"

namespace tds {

enum class GraphFormat { graph6, edge_list };

/// Parses one graph6 string (an optional ">>graph6<<" prefix is accepted).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list format:
///
///     n <count>
///     u v
///     ...
///
/// Blank lines and lines starting with '#' are ignored. Self-loops,
/// duplicate edges and out-of-range ids are ParseErrors carrying the line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Picks the format from content: a leading "n " header means edge list.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize(const Graph& g, GraphFormat format);

/// Reads a stream of graph6 lines, skipping blank lines. The line number
/// of a malformed entry is reported in the ParseError.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Whitespace-separated vertex ids, one sequence per line.
std::string format_sequence(const std::vector<int>& sequence);
std::vector<int> parse_sequence(std::string_view line);

}  // namespace tds

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kcover/graph.hpp"

namespace kcover {

// graph6, short form only (n <= 62). Accepts an optional ">>graph6<<" header
// and trailing CR/LF. Malformed input throws parse_error with a byte offset.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// "u v" per line, '#' comments, optional leading "n <count>" header.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

std::string to_dot(const Graph& g, std::string_view name = "G");

enum class GraphFormat { automatic, graph6, edge_list };

// One graph per graph6 line, or a single edge-list graph. Parse-error offsets
// are relative to the start of `text`.
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format);

// Format implied by a file name's extension; automatic when unknown.
GraphFormat format_for_path(std::string_view path);

}  // namespace kcover

#pragma once

#include <string>
#include <string_view>

#include "geodex/graph.hpp"

namespace geodex::io {

enum class GraphFormat { automatic, graph6, edge_list };

GraphFormat parse_format_name(const std::string& name);

// graph6: optional ">>graph6<<" header, N(n) then the column-wise upper
// triangle packed six bits per byte with offset 63. Orders up to 258047.
Graph parse_graph6(std::string_view text);
std::string render_graph6(const Graph& g);

// Edge list: first non-comment line holds n, every further line "u v".
// '#' starts a comment. Errors carry the 1-based line and column.
Graph parse_edge_list(std::string_view text);
std::string render_edge_list(const Graph& g);

// `automatic` picks edge-list when the first non-blank line is a lone
// integer or the payload contains whitespace between tokens, graph6 otherwise.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);
std::string render_graph(const Graph& g, GraphFormat format);

}  // namespace geodex::io

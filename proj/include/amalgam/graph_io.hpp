#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "amalgam/graph.hpp"

namespace amalgam {

// Text format: `n <count>`, optional `order p0 p1 ...` (least first),
// then `e u v` lines with u < v. `#` starts a comment.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string to_text(const Graph& g);
std::string to_dot(const Graph& g, std::string_view name = "G");

/// "0,2,5" -> {0,2,5}; empty string -> {}.
VertexSet parse_vertex_list(std::string_view text);
/// {0,2,5} -> "{0,2,5}"
std::string format_set(VertexSet s);

}  // namespace amalgam

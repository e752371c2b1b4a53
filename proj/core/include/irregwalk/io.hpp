#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "irregwalk/graph.hpp"
#include "irregwalk/walk.hpp"

namespace irregwalk {

/**
   Edge-list text: one `u v` pair per line, 0-indexed. Anything after
   `#` is a comment. An optional first data line `n <count>` fixes the vertex
   count; otherwise n = max index + 1. Throws ParseError, or the graph
   construction errors.
 */
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);
std::string format_edge_list(const Graph& g);

/// Whitespace-separated vertex indices; blank input is the empty walk.
Walk parse_walk(std::string_view text);
Walk read_walk(const std::filesystem::path& path);
std::string format_walk(const Walk& w);

/**
   DOT digraph: base edges as undirected-looking solid arcs, walk edges as
   dashed arcs labelled by their position in the walk (1-based).
 */
std::string to_dot(const Graph& g, const Walk& w);

} // namespace irregwalk

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lks/graph.hpp"
#include "lks/tree.hpp"

namespace lks {

enum class GraphFormat { Auto, Graph6, EdgeList };

// Errors report the byte offset of the first bad byte.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);
Graph parse_edgelist(const std::string& text);
std::string to_edgelist(const Graph& g);
Graph parse_graph(const std::string& text, GraphFormat fmt = GraphFormat::Auto);

// Every non-empty line of a graph6 stream, in order.
std::vector<Graph> parse_graph6_stream(const std::string& text);

// "n root" then n parent entries (-1 for the root); or, when root is given,
// an edge list "n m" + "u v" lines rooted there.
RootedTree parse_tree(const std::string& text, std::optional<int> root = std::nullopt);
std::string to_tree_text(const RootedTree& t);

// Whitespace separated vertex ids (commas allowed).
VertexSet parse_vertex_list(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace lks

#pragma once

#include <string>
#include <string_view>

#include "twoclub/graph.hpp"

namespace twoclub {

/// DIMACS: "p edge N M" header, "e u v" lines with 1-based ids, "c" comments.
/// EDGELIST: "N" on the first line, then "u v" per line, 0-based.
enum class GraphFormat { Dimacs, EdgeList };

/// Throws ParseError carrying the 1-based line number of the offending line.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Deterministic: edges are written ascending with u < v.
std::string emit_graph(const Graph &g, GraphFormat format);

/// DIMACS when the first non-blank line starts with 'c' or 'p'.
GraphFormat sniff_format(std::string_view text);

Graph read_graph_file(const std::string &path);
void write_graph_file(const std::string &path, const Graph &g, GraphFormat format);

GraphFormat parse_format_name(std::string_view name);

} // namespace twoclub

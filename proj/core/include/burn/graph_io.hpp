#pragma once

#include "burn/graph.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace burn {

/// edge_list: one "u v" pair per line, 0-indexed, '#' starts a comment.
/// dimacs: "p edge <n> <m>" header then m lines "e <u> <v>", 1-indexed,
/// 'c' lines are comments. Only the dimacs form can express isolated vertices.
enum class GraphFormat { edge_list, dimacs };

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& message);
    int line;
};

Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

/// Guesses the format from the first relevant line ('p'/'c' means dimacs).
GraphFormat sniff_format(const std::string& text);

/// Reads a graph file; sniffs the format unless one is given.
Graph load_graph_file(const std::string& path,
                      std::optional<GraphFormat> format = std::nullopt);

/// Writing a graph with isolated vertices in edge_list format throws
/// std::invalid_argument, since that format cannot mention them.
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);
std::string format_graph(const Graph& g, GraphFormat format);

}  // namespace burn

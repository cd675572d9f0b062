#include "burn/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace burn {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      line(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool parse_int(const std::string& tok, int& out) {
    try {
        std::size_t pos = 0;
        long value = std::stol(tok, &pos);
        if (pos != tok.size()) return false;
        if (value < std::numeric_limits<int>::min() ||
            value > std::numeric_limits<int>::max())
            return false;
        out = static_cast<int>(value);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ParseError(line, message);
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line.substr(0, line.find('#')));
        if (tokens.empty()) continue;
        if (tokens.size() != 2) fail(line_no, "expected edge \"u v\"");
        int u, v;
        if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            fail(line_no, "edge endpoints must be integers");
        if (u < 0 || v < 0) fail(line_no, "edge endpoints must be non-negative");
        if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }
    Graph g(max_id + 1);
    for (const auto& [u, v] : edges) g.add_edge(u, v);  // repeats collapse
    return g;
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    int declared_m = -1;
    int edge_lines = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (declared_n >= 0) fail(line_no, "duplicate problem line");
            if (tokens.size() != 4 || tokens[1] != "edge")
                fail(line_no, "expected \"p edge <n> <m>\"");
            if (!parse_int(tokens[2], declared_n) || !parse_int(tokens[3], declared_m))
                fail(line_no, "problem line values must be integers");
            if (declared_n < 0 || declared_m < 0)
                fail(line_no, "problem line values must be non-negative");
            continue;
        }
        if (tokens[0] == "e") {
            if (declared_n < 0) fail(line_no, "edge before problem line");
            if (tokens.size() != 3) fail(line_no, "expected \"e <u> <v>\"");
            int u, v;
            if (!parse_int(tokens[1], u) || !parse_int(tokens[2], v))
                fail(line_no, "edge endpoints must be integers");
            if (u < 1 || u > declared_n || v < 1 || v > declared_n)
                fail(line_no, "edge endpoint out of range [1, " +
                                  std::to_string(declared_n) + "]");
            if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
            ++edge_lines;
            continue;
        }
        fail(line_no, "unrecognized line type \"" + tokens[0] + "\"");
    }
    if (declared_n < 0) fail(line_no, "missing problem line");
    if (edge_lines != declared_m)
        fail(line_no, "problem line declared " + std::to_string(declared_m) +
                          " edges, found " + std::to_string(edge_lines));
    Graph g(declared_n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);  // repeats collapse
    return g;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(in) : parse_dimacs(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return parse_graph(in, format);
}

GraphFormat sniff_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c" || tokens[0] == "p" || tokens[0] == "e")
            return GraphFormat::dimacs;
        return GraphFormat::edge_list;
    }
    return GraphFormat::edge_list;
}

Graph load_graph_file(const std::string& path, std::optional<GraphFormat> format) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    return parse_graph(text, format ? *format : sniff_format(text));
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
    if (format == GraphFormat::edge_list) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0)
                throw std::invalid_argument(
                    "edge_list format cannot represent isolated vertex " +
                    std::to_string(v));
        for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& [u, v] : g.edges())
            out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }
}

std::string format_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    write_graph(out, g, format);
    return out.str();
}

}  // namespace burn

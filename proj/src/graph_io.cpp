#include "twoclub/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "twoclub/errors.hpp"

namespace twoclub {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

std::uint64_t parse_count(std::string_view word, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(word) + "'");
    }
    return value;
}

// Calls fn(line_no, words) for every non-blank line.
template <typename Fn>
void for_each_line(std::string_view text, Fn &&fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        auto words = split_words(line);
        if (!words.empty()) {
            fn(line_no, words);
        }
    }
}

Graph make_graph(std::size_t n, const std::vector<Edge> &edges, const std::vector<std::size_t> &lines) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= n || v >= n) {
            throw ParseError(lines[i], "vertex id out of range");
        }
        if (u == v) {
            throw ParseError(lines[i], "self-loop");
        }
    }
    return Graph(n, edges);
}

Graph parse_dimacs(std::string_view text) {
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t declared_edges = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> lines;

    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view> &words) {
        if (words[0] == "c") {
            return;
        }
        if (words[0] == "p") {
            if (have_header) {
                throw ParseError(line_no, "duplicate problem line");
            }
            if (words.size() != 4 || (words[1] != "edge" && words[1] != "col")) {
                throw ParseError(line_no, "expected 'p edge N M'");
            }
            n = parse_count(words[2], line_no);
            declared_edges = parse_count(words[3], line_no);
            have_header = true;
            header_line = line_no;
            return;
        }
        if (words[0] == "e") {
            if (!have_header) {
                throw ParseError(line_no, "edge line before problem line");
            }
            if (words.size() != 3) {
                throw ParseError(line_no, "expected 'e u v'");
            }
            auto u = parse_count(words[1], line_no);
            auto v = parse_count(words[2], line_no);
            if (u == 0 || v == 0) {
                throw ParseError(line_no, "DIMACS vertex ids are 1-based");
            }
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            lines.push_back(line_no);
            return;
        }
        throw ParseError(line_no, "unknown line type '" + std::string(words[0]) + "'");
    });

    if (!have_header) {
        throw ParseError(1, "missing problem line");
    }
    if (edges.size() != declared_edges) {
        throw ParseError(header_line, "problem line declares " + std::to_string(declared_edges) +
                                          " edges but " + std::to_string(edges.size()) + " were given");
    }
    return make_graph(n, edges, lines);
}

Graph parse_edge_list(std::string_view text) {
    bool have_count = false;
    std::uint64_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> lines;

    for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view> &words) {
        if (!have_count) {
            if (words.size() != 1) {
                throw ParseError(line_no, "expected the vertex count on its own line");
            }
            n = parse_count(words[0], line_no);
            have_count = true;
            return;
        }
        if (words.size() != 2) {
            throw ParseError(line_no, "expected 'u v'");
        }
        edges.emplace_back(static_cast<Vertex>(parse_count(words[0], line_no)),
                           static_cast<Vertex>(parse_count(words[1], line_no)));
        lines.push_back(line_no);
    });

    if (!have_count) {
        throw ParseError(1, "missing vertex count");
    }
    return make_graph(n, edges, lines);
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string emit_graph(const Graph &g, GraphFormat format) {
    std::ostringstream out;
    auto edges = g.edges();
    if (format == GraphFormat::Dimacs) {
        out << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges) {
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
        }
    } else {
        out << g.num_vertices() << '\n';
        for (auto [u, v] : edges) {
            out << u << ' ' << v << '\n';
        }
    }
    return out.str();
}

GraphFormat sniff_format(std::string_view text) {
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && (text[start] == 'c' || text[start] == 'p')) {
        return GraphFormat::Dimacs;
    }
    return GraphFormat::EdgeList;
}

Graph read_graph_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    return parse_graph(text, sniff_format(text));
}

void write_graph_file(const std::string &path, const Graph &g, GraphFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << emit_graph(g, format);
}

GraphFormat parse_format_name(std::string_view name) {
    if (name == "dimacs") {
        return GraphFormat::Dimacs;
    }
    if (name == "edgelist") {
        return GraphFormat::EdgeList;
    }
    throw Error("unknown graph format '" + std::string(name) + "'");
}

} // namespace twoclub

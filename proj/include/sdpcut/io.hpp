#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace sdpcut {

namespace detail {

struct LineTokens {
    std::size_t line_no = 0;
    std::vector<std::string_view> tokens;
};

inline std::vector<LineTokens> tokenize_lines(std::string_view text) {
    std::vector<LineTokens> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        LineTokens lt{line_no, {}};
        std::size_t k = 0;
        while (k < line.size()) {
            while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
            const std::size_t start = k;
            while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
            if (k > start) lt.tokens.push_back(line.substr(start, k - start));
        }
        if (!lt.tokens.empty()) out.push_back(std::move(lt));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

inline Error parse_error(std::size_t line, const std::string& what) {
    return Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::int64_t parse_int(std::string_view tok, std::size_t line) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

class EdgeCollector {
public:
    explicit EdgeCollector(std::int64_t n) : n_(n) {}

    void add(std::int64_t u, std::int64_t v, std::size_t line) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw Error(Errc::VertexOutOfRange, "line " + std::to_string(line) + ": vertex out of range");
        if (u == v) throw Error(Errc::SelfLoop, "line " + std::to_string(line) + ": self-loop at " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen_.emplace(u, v).second)
            throw Error(Errc::DuplicateEdge, "line " + std::to_string(line) + ": edge repeated");
        edges_.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }

    Graph finish() { return Graph(static_cast<Vertex>(n_), std::move(edges_)); }

private:
    std::int64_t n_;
    std::set<std::pair<std::int64_t, std::int64_t>> seen_;
    std::vector<Edge> edges_;
};

inline void check_header(std::int64_t n, std::int64_t m, std::size_t line) {
    if (n < 0 || m < 0) throw parse_error(line, "negative size in header");
    if (n > 100'000'000) throw parse_error(line, "vertex count too large");
}

inline Graph parse_dimacs(const std::vector<LineTokens>& lines) {
    std::int64_t n = -1, m = -1, seen = 0;
    std::optional<EdgeCollector> edges;
    for (const auto& lt : lines) {
        const auto& t = lt.tokens;
        if (t[0] == "c") continue;
        if (t[0] == "p") {
            if (edges) throw parse_error(lt.line_no, "second problem line");
            if (t.size() != 4) throw parse_error(lt.line_no, "expected 'p edge n m'");
            n = parse_int(t[2], lt.line_no);
            m = parse_int(t[3], lt.line_no);
            check_header(n, m, lt.line_no);
            edges.emplace(n);
            continue;
        }
        if (t[0] == "e") {
            if (!edges) throw parse_error(lt.line_no, "edge before problem line");
            if (t.size() != 3) throw parse_error(lt.line_no, "expected 'e u v'");
            edges->add(parse_int(t[1], lt.line_no) - 1, parse_int(t[2], lt.line_no) - 1, lt.line_no);
            ++seen;
            continue;
        }
        throw parse_error(lt.line_no, "unknown line type '" + std::string(t[0]) + "'");
    }
    if (!edges) throw parse_error(0, "missing problem line");
    if (seen != m)
        throw parse_error(lines.back().line_no,
                          "header declares " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return edges->finish();
}

inline Graph parse_edge_list(const std::vector<LineTokens>& lines) {
    const auto& head = lines.front();
    if (head.tokens.size() != 2) throw parse_error(head.line_no, "expected header 'n m'");
    const auto n = parse_int(head.tokens[0], head.line_no);
    const auto m = parse_int(head.tokens[1], head.line_no);
    check_header(n, m, head.line_no);
    if (static_cast<std::int64_t>(lines.size()) - 1 != m)
        throw parse_error(lines.back().line_no, "header declares " + std::to_string(m) + " edges, found " +
                                                    std::to_string(lines.size() - 1));
    EdgeCollector edges(n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& lt = lines[k];
        if (lt.tokens.size() != 2) throw parse_error(lt.line_no, "expected 'u v'");
        edges.add(parse_int(lt.tokens[0], lt.line_no), parse_int(lt.tokens[1], lt.line_no), lt.line_no);
    }
    return edges.finish();
}

} // namespace detail

/// Parses either the edge-list format ("n m" header, then "u v" per line,
/// 0-indexed) or DIMACS ("p edge n m", "e u v", 1-indexed, "c" comments).
/// The format is chosen by the first token.
inline Graph parse_graph(std::string_view text) {
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw detail::parse_error(1, "empty input");
    const auto first = lines.front().tokens.front();
    if (first == "p" || first == "c") return detail::parse_dimacs(lines);
    return detail::parse_edge_list(lines);
}

/// Canonical edge list: "n m", then "u v" with u < v in lexicographic order.
inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

} // namespace sdpcut

#pragma once

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace stpack {

// Edge-list text format:
//   p <n> <m>
//   e <a> <b>      (exactly m lines, 0 <= a < b < n)
// '#' starts a comment line; blank lines are ignored.

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline bool read_count(std::istringstream &in, std::size_t &out) {
    long long value = 0;
    if (!(in >> value) || value < 0)
        return false;
    out = static_cast<std::size_t>(value);
    return true;
}

} // namespace detail

inline Graph read_graph(std::string_view text) {
    std::istringstream lines{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(lines, raw)) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        std::istringstream in{std::string(line)};
        std::string tag;
        in >> tag;
        if (tag == "p") {
            if (have_header)
                throw parse_error(line_no, "second 'p' line");
            if (!detail::read_count(in, n) || !detail::read_count(in, m))
                throw parse_error(line_no, "malformed header, expected 'p <n> <m>'");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header)
                throw parse_error(line_no, "edge before 'p' header");
            std::size_t a = 0, b = 0;
            if (!detail::read_count(in, a) || !detail::read_count(in, b))
                throw parse_error(line_no, "malformed edge, expected 'e <a> <b>'");
            if (a == b)
                throw parse_error(line_no, "self-loop at vertex " + std::to_string(a));
            if (a >= n || b >= n)
                throw parse_error(line_no, "endpoint out of range for n=" + std::to_string(n));
            if (a > b)
                throw parse_error(line_no, "endpoints must be listed smaller first");
            Edge e(a, b);
            if (!seen.insert(e).second)
                throw parse_error(line_no, "duplicate edge " + to_string(e));
            edges.push_back(e);
        } else {
            throw parse_error(line_no, "unknown line tag '" + tag + "'");
        }
        std::string extra;
        if (in >> extra)
            throw parse_error(line_no, "trailing token '" + extra + "'");
    }
    if (!have_header)
        throw parse_error(line_no, "missing 'p <n> <m>' header");
    if (edges.size() != m)
        throw parse_error(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                       std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

/// Canonical form: header, then edges in sorted order. `preamble` lines are
/// emitted as comments before the header.
inline std::string write_graph(const Graph &g, const std::vector<std::string> &preamble = {}) {
    std::ostringstream out;
    for (const auto &line : preamble)
        out << "# " << line << '\n';
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto &e : g.edges())
        out << "e " << e.a << ' ' << e.b << '\n';
    return out.str();
}

/// Graphviz rendering; edges in `highlight` are drawn bold.
inline std::string to_dot(const Graph &g, const EdgeSet &highlight = {}, std::string_view name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (!g.labels().empty() && !g.labels()[v].empty())
            out << " [label=\"" << g.labels()[v] << "\"]";
        out << ";\n";
    }
    for (const auto &e : g.edges()) {
        out << "  " << e.a << " -- " << e.b;
        if (highlight.contains(e))
            out << " [penwidth=3]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace stpack

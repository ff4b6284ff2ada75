#pragma once

#include <cstddef>
#include <regex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace stpack {

enum class Family { path, cycle, complete, complete_multipartite, hypercube, complete_minus_edge };

/// A named graph family plus its parameters.
///
/// Vertex numbering is canonical per family:
///   - path / cycle: 0..n-1 in order along the path or cycle;
///   - complete_multipartite(parts, size): vertex p*size + i is member i of part p;
///   - hypercube(d): vertex id is the binary code, adjacent iff codes differ in one bit;
///   - complete_minus_edge(n): K_n without the edge {n-2, n-1}.
struct FamilySpec {
    Family kind = Family::complete;
    std::size_t n = 1;    ///< order, part count, or dimension
    std::size_t size = 1; ///< part size (complete_multipartite only)

    static FamilySpec path(std::size_t n) { return {Family::path, n, 1}; }
    static FamilySpec cycle(std::size_t n) { return {Family::cycle, n, 1}; }
    static FamilySpec complete(std::size_t n) { return {Family::complete, n, 1}; }
    static FamilySpec multipartite(std::size_t parts, std::size_t size) {
        return {Family::complete_multipartite, parts, size};
    }
    static FamilySpec hypercube(std::size_t d) { return {Family::hypercube, d, 1}; }
    static FamilySpec complete_minus_edge(std::size_t n) { return {Family::complete_minus_edge, n, 1}; }

    friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

/// Short name: P4, C5, K6, K3(2), Q3, K4-.
inline std::string to_string(const FamilySpec &spec) {
    auto n = std::to_string(spec.n);
    switch (spec.kind) {
    case Family::path:
        return "P" + n;
    case Family::cycle:
        return "C" + n;
    case Family::complete:
        return "K" + n;
    case Family::complete_multipartite:
        return "K" + n + "(" + std::to_string(spec.size) + ")";
    case Family::hypercube:
        return "Q" + n;
    case Family::complete_minus_edge:
        return "K" + n + "-";
    }
    return "?";
}

inline void validate(const FamilySpec &spec) {
    auto fail = [&](const std::string &bound) {
        throw parameter_error(to_string(spec) + ": requires " + bound);
    };
    switch (spec.kind) {
    case Family::path:
    case Family::complete:
        if (spec.n < 1)
            fail("n >= 1");
        break;
    case Family::cycle:
        if (spec.n < 3)
            fail("n >= 3");
        break;
    case Family::complete_multipartite:
        if (spec.n < 2)
            fail("at least 2 parts");
        if (spec.size < 1)
            fail("part size >= 1");
        break;
    case Family::hypercube:
        if (spec.n < 1)
            fail("dimension >= 1");
        if (spec.n > 20)
            fail("dimension <= 20");
        break;
    case Family::complete_minus_edge:
        if (spec.n < 3)
            fail("n >= 3");
        break;
    }
}

inline Graph generate(const FamilySpec &spec) {
    validate(spec);
    std::vector<Edge> edges;
    std::size_t order = spec.n;
    switch (spec.kind) {
    case Family::path:
        for (Vertex v = 0; v + 1 < spec.n; ++v)
            edges.emplace_back(v, v + 1);
        break;
    case Family::cycle:
        for (Vertex v = 0; v < spec.n; ++v)
            edges.emplace_back(v, (v + 1) % spec.n);
        break;
    case Family::complete:
    case Family::complete_minus_edge:
        for (Vertex a = 0; a < spec.n; ++a)
            for (Vertex b = a + 1; b < spec.n; ++b)
                edges.emplace_back(a, b);
        if (spec.kind == Family::complete_minus_edge)
            std::erase(edges, Edge(spec.n - 2, spec.n - 1));
        break;
    case Family::complete_multipartite:
        order = spec.n * spec.size;
        for (Vertex a = 0; a < order; ++a)
            for (Vertex b = a + 1; b < order; ++b)
                if (a / spec.size != b / spec.size)
                    edges.emplace_back(a, b);
        break;
    case Family::hypercube:
        order = std::size_t{1} << spec.n;
        for (Vertex a = 0; a < order; ++a)
            for (std::size_t bit = 0; bit < spec.n; ++bit)
                if (Vertex b = a ^ (std::size_t{1} << bit); a < b)
                    edges.emplace_back(a, b);
        break;
    }
    return Graph(order, std::move(edges));
}

/// Parses the short names produced by to_string(FamilySpec).
inline FamilySpec parse_family(const std::string &text) {
    static const std::regex pattern(R"(^([PCKQ])(\d+)(?:\((\d+)\)|(-))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw parameter_error("unrecognized graph family '" + text + "' (expected e.g. P4, C5, K6, K3(2), Q3, K4-)");
    const char letter = m[1].str()[0];
    const auto n = static_cast<std::size_t>(std::stoul(m[2].str()));
    const bool parts = m[3].matched;
    const bool minus = m[4].matched;
    if ((parts || minus) && letter != 'K')
        throw parameter_error("suffix only allowed on K: '" + text + "'");
    FamilySpec spec;
    if (parts)
        spec = FamilySpec::multipartite(n, static_cast<std::size_t>(std::stoul(m[3].str())));
    else if (minus)
        spec = FamilySpec::complete_minus_edge(n);
    else if (letter == 'P')
        spec = FamilySpec::path(n);
    else if (letter == 'C')
        spec = FamilySpec::cycle(n);
    else if (letter == 'Q')
        spec = FamilySpec::hypercube(n);
    else
        spec = FamilySpec::complete(n);
    validate(spec);
    return spec;
}

} // namespace stpack

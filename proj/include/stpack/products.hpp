#pragma once

#include <cstddef>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "io.hpp"

namespace stpack {

enum class ProductKind { cartesian, lexicographic };

inline std::string to_string(ProductKind kind) {
    return kind == ProductKind::cartesian ? "cartesian" : "lex";
}

/// Coordinates of a product vertex: (G-vertex, H-vertex).
struct ProductVertex {
    Vertex g_index = 0;
    Vertex h_index = 0;

    friend bool operator==(const ProductVertex &, const ProductVertex &) = default;
};

/// Complete bipartite join between two adjacent fibers of a lexicographic product.
struct Bundle {
    Edge g_edge;
    std::vector<Vertex> left;  ///< fiber of g_edge.a
    std::vector<Vertex> right; ///< fiber of g_edge.b
    EdgeSet edges;             ///< all n2^2 cross edges
};

/// A product graph together with its factors. Flat id of (u,v) is u*n2 + v,
/// so each fiber H(u) is a contiguous block.
class ProductGraph {
  public:
    ProductGraph(ProductKind kind, Graph g, Graph h, Graph product)
        : kind_(kind), g_(std::move(g)), h_(std::move(h)), graph_(std::move(product)) {}

    ProductKind kind() const noexcept { return kind_; }
    const Graph &graph() const noexcept { return graph_; }
    const Graph &g() const noexcept { return g_; }
    const Graph &h() const noexcept { return h_; }
    std::size_t n1() const noexcept { return g_.order(); }
    std::size_t n2() const noexcept { return h_.order(); }

    Vertex vertex(Vertex u, Vertex v) const { return u * n2() + v; }
    Vertex vertex(ProductVertex p) const { return vertex(p.g_index, p.h_index); }
    ProductVertex coordinates(Vertex flat) const { return {flat / n2(), flat % n2()}; }

    /// Product edge joining (u,v) and (u',v').
    Edge edge(Vertex u, Vertex v, Vertex u2, Vertex v2) const { return Edge(vertex(u, v), vertex(u2, v2)); }

    /// H(u): all (u,v).
    std::vector<Vertex> fiber(Vertex u) const {
        if (u >= n1())
            throw contract_error("fiber index " + std::to_string(u) + " out of range");
        std::vector<Vertex> out(n2());
        for (Vertex v = 0; v < n2(); ++v)
            out[v] = vertex(u, v);
        return out;
    }

    /// G(v): all (u,v).
    std::vector<Vertex> cross_section(Vertex v) const {
        if (v >= n2())
            throw contract_error("cross-section index " + std::to_string(v) + " out of range");
        std::vector<Vertex> out(n1());
        for (Vertex u = 0; u < n1(); ++u)
            out[u] = vertex(u, v);
        return out;
    }

    Bundle bundle(const Edge &g_edge) const {
        if (kind_ != ProductKind::lexicographic)
            throw unsupported_operation("bundles are defined for lexicographic products only; cartesian "
                                        "cross edges form perfect matchings");
        if (!g_.has_edge(g_edge))
            throw contract_error(to_string(g_edge) + " is not an edge of the first factor");
        Bundle b{g_edge, fiber(g_edge.a), fiber(g_edge.b), {}};
        std::vector<Edge> edges;
        edges.reserve(n2() * n2());
        for (Vertex x : b.left)
            for (Vertex y : b.right)
                edges.emplace_back(x, y);
        b.edges = EdgeSet(std::move(edges));
        return b;
    }

    /// Comment line that lets a reader recover the factor orders.
    std::string header() const {
        return "product " + to_string(kind_) + " n1=" + std::to_string(n1()) + " n2=" + std::to_string(n2());
    }

  private:
    ProductKind kind_;
    Graph g_;
    Graph h_;
    Graph graph_;
};

namespace detail {

inline void require_connected(const Graph &g, const char *which) {
    if (g.order() == 0)
        throw input_error(std::string(which) + " factor has no vertices");
    if (!is_connected(g))
        throw input_error(std::string(which) + " factor is disconnected");
}

} // namespace detail

inline ProductGraph cartesian(const Graph &g, const Graph &h) {
    detail::require_connected(g, "first");
    detail::require_connected(h, "second");
    const std::size_t n1 = g.order(), n2 = h.order();
    std::vector<Edge> edges;
    edges.reserve(h.size() * n1 + g.size() * n2);
    for (Vertex u = 0; u < n1; ++u)
        for (const auto &e : h.edges())
            edges.emplace_back(u * n2 + e.a, u * n2 + e.b);
    for (Vertex v = 0; v < n2; ++v)
        for (const auto &e : g.edges())
            edges.emplace_back(e.a * n2 + v, e.b * n2 + v);
    return ProductGraph(ProductKind::cartesian, g, h, Graph(n1 * n2, std::move(edges)));
}

/// G∘H. Argument order matters: G supplies the bundles, H the fibers.
inline ProductGraph lexicographic(const Graph &g, const Graph &h) {
    detail::require_connected(g, "first");
    detail::require_connected(h, "second");
    const std::size_t n1 = g.order(), n2 = h.order();
    std::vector<Edge> edges;
    edges.reserve(h.size() * n1 + g.size() * n2 * n2);
    for (Vertex u = 0; u < n1; ++u)
        for (const auto &e : h.edges())
            edges.emplace_back(u * n2 + e.a, u * n2 + e.b);
    for (const auto &e : g.edges())
        for (Vertex v = 0; v < n2; ++v)
            for (Vertex w = 0; w < n2; ++w)
                edges.emplace_back(e.a * n2 + v, e.b * n2 + w);
    return ProductGraph(ProductKind::lexicographic, g, h, Graph(n1 * n2, std::move(edges)));
}

inline ProductGraph make_product(ProductKind kind, const Graph &g, const Graph &h) {
    return kind == ProductKind::cartesian ? cartesian(g, h) : lexicographic(g, h);
}

inline Graph product_graph(ProductKind kind, const Graph &g, const Graph &h) {
    return make_product(kind, g, h).graph();
}

/// Edge-list text with the `# product ...` header comment.
inline std::string write_product(const ProductGraph &p) { return write_graph(p.graph(), {p.header()}); }

struct ProductHeader {
    ProductKind kind;
    std::size_t n1;
    std::size_t n2;
};

/// Finds a `# product cartesian|lex n1=.. n2=..` comment, if present.
inline std::optional<ProductHeader> read_product_header(std::string_view text) {
    static const std::regex pattern(R"(#\s*product\s+(cartesian|lex)\s+n1=(\d+)\s+n2=(\d+))");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_search(text.begin(), text.end(), m, pattern))
        return std::nullopt;
    return ProductHeader{m[1].str() == "cartesian" ? ProductKind::cartesian : ProductKind::lexicographic,
                         static_cast<std::size_t>(std::stoul(m[2].str())),
                         static_cast<std::size_t>(std::stoul(m[3].str()))};
}

} // namespace stpack

#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "products.hpp"

namespace stpack {

/// A spanning tree with a designated root, parent pointers and breadth-first order.
struct RootedTree {
    EdgeSet edges;
    Vertex root = 0;
    std::vector<Vertex> parent; ///< parent[root] == root
    std::vector<std::size_t> depth;
    std::vector<Vertex> order; ///< breadth-first, root first, children ascending

    std::size_t size() const noexcept { return order.size(); }
    bool is_root(Vertex v) const { return v == root; }
};

/// Throws contract_error when `tree` is not a spanning tree of `host`.
inline RootedTree root_tree(const Graph &host, const EdgeSet &tree, Vertex root = 0) {
    if (root >= host.order())
        throw contract_error("root " + std::to_string(root) + " out of range");
    if (!is_spanning_tree(host, tree))
        throw contract_error("edge set is not a spanning tree of the host graph");
    const std::size_t n = host.order();
    RootedTree out{tree, root, std::vector<Vertex>(n, root), std::vector<std::size_t>(n, 0), {}};
    out.order = reachable(n, tree.edges(), root);
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto &e : tree) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<bool> seen(n, false);
    seen[root] = true;
    for (Vertex v : out.order)
        for (Vertex w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                out.parent[w] = v;
                out.depth[w] = out.depth[v] + 1;
            }
    return out;
}

// ---------------------------------------------------------------------------
// Leaf split

/// Partition of a spanning tree T' of H into a kept subtree and the forest of
/// edges removed by successive leaf deletion. Every component of the forest
/// (taken over all of V(H)) contains exactly one kept vertex.
struct LeafSplit {
    EdgeSet source;
    EdgeSet kept_tree;
    std::vector<Vertex> kept_vertices; ///< sorted
    EdgeSet deleted_forest;
    std::vector<Vertex> forest_vertices;  ///< endpoints of deleted edges, sorted
    std::vector<Vertex> attachment_roots; ///< kept vertices incident to a deleted edge, sorted
    std::vector<bool> kept_mask;

    std::size_t order() const noexcept { return kept_mask.size(); }
    bool is_kept(Vertex v) const { return kept_mask.at(v); }
};

/// Builds and validates a split from an explicit kept vertex set.
inline LeafSplit make_leaf_split(const Graph &h, const EdgeSet &tree, std::vector<Vertex> kept) {
    if (!is_spanning_tree(h, tree))
        throw contract_error("leaf split source is not a spanning tree of H");
    const std::size_t n = h.order();
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty() || kept.back() >= n)
        throw contract_error("kept vertex set must be a nonempty subset of V(H)");

    LeafSplit split;
    split.source = tree;
    split.kept_vertices = kept;
    split.kept_mask.assign(n, false);
    for (Vertex v : kept)
        split.kept_mask[v] = true;

    std::vector<Edge> kept_edges, deleted;
    std::set<Vertex> forest_vertices, roots;
    for (const auto &e : tree) {
        if (split.kept_mask[e.a] && split.kept_mask[e.b]) {
            kept_edges.push_back(e);
        } else {
            deleted.push_back(e);
            forest_vertices.insert(e.a);
            forest_vertices.insert(e.b);
            for (Vertex v : {e.a, e.b})
                if (split.kept_mask[v])
                    roots.insert(v);
        }
    }
    if (kept_edges.size() + 1 != kept.size())
        throw contract_error("kept vertices do not induce a connected subtree");

    auto labels = component_labels(n, deleted);
    std::vector<std::size_t> kept_in_component(n, 0);
    for (Vertex v : kept)
        ++kept_in_component[labels[v]];
    for (Vertex v = 0; v < n; ++v)
        if (kept_in_component[labels[v]] != 1)
            throw contract_error("forest component of vertex " + std::to_string(v) + " contains " +
                                 std::to_string(kept_in_component[labels[v]]) + " kept vertices, expected 1");

    split.kept_tree = EdgeSet(std::move(kept_edges));
    split.deleted_forest = EdgeSet(std::move(deleted));
    split.forest_vertices.assign(forest_vertices.begin(), forest_vertices.end());
    split.attachment_roots.assign(roots.begin(), roots.end());
    return split;
}

/// Deletes the smallest-index current leaf until ceil(n2/2) vertices remain.
inline LeafSplit leaf_split(const Graph &h, const EdgeSet &tree) {
    if (h.order() == 0)
        throw contract_error("leaf split needs at least one vertex");
    if (!is_spanning_tree(h, tree))
        throw contract_error("leaf split source is not a spanning tree of H");
    const std::size_t n = h.order();
    const std::size_t target = (n + 1) / 2;

    std::vector<std::vector<Vertex>> adj(n);
    for (const auto &e : tree) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<std::size_t> degree(n);
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = adj[v].size();
        if (degree[v] == 1)
            leaves.insert(v);
    }
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;
    while (remaining > target) {
        const Vertex leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        alive[leaf] = false;
        --remaining;
        for (Vertex w : adj[leaf])
            if (alive[w] && --degree[w] == 1)
                leaves.insert(w);
    }
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            kept.push_back(v);
    return make_leaf_split(h, tree, std::move(kept));
}

// ---------------------------------------------------------------------------
// Perfect matchings and perfect cycles of a bundle K_{n2,n2}

/// Decomposition of K_{n2,n2} into n2 perfect matchings M_1..M_{n2}.
///
/// M_j joins left index t to right index (t + j) mod n2, so M_{n2} is the
/// identity matching. For r <= floor(n2/2) the pair M_{2r-1}, M_{2r} has shifts
/// differing by one (mod n2); their union is a single Hamiltonian cycle of the
/// bundle (a "perfect cycle"). For odd n2, M_{n2} is left over.
class MatchingDecomposition {
  public:
    explicit MatchingDecomposition(std::size_t n2) : n2_(n2) {
        if (n2 == 0)
            throw contract_error("matching decomposition needs n2 >= 1");
    }

    std::size_t order() const noexcept { return n2_; }
    std::size_t matching_count() const noexcept { return n2_; }
    std::size_t identity_index() const noexcept { return n2_; }
    std::size_t perfect_cycle_count() const noexcept { return n2_ / 2; }

    std::size_t shift(std::size_t j) const {
        check_index(j);
        return j % n2_;
    }

    /// Right index matched to left index t by M_j.
    Vertex partner(std::size_t j, Vertex t) const { return (t + shift(j)) % n2_; }

    /// Matching indices (2r-1, 2r) forming perfect cycle C_r, r is 1-based.
    std::pair<std::size_t, std::size_t> cycle_matchings(std::size_t r) const {
        if (r < 1 || r > perfect_cycle_count())
            throw contract_error("perfect cycle index " + std::to_string(r) + " out of range 1.." +
                                 std::to_string(perfect_cycle_count()));
        return {2 * r - 1, 2 * r};
    }

    /// M_j realized on the bundle of g_edge: (a, t) -- (b, t + shift).
    EdgeSet matching_edges(const ProductGraph &p, const Edge &g_edge, std::size_t j) const {
        check_product(p);
        std::vector<Edge> out;
        out.reserve(n2_);
        for (Vertex t = 0; t < n2_; ++t)
            out.push_back(p.edge(g_edge.a, t, g_edge.b, partner(j, t)));
        return EdgeSet(std::move(out));
    }

    EdgeSet perfect_cycle_edges(const ProductGraph &p, const Edge &g_edge, std::size_t r) const {
        auto [first, second] = cycle_matchings(r);
        return matching_edges(p, g_edge, first).united(matching_edges(p, g_edge, second));
    }

  private:
    void check_index(std::size_t j) const {
        if (j < 1 || j > n2_)
            throw contract_error("matching index " + std::to_string(j) + " out of range 1.." + std::to_string(n2_));
    }

    void check_product(const ProductGraph &p) const {
        if (p.kind() != ProductKind::lexicographic)
            throw unsupported_operation("matchings are realized on lexicographic bundles only");
        if (p.n2() != n2_)
            throw contract_error("decomposition order does not match the product's fiber size");
    }

    std::size_t n2_;
};

inline MatchingDecomposition matching_decomposition(std::size_t n2) { return MatchingDecomposition(n2); }

// ---------------------------------------------------------------------------
// Parallel subgraphs

enum class Factor { g, h };

struct ParallelSubgraph {
    EdgeSet source_tree;
    Factor factor = Factor::g;
    std::size_t matching = 0; ///< lexicographic realizations only; 0 otherwise
    EdgeSet edges;
};

namespace detail {

inline void require_factor_tree(const Graph &factor, const EdgeSet &tree, const char *which) {
    if (!is_spanning_tree(factor, tree))
        throw contract_error(std::string("tree is not a spanning tree of factor ") + which);
}

} // namespace detail

/// T'(u): copy of an H-tree inside fiber H(u).
inline EdgeSet fiber_copy(const ProductGraph &p, const EdgeSet &h_tree, Vertex u) {
    std::vector<Edge> out;
    out.reserve(h_tree.size());
    for (const auto &e : h_tree)
        out.push_back(p.edge(u, e.a, u, e.b));
    return EdgeSet(std::move(out));
}

/// T(v): copy of a G-tree inside cross-section G(v).
inline EdgeSet cross_section_copy(const ProductGraph &p, const EdgeSet &g_tree, Vertex v) {
    std::vector<Edge> out;
    out.reserve(g_tree.size());
    for (const auto &e : g_tree)
        out.push_back(p.edge(e.a, v, e.b, v));
    return EdgeSet(std::move(out));
}

/// Union of fiber copies of an H-tree, one per G-vertex. Valid in both products.
inline ParallelSubgraph fiber_parallel_subgraph(const ProductGraph &p, const EdgeSet &h_tree) {
    detail::require_factor_tree(p.h(), h_tree, "H");
    std::vector<Edge> out;
    for (Vertex u = 0; u < p.n1(); ++u)
        for (const auto &e : h_tree)
            out.push_back(p.edge(u, e.a, u, e.b));
    return {h_tree, Factor::h, 0, EdgeSet(std::move(out))};
}

/// Cartesian parallel subgraph: copies of a G-tree in every cross-section
/// (which_factor = g), or of an H-tree in every fiber (which_factor = h).
inline ParallelSubgraph parallel_subgraph_cartesian(const ProductGraph &p, const EdgeSet &tree, Factor which) {
    if (p.kind() != ProductKind::cartesian)
        throw contract_error("parallel_subgraph_cartesian needs a cartesian product");
    if (which == Factor::h)
        return fiber_parallel_subgraph(p, tree);
    detail::require_factor_tree(p.g(), tree, "G");
    std::vector<Edge> out;
    for (Vertex v = 0; v < p.n2(); ++v)
        for (const auto &e : tree)
            out.push_back(p.edge(e.a, v, e.b, v));
    return {tree, Factor::g, 0, EdgeSet(std::move(out))};
}

/// Lexicographic parallel subgraph F_{i,j}: matching M_j applied to the bundle
/// of every edge of a G-tree. Has n2 components, each meeting every fiber once.
inline ParallelSubgraph parallel_subgraph_lex(const ProductGraph &p, const EdgeSet &g_tree, std::size_t j) {
    if (p.kind() != ProductKind::lexicographic)
        throw contract_error("parallel_subgraph_lex needs a lexicographic product");
    detail::require_factor_tree(p.g(), g_tree, "G");
    const MatchingDecomposition matchings(p.n2());
    std::vector<Edge> out;
    out.reserve(g_tree.size() * p.n2());
    for (const auto &e : g_tree)
        for (const auto &m : matchings.matching_edges(p, e, j))
            out.push_back(m);
    return {g_tree, Factor::g, j, EdgeSet(std::move(out))};
}

// ---------------------------------------------------------------------------

/// Breadth-first spanning tree of (V(host), sub) from vertex 0, visiting
/// neighbours in ascending order.
inline EdgeSet extract_spanning_tree(const Graph &host, const EdgeSet &sub) {
    const std::size_t n = host.order();
    for (const auto &e : sub)
        if (!host.has_edge(e))
            throw contract_error("subgraph edge " + to_string(e) + " is not a host edge");
    if (n == 0)
        return {};
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto &e : sub) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto &row : adj)
        std::sort(row.begin(), row.end());
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{0};
    seen[0] = true;
    std::vector<Edge> tree;
    tree.reserve(n - 1);
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : adj[queue[i]])
            if (!seen[w]) {
                seen[w] = true;
                tree.emplace_back(queue[i], w);
                queue.push_back(w);
            }
    if (queue.size() != n) {
        Vertex lost = 0;
        while (seen[lost])
            ++lost;
        throw extraction_error(lost, "subgraph does not span a connected graph: vertex " + std::to_string(lost) +
                                         " is separated from vertex 0");
    }
    return EdgeSet(std::move(tree));
}

} // namespace stpack

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <initializer_list>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace stpack {

using Vertex = std::size_t;

/// Unordered vertex pair stored with the smaller endpoint first.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex x, Vertex y) : a(std::min(x, y)), b(std::max(x, y)) {}

    constexpr Vertex other(Vertex v) const { return v == a ? b : a; }

    friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

inline std::string to_string(const Edge &e) {
    return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

/// Union-find over 0..n-1 with path halving and union by size.
class DisjointSets {
  public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns false when x and y were already in the same set.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        if (size_[x] < size_[y])
            std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Sorted, duplicate-free collection of edges. Carries no host; membership in a
/// particular graph is checked by whoever consumes it.
class EdgeSet {
  public:
    EdgeSet() = default;

    explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    auto begin() const noexcept { return edges_.begin(); }
    auto end() const noexcept { return edges_.end(); }
    const Edge &operator[](std::size_t i) const { return edges_[i]; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool contains(const Edge &e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    void insert(const Edge &e) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            edges_.insert(it, e);
    }

    EdgeSet united(const EdgeSet &other) const {
        std::vector<Edge> out;
        out.reserve(size() + other.size());
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        EdgeSet result;
        result.edges_ = std::move(out);
        return result;
    }

    bool disjoint_from(const EdgeSet &other) const {
        auto i = begin();
        auto j = other.begin();
        while (i != end() && j != other.end()) {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else
                return false;
        }
        return true;
    }

    friend bool operator==(const EdgeSet &, const EdgeSet &) = default;

  private:
    std::vector<Edge> edges_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
  public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n), adjacency_(n) {}

    /// Throws contract_error on loops, duplicates, or endpoints >= n.
    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
        for (const auto &e : edges_) {
            if (e.a == e.b)
                throw contract_error("self-loop at vertex " + std::to_string(e.a));
            if (e.b >= n_)
                throw contract_error("edge " + to_string(e) + " has an endpoint out of range for n=" +
                                     std::to_string(n_));
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
            throw contract_error("duplicate edge " + to_string(*dup));
        for (const auto &e : edges_) {
            adjacency_[e.a].push_back(e.b);
            adjacency_[e.b].push_back(e.a);
        }
        for (auto &row : adjacency_)
            std::sort(row.begin(), row.end());
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n, std::vector<Edge>(edges)) {}

    Graph(std::size_t n, const EdgeSet &edges) : Graph(n, std::vector<Edge>(edges.begin(), edges.end())) {}

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool has_edge(const Edge &e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }
    bool has_edge(Vertex x, Vertex y) const { return x != y && has_edge(Edge(x, y)); }

    /// Position of e in the sorted edge list.
    std::optional<std::size_t> edge_index(const Edge &e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    EdgeSet edge_set() const { return EdgeSet(edges_); }

    const std::vector<std::string> &labels() const noexcept { return labels_; }

    /// Display-only names; empty means "use the index".
    Graph with_labels(std::vector<std::string> labels) const {
        if (!labels.empty() && labels.size() != n_)
            throw contract_error("label count does not match vertex count");
        Graph copy = *this;
        copy.labels_ = std::move(labels);
        return copy;
    }

    /// Structural equality; labels are ignored.
    friend bool operator==(const Graph &x, const Graph &y) { return x.n_ == y.n_ && x.edges_ == y.edges_; }

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
};

/// Vertices reachable from `source` using only `edges`, in breadth-first order.
inline std::vector<Vertex> reachable(std::size_t n, std::span<const Edge> edges, Vertex source) {
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto &e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto &row : adj)
        std::sort(row.begin(), row.end());
    std::vector<bool> seen(n, false);
    std::vector<Vertex> order{source};
    seen[source] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : adj[order[i]])
            if (!seen[w]) {
                seen[w] = true;
                order.push_back(w);
            }
    return order;
}

inline bool is_connected(const Graph &g) {
    return g.order() <= 1 || reachable(g.order(), g.edges(), 0).size() == g.order();
}

/// Component label per vertex, labels numbered by smallest member.
inline std::vector<std::size_t> component_labels(std::size_t n, std::span<const Edge> edges) {
    DisjointSets sets(n);
    for (const auto &e : edges)
        sets.unite(e.a, e.b);
    std::vector<std::size_t> label(n), root_label(n, n);
    std::size_t next = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto r = sets.find(v);
        if (root_label[r] == n)
            root_label[r] = next++;
        label[v] = root_label[r];
    }
    return label;
}

inline std::size_t component_count(std::size_t n, std::span<const Edge> edges) {
    auto labels = component_labels(n, edges);
    return n == 0 ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

/// True iff `edges` are n-1 host edges forming a spanning tree of the host.
inline bool is_spanning_tree(const Graph &host, const EdgeSet &edges) {
    if (host.order() == 0 || edges.size() + 1 != host.order())
        return false;
    DisjointSets sets(host.order());
    for (const auto &e : edges)
        if (!host.has_edge(e) || !sets.unite(e.a, e.b))
            return false;
    return true;
}

} // namespace stpack

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "packing.hpp"
#include "verifier.hpp"

namespace stpack {

/// A vertex partition P. Any graph with sigma edge-disjoint spanning trees has
/// at least sigma * (|P| - 1) edges crossing P, so `bound` caps sigma.
struct TutteCertificate {
    std::vector<std::vector<Vertex>> partition;
    std::size_t crossing_count = 0;
    std::size_t bound = 0;
};

/// Computes crossing count and bound for a partition; throws on malformed blocks.
inline TutteCertificate make_certificate(const Graph &g, std::vector<std::vector<Vertex>> blocks) {
    const std::size_t n = g.order();
    if (blocks.size() < 2)
        throw contract_error("a certificate partition needs at least two blocks");
    std::vector<std::size_t> block_of(n, n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw contract_error("empty partition block");
        std::sort(blocks[b].begin(), blocks[b].end());
        for (Vertex v : blocks[b]) {
            if (v >= n || block_of[v] != n)
                throw contract_error("partition blocks overlap or leave range at vertex " + std::to_string(v));
            block_of[v] = b;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (block_of[v] == n)
            throw contract_error("partition does not cover vertex " + std::to_string(v));
    std::sort(blocks.begin(), blocks.end());
    std::size_t crossing = 0;
    for (const auto &e : g.edges())
        if (block_of[e.a] != block_of[e.b])
            ++crossing;
    const std::size_t bound = crossing / (blocks.size() - 1);
    return {std::move(blocks), crossing, bound};
}

/// The counting bound floor(|E| / (n-1)).
inline std::size_t edge_bound(const Graph &g) {
    if (g.order() < 2)
        throw contract_error("edge_bound needs at least two vertices");
    return g.size() / (g.order() - 1);
}

struct OracleResult {
    std::size_t sigma = 0;
    TreePacking packing;
    TutteCertificate certificate;
};

namespace detail {

/// Edge partition into k forests, grown by augmenting paths through the
/// exchange graph of the graphic matroid (matroid partitioning).
class ForestPartition {
  public:
    static constexpr int uncovered = -1;

    explicit ForestPartition(const Graph &g) : g_(g), owner_(g.size(), uncovered) {}

    std::size_t forests() const noexcept { return forests_; }
    void add_forest() { ++forests_; }

    std::size_t covered() const {
        return static_cast<std::size_t>(std::count_if(owner_.begin(), owner_.end(), [](int o) { return o >= 0; }));
    }

    std::vector<EdgeSet> forest_sets() const {
        std::vector<std::vector<Edge>> sets(forests_);
        for (std::size_t e = 0; e < owner_.size(); ++e)
            if (owner_[e] >= 0)
                sets[static_cast<std::size_t>(owner_[e])].push_back(g_.edges()[e]);
        std::vector<EdgeSet> out;
        for (auto &s : sets)
            out.emplace_back(std::move(s));
        return out;
    }

    /// Tries to cover every uncovered edge, in edge order.
    void saturate() {
        for (std::size_t e = 0; e < owner_.size(); ++e)
            if (owner_[e] == uncovered)
                augment(e);
    }

    /// Edges reachable in the exchange graph from all uncovered edges. Throws
    /// if an augmenting path still exists (the partition is not maximal).
    std::vector<bool> blocked_region() {
        rebuild_forests();
        std::vector<std::size_t> sources;
        for (std::size_t e = 0; e < owner_.size(); ++e)
            if (owner_[e] == uncovered)
                sources.push_back(e);
        std::vector<std::size_t> pred;
        std::vector<bool> visited;
        if (search(sources, pred, visited).has_value())
            throw construction_error("forest partition is not maximal");
        return visited;
    }

  private:
    struct Rooted {
        std::vector<Vertex> parent;
        std::vector<std::size_t> parent_edge;
        std::vector<std::size_t> depth;
        std::vector<std::size_t> component;
    };

    struct Found {
        std::size_t edge;
        std::size_t forest;
    };

    void rebuild_forests() {
        const std::size_t n = g_.order();
        rooted_.assign(forests_, {});
        for (std::size_t f = 0; f < forests_; ++f) {
            std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n);
            for (std::size_t e = 0; e < owner_.size(); ++e)
                if (owner_[e] == static_cast<int>(f)) {
                    const auto &edge = g_.edges()[e];
                    adj[edge.a].push_back({edge.b, e});
                    adj[edge.b].push_back({edge.a, e});
                }
            Rooted &r = rooted_[f];
            r.parent.assign(n, n);
            r.parent_edge.assign(n, 0);
            r.depth.assign(n, 0);
            r.component.assign(n, n);
            for (Vertex s = 0; s < n; ++s) {
                if (r.component[s] != n)
                    continue;
                r.component[s] = s;
                r.parent[s] = s;
                std::vector<Vertex> queue{s};
                for (std::size_t i = 0; i < queue.size(); ++i) {
                    const Vertex v = queue[i];
                    for (auto [w, e] : adj[v])
                        if (r.component[w] == n) {
                            r.component[w] = s;
                            r.parent[w] = v;
                            r.parent_edge[w] = e;
                            r.depth[w] = r.depth[v] + 1;
                            queue.push_back(w);
                        }
                }
            }
        }
    }

    /// Edge indices on the forest path between the endpoints of `edge`.
    std::vector<std::size_t> forest_path(std::size_t f, const Edge &edge) const {
        const Rooted &r = rooted_[f];
        std::vector<std::size_t> out;
        Vertex x = edge.a, y = edge.b;
        while (x != y) {
            if (r.depth[x] >= r.depth[y]) {
                out.push_back(r.parent_edge[x]);
                x = r.parent[x];
            } else {
                out.push_back(r.parent_edge[y]);
                y = r.parent[y];
            }
        }
        return out;
    }

    /// Breadth-first search of the exchange graph. Returns the first edge that
    /// can enter some forest without creating a cycle.
    std::optional<Found> search(const std::vector<std::size_t> &sources, std::vector<std::size_t> &pred,
                                std::vector<bool> &visited) const {
        const std::size_t none = std::numeric_limits<std::size_t>::max();
        pred.assign(owner_.size(), none);
        visited.assign(owner_.size(), false);
        std::vector<std::size_t> queue;
        for (std::size_t s : sources) {
            visited[s] = true;
            queue.push_back(s);
        }
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const std::size_t e = queue[i];
            const Edge &edge = g_.edges()[e];
            for (std::size_t f = 0; f < forests_; ++f) {
                if (owner_[e] == static_cast<int>(f))
                    continue;
                if (rooted_[f].component[edge.a] != rooted_[f].component[edge.b])
                    return Found{e, f};
            }
            for (std::size_t f = 0; f < forests_; ++f) {
                if (owner_[e] == static_cast<int>(f))
                    continue;
                for (std::size_t h : forest_path(f, edge))
                    if (!visited[h]) {
                        visited[h] = true;
                        pred[h] = e;
                        queue.push_back(h);
                    }
            }
        }
        return std::nullopt;
    }

    bool augment(std::size_t start) {
        rebuild_forests();
        std::vector<std::size_t> pred;
        std::vector<bool> visited;
        auto found = search({start}, pred, visited);
        if (!found)
            return false;
        // Shift each edge on the path into the forest its successor leaves.
        std::size_t cur = found->edge;
        int target = static_cast<int>(found->forest);
        while (true) {
            const int previous = owner_[cur];
            owner_[cur] = target;
            if (cur == start)
                break;
            target = previous;
            cur = pred[cur];
        }
        return true;
    }

    const Graph &g_;
    std::vector<int> owner_;
    std::size_t forests_ = 0;
    std::vector<Rooted> rooted_;
};

} // namespace detail

/// Exact spanning tree packing number with a packing witness and a partition
/// certificate whose bound equals sigma.
inline OracleResult max_packing(const Graph &g) {
    if (g.order() < 2)
        throw input_error("packing number is defined here for graphs with at least two vertices");
    if (!is_connected(g))
        throw input_error("graph is disconnected; it has no spanning tree");
    const std::size_t n = g.order();

    detail::ForestPartition forests(g);
    std::vector<EdgeSet> best;
    while (true) {
        forests.add_forest();
        forests.saturate();
        if (forests.covered() != forests.forests() * (n - 1))
            break;
        best = forests.forest_sets();
    }

    // Components of the blocked region give the tight partition.
    const auto region = forests.blocked_region();
    std::vector<Edge> region_edges;
    for (std::size_t e = 0; e < region.size(); ++e)
        if (region[e])
            region_edges.push_back(g.edges()[e]);
    const auto labels = component_labels(n, region_edges);
    std::vector<std::vector<Vertex>> blocks(*std::max_element(labels.begin(), labels.end()) + 1);
    for (Vertex v = 0; v < n; ++v)
        blocks[labels[v]].push_back(v);

    OracleResult result{best.size(), TreePacking{g, std::move(best), PackingMethod::oracle},
                        make_certificate(g, std::move(blocks))};
    if (result.certificate.bound != result.sigma)
        throw construction_error("certificate bound " + std::to_string(result.certificate.bound) +
                                 " does not match packing size " + std::to_string(result.sigma));
    return result;
}

/// Maximum packing of a factor graph; a single vertex gets its one empty tree.
inline TreePacking factor_packing(const Graph &g) {
    return g.order() == 1 ? trivial_packing(g) : max_packing(g).packing;
}

/// Minimum of floor(crossing / (|P| - 1)) over every partition with at least two
/// blocks, by exhaustive enumeration. First minimizer in restricted-growth order.
inline TutteCertificate tutte_bruteforce(const Graph &g) {
    const std::size_t n = g.order();
    if (n > 12)
        throw size_error("exhaustive partition search is limited to 12 vertices, got " + std::to_string(n));
    if (n < 2)
        throw size_error("exhaustive partition search needs at least two vertices");

    std::vector<std::size_t> block(n, 0), best_block;
    std::size_t best_value = std::numeric_limits<std::size_t>::max();
    std::size_t best_blocks = 0;

    auto recurse = [&](auto &&self, Vertex v, std::size_t used, std::size_t crossing) -> void {
        if (v == n) {
            if (used < 2)
                return;
            const std::size_t value = crossing / (used - 1);
            if (value < best_value) {
                best_value = value;
                best_block = block;
                best_blocks = used;
            }
            return;
        }
        for (std::size_t b = 0; b <= used && b < n; ++b) {
            std::size_t added = 0;
            for (Vertex w : g.neighbors(v))
                if (w < v && block[w] != b)
                    ++added;
            block[v] = b;
            self(self, v + 1, std::max(used, b + 1), crossing + added);
        }
    };
    block[0] = 0;
    recurse(recurse, 1, 1, 0);

    std::vector<std::vector<Vertex>> blocks(best_blocks);
    for (Vertex v = 0; v < n; ++v)
        blocks[best_block[v]].push_back(v);
    return make_certificate(g, std::move(blocks));
}

} // namespace stpack

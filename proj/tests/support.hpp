#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "stpack/graph.hpp"

namespace support {

// Random spanning tree joined to random extra edges. Every graph produced is
// connected.
inline stpack::Graph random_connected(std::size_t n, double extra, std::mt19937 &rng) {
    std::vector<stpack::Edge> edges;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        edges.push_back({perm[pick(rng)], perm[i]});
    }
    std::bernoulli_distribution coin(extra);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (std::find(edges.begin(), edges.end(), stpack::Edge{a, b}) == edges.end() && coin(rng))
                edges.push_back({a, b});
    return stpack::Graph(n, edges);
}

// Spanning tree from Kruskal over a shuffled edge order.
inline stpack::EdgeSet random_spanning_tree(const stpack::Graph &g, std::mt19937 &rng) {
    std::vector<stpack::Edge> order(g.edges().begin(), g.edges().end());
    std::shuffle(order.begin(), order.end(), rng);
    stpack::DisjointSets sets(g.order());
    std::vector<stpack::Edge> tree;
    for (const auto &e : order)
        if (sets.unite(e.a, e.b))
            tree.push_back(e);
    return stpack::EdgeSet(tree);
}

} // namespace support

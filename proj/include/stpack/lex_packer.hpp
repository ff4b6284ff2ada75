#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "cartesian_packer.hpp"
#include "decomp.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "packing.hpp"
#include "products.hpp"
#include "verifier.hpp"

namespace stpack {

/// Which side has spare spanning trees, by the sign of l*n1 - k*n2.
enum class LexCase { balanced, h_rich, g_rich };

inline std::string to_string(LexCase c) {
    switch (c) {
    case LexCase::balanced:
        return "balanced";
    case LexCase::h_rich:
        return "h_rich";
    case LexCase::g_rich:
        return "g_rich";
    }
    return "?";
}

struct LexBound {
    LexCase lex_case = LexCase::balanced;
    std::size_t value = 0;
    /// h_rich: number of H-parallel subgraphs spent on fiber trees.
    /// g_rich: number of consecutive parallel-subgraph pairs spent on perfect cycles.
    std::size_t budget = 0;
};

namespace detail {

constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

} // namespace detail

/// Guaranteed number of edge-disjoint spanning trees of G∘H given k trees in
/// G, l trees in H, |V(G)| = n1 and |V(H)| = n2.
inline LexBound lex_bound(std::size_t k, std::size_t l, std::size_t n1, std::size_t n2) {
    if (k < 1 || l < 1 || n1 < 1 || n2 < 1)
        throw contract_error("lex_bound needs k, l, n1, n2 >= 1");
    const std::size_t kn2 = k * n2, ln1 = l * n1;
    if (kn2 == ln1)
        return {LexCase::balanced, kn2, 0};
    if (ln1 > kn2) {
        const std::size_t x = detail::ceil_div(kn2 - 1, n1);
        return {LexCase::h_rich, kn2 - x + l - 1, x};
    }
    const std::size_t x = detail::ceil_div(kn2 - 1, n1 + 1);
    return {LexCase::g_rich, kn2 - 2 * x + l - 1, x};
}

// Building blocks of one output tree: a spanning "base" subgraph whose
// components are joined by a "join" piece.

/// F_{i,j}: matching M_j over the bundles of G-tree i (0-based), j 1-based.
struct ParallelPart {
    std::size_t g_tree = 0;
    std::size_t matching = 1;
    friend bool operator==(const ParallelPart &, const ParallelPart &) = default;
};
/// F'_j: fiber copies of H-tree j.
struct FiberParallelPart {
    std::size_t h_tree = 0;
    friend bool operator==(const FiberParallelPart &, const FiberParallelPart &) = default;
};
/// T'_j(u): one fiber copy of H-tree j.
struct FiberTreeJoin {
    std::size_t h_tree = 0;
    Vertex fiber = 0;
    friend bool operator==(const FiberTreeJoin &, const FiberTreeJoin &) = default;
};
/// T_k(v): cross-section copy of the last G-tree; a component of the reserved F_{k,n2}.
struct CrossSectionJoin {
    Vertex h_vertex = 0;
    friend bool operator==(const CrossSectionJoin &, const CrossSectionJoin &) = default;
};
/// Perfect cycle C_r on the bundle of the e-th edge (sorted order) of G-tree i.
struct PerfectCycleJoin {
    std::size_t g_tree = 0;
    std::size_t cycle = 1;
    std::size_t edge_index = 0;
    friend bool operator==(const PerfectCycleJoin &, const PerfectCycleJoin &) = default;
};

struct LexRecipe {
    std::variant<ParallelPart, FiberParallelPart> base;
    std::variant<FiberTreeJoin, CrossSectionJoin, PerfectCycleJoin> join;
};

struct LexPlan {
    LexBound bound;
    std::size_t k = 0, l = 0, n1 = 0, n2 = 0;
    std::vector<ParallelPart> consumed_for_cycles; ///< g_rich only, in pairs
    std::vector<LexRecipe> recipes;
};

/// Assigns every output tree its resources. All choices follow lexicographic
/// order of indices; the identity realization of the last G-tree is reserved
/// except in the balanced case.
inline LexPlan plan_lex(std::size_t k, std::size_t l, std::size_t n1, std::size_t n2) {
    if (n1 < 2 || n2 < 2)
        throw construction_error("lexicographic packing needs both factors of order >= 2 (n1=" + std::to_string(n1) +
                                 ", n2=" + std::to_string(n2) + ")");
    LexPlan plan{lex_bound(k, l, n1, n2), k, l, n1, n2, {}, {}};
    const std::size_t x = plan.bound.budget;
    const ParallelPart reserved{k - 1, n2};

    std::vector<ParallelPart> parallel;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 1; j <= n2; ++j)
            if (plan.bound.lex_case == LexCase::balanced || !(ParallelPart{i, j} == reserved))
                parallel.push_back({i, j});

    switch (plan.bound.lex_case) {
    case LexCase::balanced: {
        std::size_t next = 0;
        for (std::size_t j = 0; j < l; ++j)
            for (Vertex u = 0; u < n1; ++u)
                plan.recipes.push_back({parallel[next++], FiberTreeJoin{j, u}});
        break;
    }
    case LexCase::h_rich: {
        if (x > l)
            throw construction_error("deficient resource: need " + std::to_string(x) +
                                     " H-parallel subgraphs for fiber trees, have " + std::to_string(l));
        if (l - x > n2)
            throw construction_error("deficient resource: need " + std::to_string(l - x) +
                                     " cross-section trees, have " + std::to_string(n2));
        std::size_t next = 0;
        for (std::size_t j = 0; j < x && next < parallel.size(); ++j)
            for (Vertex u = 0; u < n1 && next < parallel.size(); ++u)
                plan.recipes.push_back({parallel[next++], FiberTreeJoin{j, u}});
        if (next != parallel.size())
            throw construction_error("deficient resource: fiber trees");
        for (std::size_t j = x; j < l; ++j)
            plan.recipes.push_back({FiberParallelPart{j}, CrossSectionJoin{j - x}});
        break;
    }
    case LexCase::g_rich: {
        if (l > n2)
            throw construction_error("deficient resource: need " + std::to_string(l) + " cross-section trees, have " +
                                     std::to_string(n2));
        for (std::size_t j = 0; j < l; ++j)
            plan.recipes.push_back({FiberParallelPart{j}, CrossSectionJoin{j}});

        std::vector<PerfectCycleJoin> cycles;
        for (std::size_t i = 0; i < k && plan.consumed_for_cycles.size() < 2 * x; ++i)
            for (std::size_t r = 1; r <= n2 / 2 && plan.consumed_for_cycles.size() < 2 * x; ++r) {
                if (i == reserved.g_tree && 2 * r == reserved.matching)
                    continue;
                plan.consumed_for_cycles.push_back({i, 2 * r - 1});
                plan.consumed_for_cycles.push_back({i, 2 * r});
                for (std::size_t e = 0; e + 1 < n1; ++e)
                    cycles.push_back({i, r, e});
            }
        if (plan.consumed_for_cycles.size() != 2 * x)
            throw construction_error("deficient resource: need " + std::to_string(x) +
                                     " consecutive matching pairs, have " +
                                     std::to_string(plan.consumed_for_cycles.size() / 2));
        std::size_t next = 0;
        for (const auto &part : parallel) {
            if (std::find(plan.consumed_for_cycles.begin(), plan.consumed_for_cycles.end(), part) !=
                plan.consumed_for_cycles.end())
                continue;
            if (next == cycles.size())
                throw construction_error("deficient resource: perfect cycles exhausted after " + std::to_string(next));
            plan.recipes.push_back({part, cycles[next++]});
        }
        break;
    }
    }
    if (plan.recipes.size() != plan.bound.value)
        throw construction_error("plan yields " + std::to_string(plan.recipes.size()) + " trees, bound is " +
                                 std::to_string(plan.bound.value));
    return plan;
}

/// Edge-disjoint spanning trees of G∘H, as many as lex_bound promises.
inline TreePacking pack_lex(const ProductGraph &p, const TreePacking &pack_g, const TreePacking &pack_h) {
    if (p.kind() != ProductKind::lexicographic)
        throw contract_error("pack_lex needs a lexicographic product");
    detail::require_valid_factor_packing(p.g(), pack_g, "G");
    detail::require_valid_factor_packing(p.h(), pack_h, "H");
    const LexPlan plan = plan_lex(pack_g.count(), pack_h.count(), p.n1(), p.n2());
    const MatchingDecomposition matchings(p.n2());
    const EdgeSet &last_g_tree = pack_g.trees.back();

    TreePacking out{p.graph(), {}, PackingMethod::constructed_lex};
    out.trees.reserve(plan.recipes.size());
    for (const auto &recipe : plan.recipes) {
        EdgeSet base = std::visit(
            [&](const auto &part) -> EdgeSet {
                using T = std::decay_t<decltype(part)>;
                if constexpr (std::is_same_v<T, ParallelPart>)
                    return parallel_subgraph_lex(p, pack_g.trees[part.g_tree], part.matching).edges;
                else
                    return fiber_parallel_subgraph(p, pack_h.trees[part.h_tree]).edges;
            },
            recipe.base);
        EdgeSet join = std::visit(
            [&](const auto &piece) -> EdgeSet {
                using T = std::decay_t<decltype(piece)>;
                if constexpr (std::is_same_v<T, FiberTreeJoin>)
                    return fiber_copy(p, pack_h.trees[piece.h_tree], piece.fiber);
                else if constexpr (std::is_same_v<T, CrossSectionJoin>)
                    return cross_section_copy(p, last_g_tree, piece.h_vertex);
                else
                    return matchings.perfect_cycle_edges(p, pack_g.trees[piece.g_tree][piece.edge_index], piece.cycle);
            },
            recipe.join);
        EdgeSet merged = base.united(join);
        if (merged.size() + 1 != p.graph().order())
            merged = extract_spanning_tree(p.graph(), merged);
        out.trees.push_back(std::move(merged));
    }
    detail::require_verified(out);
    return out;
}

inline TreePacking pack_lex(const Graph &g, const Graph &h, const TreePacking &pack_g, const TreePacking &pack_h) {
    return pack_lex(lexicographic(g, h), pack_g, pack_h);
}

} // namespace stpack

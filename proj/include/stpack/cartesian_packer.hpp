#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "decomp.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "packing.hpp"
#include "products.hpp"
#include "verifier.hpp"

namespace stpack {

/// What a non-root fiber H(u) contributes to the assembled tree.
enum class FiberRole {
    root,          ///< whole copy of T'
    keeps_subtree, ///< copy of the kept subtree T_a
    keeps_forest,  ///< copy of the deleted forest F_b
};

/// Cross edges added between a fiber and its parent fiber along one edge of T_k.
/// Both vectors hold H-indices v; the edge itself is (parent,v)(child,v).
struct BundlePlan {
    Vertex parent = 0;
    Vertex child = 0;
    FiberRole child_role = FiberRole::keeps_forest;
    std::vector<Vertex> used;     ///< E1 or E2
    std::vector<Vertex> leftover; ///< the complement within the n2 cross-section copies
};

struct CrossEdgePlan {
    std::vector<BundlePlan> bundles; ///< one per edge of T_k, children in breadth-first order

    std::size_t min_leftover() const {
        std::size_t best = static_cast<std::size_t>(-1);
        for (const auto &b : bundles)
            best = std::min(best, b.leftover.size());
        return bundles.empty() ? 0 : best;
    }
};

inline std::size_t cartesian_bound(std::size_t k, std::size_t l) {
    if (k < 1 || l < 1)
        throw contract_error("cartesian_bound needs k, l >= 1");
    return k + l - 1;
}

/// Root fiber gets `root`; the first floor((n1-1)/2) non-root fibers in
/// breadth-first order keep the subtree, the rest keep the forest.
inline std::vector<FiberRole> assign_fiber_roles(const RootedTree &tk) {
    const std::size_t n1 = tk.size();
    std::vector<FiberRole> roles(n1, FiberRole::keeps_forest);
    roles[tk.root] = FiberRole::root;
    const std::size_t subtree_fibers = n1 == 0 ? 0 : (n1 - 1) / 2;
    for (std::size_t i = 1; i < tk.order.size(); ++i)
        if (i <= subtree_fibers)
            roles[tk.order[i]] = FiberRole::keeps_subtree;
    return roles;
}

namespace detail {

inline void check_roles(const RootedTree &tk, const std::vector<FiberRole> &roles) {
    if (roles.size() != tk.size())
        throw contract_error("fiber role assignment has wrong length");
    for (Vertex u = 0; u < roles.size(); ++u)
        if ((roles[u] == FiberRole::root) != tk.is_root(u))
            throw contract_error("fiber " + std::to_string(u) + ": root role must be given to the root only");
}

} // namespace detail

/// E1 (child keeps the forest): cross edges at every kept vertex.
/// E2 (child keeps the subtree): cross edges at every non-kept vertex, plus the
/// smallest kept vertex.
inline CrossEdgePlan plan_cross_edges(const RootedTree &tk, const LeafSplit &split,
                                      const std::vector<FiberRole> &roles) {
    detail::check_roles(tk, roles);
    const std::size_t n2 = split.order();
    const Vertex anchor = split.kept_vertices.front();
    CrossEdgePlan plan;
    for (std::size_t i = 1; i < tk.order.size(); ++i) {
        const Vertex child = tk.order[i];
        BundlePlan b{tk.parent[child], child, roles[child], {}, {}};
        for (Vertex v = 0; v < n2; ++v) {
            bool use = b.child_role == FiberRole::keeps_forest ? split.is_kept(v) : (!split.is_kept(v) || v == anchor);
            (use ? b.used : b.leftover).push_back(v);
        }
        plan.bundles.push_back(std::move(b));
    }
    return plan;
}

/// The tree assembled inside T_k □ T'_l. Any well-formed role assignment gives a
/// spanning tree, because each child fiber attaches only to its parent fiber.
inline EdgeSet build_hat_tree(const ProductGraph &p, const RootedTree &tk, const LeafSplit &split,
                              const std::vector<FiberRole> &roles, const CrossEdgePlan &plan) {
    detail::check_roles(tk, roles);
    std::vector<Edge> edges;
    edges.reserve(p.graph().order());
    for (Vertex u = 0; u < p.n1(); ++u) {
        const EdgeSet &part = roles[u] == FiberRole::root           ? split.source
                              : roles[u] == FiberRole::keeps_subtree ? split.kept_tree
                                                                     : split.deleted_forest;
        for (const auto &e : fiber_copy(p, part, u))
            edges.push_back(e);
    }
    for (const auto &b : plan.bundles)
        for (Vertex v : b.used)
            edges.push_back(p.edge(b.parent, v, b.child, v));
    EdgeSet tree(std::move(edges));
    auto report = verify_tree(p.graph(), tree, "assembled tree");
    if (!report.ok())
        throw construction_error("assembled tree failed verification: " + report.first_failure()->name + " " +
                                 report.first_failure()->witness);
    return tree;
}

namespace detail {

inline void require_valid_factor_packing(const Graph &factor, const TreePacking &packing, const char *which) {
    if (packing.trees.empty())
        throw contract_error(std::string("packing of ") + which + " has no trees");
    if (!(packing.host == factor))
        throw contract_error(std::string("packing of ") + which + " belongs to a different graph");
    auto report = verify_packing(factor, packing);
    if (!report.ok())
        throw contract_error(std::string("invalid packing of ") + which + ": " + report.first_failure()->name + " " +
                             report.first_failure()->witness);
    if (factor.order() == 1 && packing.count() > 1)
        throw contract_error(std::string("a single-vertex ") + which + " admits exactly one (empty) tree");
}

inline void require_verified(const TreePacking &out) {
    auto report = verify_packing(out.host, out);
    if (!report.ok())
        throw construction_error("constructed packing failed verification: " + report.first_failure()->name + " " +
                                 report.first_failure()->witness);
}

} // namespace detail

/// k + l - 1 edge-disjoint spanning trees of G □ H from packings of G (k trees)
/// and H (l trees). Output order: the k-1 trees built on parallel subgraphs of
/// G-trees, then the l-1 trees built on parallel subgraphs of H-trees, then the
/// assembled tree.
inline TreePacking pack_cartesian(const ProductGraph &p, const TreePacking &pack_g, const TreePacking &pack_h) {
    if (p.kind() != ProductKind::cartesian)
        throw contract_error("pack_cartesian needs a cartesian product");
    detail::require_valid_factor_packing(p.g(), pack_g, "G");
    detail::require_valid_factor_packing(p.h(), pack_h, "H");
    const std::size_t k = pack_g.count(), l = pack_h.count();

    const RootedTree tk = root_tree(p.g(), pack_g.trees.back(), 0);
    const LeafSplit split = leaf_split(p.h(), pack_h.trees.back());
    const auto roles = assign_fiber_roles(tk);
    const CrossEdgePlan plan = plan_cross_edges(tk, split, roles);

    std::vector<Vertex> spare_subtrees, spare_forests;
    for (std::size_t i = 1; i < tk.order.size(); ++i) {
        const Vertex u = tk.order[i];
        (roles[u] == FiberRole::keeps_forest ? spare_subtrees : spare_forests).push_back(u);
    }
    if (k - 1 > spare_subtrees.size() || k - 1 > spare_forests.size())
        throw contract_error("G packing has " + std::to_string(k) + " trees, more than its order allows");
    if (l - 1 > plan.min_leftover())
        throw contract_error("H packing has " + std::to_string(l) + " trees, more than its order allows");

    TreePacking out{p.graph(), {}, PackingMethod::constructed_cartesian};
    out.trees.reserve(k + l - 1);

    for (std::size_t i = 0; i + 1 < k; ++i) {
        EdgeSet tree = parallel_subgraph_cartesian(p, pack_g.trees[i], Factor::g).edges;
        tree = tree.united(fiber_copy(p, split.kept_tree, spare_subtrees[i]));
        tree = tree.united(fiber_copy(p, split.deleted_forest, spare_forests[i]));
        out.trees.push_back(std::move(tree));
    }

    for (std::size_t j = 0; j + 1 < l; ++j) {
        EdgeSet tree = fiber_parallel_subgraph(p, pack_h.trees[j]).edges;
        for (const auto &b : plan.bundles)
            tree.insert(p.edge(b.parent, b.leftover[j], b.child, b.leftover[j]));
        out.trees.push_back(std::move(tree));
    }

    out.trees.push_back(build_hat_tree(p, tk, split, roles, plan));
    detail::require_verified(out);
    return out;
}

inline TreePacking pack_cartesian(const Graph &g, const Graph &h, const TreePacking &pack_g,
                                  const TreePacking &pack_h) {
    return pack_cartesian(cartesian(g, h), pack_g, pack_h);
}

} // namespace stpack

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "stpack/stpack.hpp"
#include "support.hpp"

using namespace stpack;

namespace {

Graph tree_host(std::size_t n, std::initializer_list<Edge> edges) { return Graph(n, edges); }

EdgeSet all_edges(const Graph &g) { return EdgeSet(std::vector<Edge>(g.edges().begin(), g.edges().end())); }

// Connected, 2-regular on its vertex set, touching exactly `vertices` vertices.
bool is_hamiltonian_cycle(const EdgeSet &edges, std::size_t vertices) {
    std::map<Vertex, std::size_t> degree;
    for (const auto &e : edges) {
        ++degree[e.a];
        ++degree[e.b];
    }
    if (degree.size() != vertices || edges.size() != vertices)
        return false;
    for (auto [v, d] : degree)
        if (d != 2)
            return false;
    std::vector<Edge> relabeled;
    std::map<Vertex, Vertex> id;
    for (auto [v, d] : degree)
        id.emplace(v, id.size());
    for (const auto &e : edges)
        relabeled.emplace_back(id[e.a], id[e.b]);
    return component_count(vertices, relabeled) == 1;
}

std::size_t components_touching(std::size_t n, const EdgeSet &edges) {
    std::set<Vertex> touched;
    for (const auto &e : edges)
        touched.insert({e.a, e.b});
    return component_count(n, edges.edges()) - (n - touched.size());
}

} // namespace

TEST_CASE("rooted trees") {
    const Graph p4 = generate(FamilySpec::path(4));
    const auto t = root_tree(p4, all_edges(p4), 1);
    CHECK(t.order == std::vector<Vertex>{1, 0, 2, 3});
    CHECK(t.parent == std::vector<Vertex>{1, 1, 1, 2});
    CHECK(t.depth == std::vector<std::size_t>{1, 0, 1, 2});
    CHECK_THROWS_AS(root_tree(p4, EdgeSet{{0, 1}}), contract_error);
    CHECK_THROWS_AS(root_tree(p4, all_edges(p4), 4), contract_error);
}

TEST_CASE("leaf split of the seven-vertex example tree") {
    // Vertices renumbered from 1-based labels.
    const Graph h = tree_host(7, {{0, 3}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {3, 6}});
    const auto split = leaf_split(h, all_edges(h));
    CHECK(split.kept_vertices == std::vector<Vertex>{3, 4, 5, 6});
    CHECK(split.kept_tree == EdgeSet{{3, 4}, {3, 5}, {3, 6}});
    CHECK(split.deleted_forest == EdgeSet{{0, 3}, {1, 5}, {2, 5}});
    CHECK(split.attachment_roots == std::vector<Vertex>{3, 5});
    CHECK(split.forest_vertices == std::vector<Vertex>{0, 1, 2, 3, 5});
}

TEST_CASE("leaf split of a path deletes from the low end") {
    const Graph p4 = generate(FamilySpec::path(4));
    const auto split = leaf_split(p4, all_edges(p4));
    CHECK(split.kept_vertices == std::vector<Vertex>{2, 3});
    CHECK(split.kept_tree == EdgeSet{{2, 3}});
    CHECK(split.deleted_forest == EdgeSet{{0, 1}, {1, 2}});
}

TEST_CASE("leaf split of tiny trees") {
    const Graph k2 = generate(FamilySpec::path(2));
    const auto split = leaf_split(k2, all_edges(k2));
    CHECK(split.kept_vertices.size() == 1);
    CHECK(split.kept_tree.size() == 0);
    CHECK(split.deleted_forest.size() == 1);

    const Graph k1(1, {});
    const auto single = leaf_split(k1, EdgeSet{});
    CHECK(single.kept_vertices == std::vector<Vertex>{0});
    CHECK(single.deleted_forest.size() == 0);
}

TEST_CASE("leaf split rejects non-trees") {
    const Graph c4 = generate(FamilySpec::cycle(4));
    CHECK_THROWS_AS(leaf_split(c4, all_edges(c4)), contract_error);
    CHECK_THROWS_AS(leaf_split(c4, EdgeSet{{0, 1}, {1, 2}}), contract_error);
}

TEST_CASE("leaf split invariants on random trees") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 14;
        const Graph h = support::random_connected(n, 0.3, rng);
        const EdgeSet tree = support::random_spanning_tree(h, rng);
        const auto split = leaf_split(h, tree);
        INFO("n=" << n << " trial=" << trial);
        CHECK(split.kept_vertices.size() == (n + 1) / 2);
        CHECK(split.kept_tree.disjoint_from(split.deleted_forest));
        CHECK(split.kept_tree.united(split.deleted_forest) == tree);
        CHECK(split.kept_tree.size() + 1 == split.kept_vertices.size());
        for (const auto &e : split.kept_tree)
            CHECK((split.is_kept(e.a) && split.is_kept(e.b)));
        // Kept vertices are connected by the kept edges alone.
        CHECK(component_count(n, split.kept_tree.edges()) == n - split.kept_vertices.size() + 1);
        // Every forest component over V(H) holds exactly one kept vertex.
        const auto labels = component_labels(n, split.deleted_forest.edges());
        std::map<std::size_t, std::size_t> kept_per_component;
        for (Vertex v = 0; v < n; ++v)
            kept_per_component[labels[v]] += split.is_kept(v);
        for (auto [label, count] : kept_per_component)
            CHECK(count == 1);
        // make_leaf_split accepts the rule's own choice.
        CHECK(make_leaf_split(h, tree, split.kept_vertices).deleted_forest == split.deleted_forest);
    }
}

TEST_CASE("make_leaf_split rejects bad kept sets") {
    const Graph p4 = generate(FamilySpec::path(4));
    const EdgeSet tree = all_edges(p4);
    CHECK_NOTHROW(make_leaf_split(p4, tree, {1, 2}));
    CHECK_THROWS_AS(make_leaf_split(p4, tree, {0, 2}), contract_error);
    CHECK_THROWS_AS(make_leaf_split(p4, tree, {}), contract_error);
    CHECK_THROWS_AS(make_leaf_split(p4, tree, {0, 7}), contract_error);
}

TEST_CASE("matching decomposition of bundles") {
    for (std::size_t n2 = 1; n2 <= 9; ++n2) {
        INFO("n2=" << n2);
        const auto p = lexicographic(generate(FamilySpec::path(2)), generate(FamilySpec::path(n2)));
        const auto md = matching_decomposition(n2);
        const Edge g_edge{0, 1};
        const auto bundle = p.bundle(g_edge).edges;
        EdgeSet covered;
        for (std::size_t j = 1; j <= n2; ++j) {
            const auto m = md.matching_edges(p, g_edge, j);
            CHECK(m.size() == n2);
            std::set<Vertex> ends;
            for (const auto &e : m)
                ends.insert({e.a, e.b});
            CHECK(ends.size() == 2 * n2);
            CHECK(covered.disjoint_from(m));
            covered = covered.united(m);
        }
        CHECK(covered == bundle);
        for (Vertex t = 0; t < n2; ++t)
            CHECK(md.partner(md.identity_index(), t) == t);
        CHECK(md.perfect_cycle_count() == n2 / 2);
        for (std::size_t r = 1; r <= md.perfect_cycle_count(); ++r) {
            CHECK(md.cycle_matchings(r) == std::pair<std::size_t, std::size_t>{2 * r - 1, 2 * r});
            CHECK(is_hamiltonian_cycle(md.perfect_cycle_edges(p, g_edge, r), 2 * n2));
        }
        CHECK_THROWS_AS(md.cycle_matchings(n2 / 2 + 1), contract_error);
        CHECK_THROWS_AS(md.shift(0), contract_error);
        CHECK_THROWS_AS(md.shift(n2 + 1), contract_error);
    }
}

TEST_CASE("n2 = 2 perfect cycle is the whole K22") {
    const auto p = lexicographic(generate(FamilySpec::path(2)), generate(FamilySpec::path(2)));
    CHECK(matching_decomposition(2).perfect_cycle_edges(p, {0, 1}, 1) == p.bundle({0, 1}).edges);
}

TEST_CASE("matchings only apply to lexicographic products of matching order") {
    const auto cp = cartesian(generate(FamilySpec::path(2)), generate(FamilySpec::path(3)));
    CHECK_THROWS_AS(matching_decomposition(3).matching_edges(cp, {0, 1}, 1), unsupported_operation);
    const auto lp = lexicographic(generate(FamilySpec::path(2)), generate(FamilySpec::path(3)));
    CHECK_THROWS_AS(matching_decomposition(4).matching_edges(lp, {0, 1}, 1), contract_error);
    CHECK_THROWS_AS(matching_decomposition(0), contract_error);
}

TEST_CASE("cartesian parallel subgraphs") {
    const Graph g = generate(FamilySpec::complete(4));
    const Graph h = generate(FamilySpec::cycle(5));
    const auto p = cartesian(g, h);
    const EdgeSet tg{{0, 1}, {0, 2}, {0, 3}};
    const EdgeSet th{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    const auto fg = parallel_subgraph_cartesian(p, tg, Factor::g);
    const auto fh = parallel_subgraph_cartesian(p, th, Factor::h);
    CHECK(fg.edges.size() == 3 * 5);
    CHECK(component_count(20, fg.edges.edges()) == 5);
    CHECK(fh.edges.size() == 4 * 4);
    CHECK(component_count(20, fh.edges.edges()) == 4);
    for (Vertex v = 0; v < 5; ++v)
        for (const auto &e : cross_section_copy(p, tg, v))
            CHECK(fg.edges.contains(e));
    CHECK_THROWS_AS(parallel_subgraph_cartesian(p, th, Factor::g), contract_error);
    const auto lp = lexicographic(g, h);
    CHECK_THROWS_AS(parallel_subgraph_cartesian(lp, tg, Factor::g), contract_error);
}

TEST_CASE("lexicographic parallel subgraphs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = support::random_connected(2 + trial % 5, 0.4, rng);
        const Graph h = support::random_connected(1 + trial % 6, 0.4, rng);
        const auto p = lexicographic(g, h);
        const std::size_t n1 = g.order(), n2 = h.order();
        const EdgeSet tree = support::random_spanning_tree(g, rng);
        INFO("n1=" << n1 << " n2=" << n2);
        EdgeSet covered;
        for (std::size_t j = 1; j <= n2; ++j) {
            const auto f = parallel_subgraph_lex(p, tree, j).edges;
            CHECK(f.size() == (n1 - 1) * n2);
            CHECK(component_count(n1 * n2, f.edges()) == n2);
            // Each component meets each fiber once.
            const auto labels = component_labels(n1 * n2, f.edges());
            for (Vertex u = 0; u < n1; ++u) {
                std::set<std::size_t> seen;
                for (Vertex x : p.fiber(u))
                    seen.insert(labels[x]);
                CHECK(seen.size() == n2);
            }
            CHECK(covered.disjoint_from(f));
            covered = covered.united(f);
        }
        EdgeSet bundles;
        for (const auto &e : tree)
            bundles = bundles.united(p.bundle(e).edges);
        CHECK(covered == bundles);

        EdgeSet copies;
        for (Vertex v = 0; v < n2; ++v)
            copies = copies.united(cross_section_copy(p, tree, v));
        CHECK(parallel_subgraph_lex(p, tree, n2).edges == copies);
    }
}

TEST_CASE("lexicographic fiber-parallel subgraph") {
    const auto p = lexicographic(generate(FamilySpec::path(3)), generate(FamilySpec::complete(4)));
    const EdgeSet th{{0, 1}, {1, 2}, {2, 3}};
    const auto f = fiber_parallel_subgraph(p, th);
    CHECK(f.edges.size() == 9);
    CHECK(components_touching(12, f.edges) == 3);
    CHECK_THROWS_AS(fiber_parallel_subgraph(p, EdgeSet{{0, 1}}), contract_error);
}

TEST_CASE("spanning tree extraction") {
    const Graph k4 = generate(FamilySpec::complete(4));
    const auto tree = extract_spanning_tree(k4, all_edges(k4));
    CHECK(is_spanning_tree(k4, tree));
    CHECK(tree == EdgeSet{{0, 1}, {0, 2}, {0, 3}});
    try {
        extract_spanning_tree(k4, EdgeSet{{0, 1}, {1, 2}});
        FAIL("expected an extraction error");
    } catch (const extraction_error &e) {
        CHECK(e.separated_vertex() == 3);
    }
    CHECK_THROWS_AS(extract_spanning_tree(generate(FamilySpec::path(3)), EdgeSet{{0, 2}}), contract_error);
}

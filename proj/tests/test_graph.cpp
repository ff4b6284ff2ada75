#include <catch2/catch_amalgamated.hpp>

#include "stpack/stpack.hpp"

using namespace stpack;

TEST_CASE("edges are stored with the smaller endpoint first") {
    Edge e{5, 2};
    CHECK(e.a == 2);
    CHECK(e.b == 5);
    CHECK(Edge{2, 5} == e);
    CHECK(to_string(e) == "{2,5}");
}

TEST_CASE("graph construction rejects loops, duplicates and stray endpoints") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), contract_error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), contract_error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), contract_error);
    Graph g(3, {{0, 1}, {1, 2}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge({2, 1}));
    CHECK_FALSE(g.has_edge({0, 2}));
}

TEST_CASE("EdgeSet keeps edges sorted and unique") {
    EdgeSet s{{3, 1}, {0, 2}, {1, 3}};
    REQUIRE(s.size() == 2);
    CHECK(s.edges()[0] == Edge{0, 2});
    CHECK(s.contains({1, 3}));
    EdgeSet t{{0, 1}};
    CHECK(s.disjoint_from(t));
    CHECK(s.united(t).size() == 3);
    CHECK_FALSE(s.united(t).disjoint_from(t));
}

TEST_CASE("spanning tree recognition") {
    const Graph c4 = generate(FamilySpec::cycle(4));
    CHECK(is_spanning_tree(c4, EdgeSet{{0, 1}, {1, 2}, {2, 3}}));
    CHECK_FALSE(is_spanning_tree(c4, EdgeSet{{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK_FALSE(is_spanning_tree(c4, EdgeSet{{0, 1}, {2, 3}}));
    CHECK(is_spanning_tree(Graph(1, {}), EdgeSet{}));
}

TEST_CASE("family sizes") {
    SECTION("complete") {
        for (std::size_t n = 1; n <= 9; ++n)
            CHECK(generate(FamilySpec::complete(n)).size() == n * (n - 1) / 2);
    }
    SECTION("hypercube") {
        for (std::size_t d = 1; d <= 8; ++d) {
            const Graph q = generate(FamilySpec::hypercube(d));
            CHECK(q.order() == (std::size_t{1} << d));
            CHECK(q.size() == d * (std::size_t{1} << (d - 1)));
        }
    }
    SECTION("complete multipartite") {
        for (std::size_t n = 2; n <= 5; ++n)
            for (std::size_t m = 1; m <= 4; ++m)
                CHECK(generate(FamilySpec::multipartite(n, m)).size() == m * m * n * (n - 1) / 2);
    }
    SECTION("paths and cycles") {
        CHECK(generate(FamilySpec::path(1)).size() == 0);
        CHECK(generate(FamilySpec::path(6)).size() == 5);
        CHECK(generate(FamilySpec::cycle(6)).size() == 6);
    }
    SECTION("K4 minus an edge drops {2,3}") {
        const Graph g = generate(FamilySpec::complete_minus_edge(4));
        CHECK(g.size() == 5);
        CHECK_FALSE(g.has_edge({2, 3}));
    }
}

TEST_CASE("every valid family is connected") {
    std::vector<FamilySpec> specs;
    for (std::size_t n = 1; n <= 7; ++n) {
        specs.push_back(FamilySpec::path(n));
        specs.push_back(FamilySpec::complete(n));
    }
    for (std::size_t n = 3; n <= 7; ++n) {
        specs.push_back(FamilySpec::cycle(n));
        specs.push_back(FamilySpec::complete_minus_edge(n));
    }
    for (std::size_t d = 1; d <= 6; ++d)
        specs.push_back(FamilySpec::hypercube(d));
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t m = 1; m <= 3; ++m)
            specs.push_back(FamilySpec::multipartite(n, m));
    for (const auto &spec : specs) {
        INFO(to_string(spec));
        CHECK(is_connected(generate(spec)));
    }
}

TEST_CASE("invalid family parameters name the bound") {
    CHECK_THROWS_WITH(generate(FamilySpec::cycle(2)), Catch::Matchers::ContainsSubstring(">= 3"));
    CHECK_THROWS_AS(generate(FamilySpec::path(0)), parameter_error);
    CHECK_THROWS_AS(generate(FamilySpec::multipartite(1, 3)), parameter_error);
    CHECK_THROWS_AS(generate(FamilySpec::hypercube(0)), parameter_error);
}

TEST_CASE("family short names") {
    for (const char *name : {"P4", "C5", "K6", "K3(2)", "Q3", "K4-"})
        CHECK(to_string(parse_family(name)) == name);
    CHECK_THROWS_AS(parse_family("X3"), parameter_error);
    CHECK_THROWS_AS(parse_family("C2"), parameter_error);
}

TEST_CASE("multipartite ids group parts contiguously") {
    const Graph g = generate(FamilySpec::multipartite(3, 2));
    CHECK_FALSE(g.has_edge({0, 1}));
    CHECK_FALSE(g.has_edge({2, 3}));
    CHECK(g.has_edge({1, 2}));
    CHECK(g.degree(0) == 4);
}

TEST_CASE("components") {
    std::vector<Edge> edges{{0, 1}, {3, 4}};
    CHECK(component_count(5, edges) == 3);
    auto labels = component_labels(5, edges);
    CHECK(labels[0] == labels[1]);
    CHECK(labels[3] == labels[4]);
    CHECK(labels[2] != labels[0]);
    CHECK(reachable(5, edges, 3) == std::vector<Vertex>{3, 4});
}

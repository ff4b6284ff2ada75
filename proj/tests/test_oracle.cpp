#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "stpack/stpack.hpp"
#include "support.hpp"

using namespace stpack;

TEST_CASE("oracle on small families") {
    CHECK(max_packing(generate(FamilySpec::complete(4))).sigma == 2);
    CHECK(max_packing(generate(FamilySpec::complete(6))).sigma == 3);
    CHECK(max_packing(generate(FamilySpec::complete(7))).sigma == 3);
    CHECK(max_packing(generate(FamilySpec::path(5))).sigma == 1);
    CHECK(max_packing(generate(FamilySpec::cycle(6))).sigma == 1);
    CHECK(max_packing(generate(FamilySpec::hypercube(4))).sigma == 2);
    CHECK(max_packing(generate(FamilySpec::complete_minus_edge(4))).sigma == 1);
    CHECK(max_packing(generate(FamilySpec::multipartite(3, 2))).sigma == 2);
    CHECK(max_packing(generate(FamilySpec::path(2))).sigma == 1);
}

TEST_CASE("oracle witness and certificate agree") {
    for (const auto &spec : {FamilySpec::complete(5), FamilySpec::hypercube(3), FamilySpec::multipartite(2, 3),
                             FamilySpec::cycle(5), FamilySpec::complete_minus_edge(6)}) {
        INFO(to_string(spec));
        const Graph g = generate(spec);
        const auto r = max_packing(g);
        CHECK(verify_packing(g, r.packing).ok());
        CHECK(r.packing.method == PackingMethod::oracle);
        CHECK(r.certificate.bound == r.sigma);
        CHECK(r.certificate.partition.size() >= 2);
        CHECK(r.sigma <= edge_bound(g));
    }
}

TEST_CASE("oracle rejects graphs without a packing number") {
    CHECK_THROWS_AS(max_packing(Graph(4, {{0, 1}, {2, 3}})), input_error);
    CHECK_THROWS_AS(max_packing(Graph(1, {})), input_error);
    CHECK(factor_packing(Graph(1, {})).count() == 1);
}

TEST_CASE("edge bound") {
    CHECK(edge_bound(generate(FamilySpec::complete(4))) == 2);
    CHECK(edge_bound(generate(FamilySpec::complete_minus_edge(4))) == 1);
    CHECK_THROWS_AS(edge_bound(Graph(1, {})), contract_error);
}

TEST_CASE("certificates") {
    const Graph k4 = generate(FamilySpec::complete(4));
    const auto c = make_certificate(k4, {{3}, {0, 1}, {2}});
    CHECK(c.crossing_count == 5);
    CHECK(c.bound == 2);
    CHECK(c.partition.front() == std::vector<Vertex>{0, 1});
    CHECK_THROWS_AS(make_certificate(k4, {{0, 1, 2, 3}}), contract_error);
    CHECK_THROWS_AS(make_certificate(k4, {{0, 1}, {1, 2, 3}}), contract_error);
    CHECK_THROWS_AS(make_certificate(k4, {{0, 1}, {2}}), contract_error);
    CHECK_THROWS_AS(make_certificate(k4, {{0, 1}, {}, {2, 3}}), contract_error);
}

TEST_CASE("brute force partition search") {
    CHECK(tutte_bruteforce(generate(FamilySpec::complete(4))).bound == 2);
    CHECK(tutte_bruteforce(generate(FamilySpec::cycle(7))).bound == 1);
    CHECK(tutte_bruteforce(generate(FamilySpec::complete(2))).bound == 1);
    CHECK_THROWS_AS(tutte_bruteforce(generate(FamilySpec::path(13))), size_error);
    CHECK_THROWS_AS(tutte_bruteforce(Graph(1, {})), size_error);
}

TEST_CASE("oracle matches brute force on random graphs") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + trial % 8;
        const Graph g = support::random_connected(n, 0.2 + 0.1 * (trial % 8), rng);
        INFO("n=" << n << " m=" << g.size());
        const auto r = max_packing(g);
        CHECK(r.sigma == tutte_bruteforce(g).bound);
        CHECK(verify_packing(g, r.packing).ok());
    }
}

TEST_CASE("adding an edge never lowers the packing number") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + trial % 7;
        const Graph g = support::random_connected(n, 0.3, rng);
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        std::vector<Edge> missing;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (!g.has_edge({a, b}))
                    missing.push_back({a, b});
        if (missing.empty())
            continue;
        edges.push_back(missing[rng() % missing.size()]);
        CHECK(max_packing(Graph(n, edges)).sigma >= max_packing(g).sigma);
    }
}

TEST_CASE("oracle is deterministic") {
    const Graph g = cartesian(generate(FamilySpec::complete(4)), generate(FamilySpec::cycle(4))).graph();
    const auto a = max_packing(g), b = max_packing(g);
    CHECK(a.packing.trees == b.packing.trees);
    CHECK(a.certificate.partition == b.certificate.partition);
}

TEST_CASE("closed-form rows at desk scale") {
    using R = PropositionRow;
    CHECK(verify_proposition_row(R::three, {4}).ok());
    CHECK(verify_proposition_row(R::seven, {3, 2}).ok());
    CHECK(verify_proposition_row(R::one, {5, 4}).ok());
    CHECK(verify_proposition_row(R::two, {4, 6}).ok());
    CHECK(verify_proposition_row(R::four, {2, 2, 3}).ok());
    CHECK(verify_proposition_row(R::five, {2, 2, 4}).ok());
    CHECK(verify_proposition_row(R::six, {2, 2, 2, 2}).ok());
    CHECK(closed_form(R::two, {4, 4}) == 3);
    CHECK_THROWS_AS(verify_proposition_row(R::three, {7}), parameter_error);
    CHECK_THROWS_AS(verify_proposition_row(R::two, {6, 4}), parameter_error);
    CHECK_THROWS_AS(verify_proposition_row(R::one, {8, 9}), parameter_error);
    CHECK_THROWS_AS(closed_form(R::one, {4}), parameter_error);
}

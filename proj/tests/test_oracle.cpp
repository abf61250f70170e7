#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "spanweight/json_io.hpp"
#include "spanweight/oracle.hpp"
#include "support.hpp"

using namespace spanweight;

TEST_CASE("exhaustive oracle on K2") {
    Graph k2(2, {{0, 1}});
    OracleResult res = exhaustive_offsets(k2, TotalWeighting::zero(k2), Rational(1));
    CHECK(res.feasible_count == 4);
    REQUIRE(res.first.has_value());
    // lexicographically first: only vertex 1 heavy
    CHECK(res.first->values.vertex == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(res.first->values.edge == std::vector<Rational>{Rational(0)});
}

TEST_CASE("exhaustive oracle on a single vertex") {
    Graph g(1, {});
    OracleResult res = exhaustive_offsets(g, TotalWeighting::zero(g), Rational(1));
    CHECK(res.feasible_count == 2);
}

TEST_CASE("exhaustive oracle on K3, pinned regression count") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    OracleResult res = exhaustive_offsets(k3, TotalWeighting::zero(k3), Rational(1));
    CHECK(res.feasible_count == 12);
    REQUIRE(res.first.has_value());
    CHECK(res.first->values.vertex == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("oracle size cap") {
    Graph k7 = gen_named("complete", {7});   // 7 + 21 elements
    CHECK_THROWS_AS(exhaustive_offsets(k7, TotalWeighting::zero(k7), Rational(1)), ResourceLimit);
}

TEST_CASE("feasibility count is invariant under relabeling") {
    std::mt19937_64 rng(4321);
    const Rational pool[] = {Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3)};
    for (int round = 0; round < 15; ++round) {
        int n = 2 + static_cast<int>(rng() % 4);
        Graph g = gen_random(n, Rational(1, 2), rng());
        TotalWeighting w0 = TotalWeighting::zero(g);
        for (auto& x : w0.vertex) x = pool[rng() % 4];
        for (auto& x : w0.edge) x = pool[rng() % 4];
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
        auto [h, wh] = testsup::relabel(g, w0, perm);
        Rational a(1, 3);
        CHECK(exhaustive_offsets(g, w0, a).feasible_count == exhaustive_offsets(h, wh, a).feasible_count);
    }
}

TEST_CASE("named generators") {
    Graph c5 = gen_named("cycle", {5});
    CHECK(c5.edge_count() == 5);
    CHECK(c5.has_edge(4, 0));

    Graph pet = gen_named("petersen", {});
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

    CHECK(gen_named("complete", {4}).edge_count() == 6);
    CHECK(gen_named("complete_bipartite", {2, 3}).edge_count() == 6);
    CHECK(gen_named("star", {3}).degree(0) == 3);
    Graph q3 = gen_named("hypercube", {3});
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(gen_named("path", {1}).vertex_count() == 1);
    CHECK(gen_named("path", {4}).edge_count() == 3);

    CHECK_THROWS_AS(gen_named("cycle", {2}), DomainError);
    CHECK_THROWS_AS(gen_named("moebius", {5}), DomainError);
    CHECK_THROWS_AS(gen_named("petersen", {1}), DomainError);
}

TEST_CASE("random generator respects the probability endpoints") {
    CHECK(gen_random(5, Rational(0), 9).edge_count() == 0);
    CHECK(gen_random(5, Rational(1), 9).edge_count() == 10);
    Graph a = gen_random(8, Rational(1, 2), 123);
    Graph b = gen_random(8, Rational(1, 2), 123);
    CHECK(a.edges() == b.edges());
    CHECK_THROWS_AS(gen_random(5, Rational(3, 2), 9), DomainError);
}

TEST_CASE("regular generator") {
    Graph cubic = gen_regular(10, 3, 7);
    CHECK(cubic.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(cubic.degree(v) == 3);
    CHECK(gen_regular(10, 3, 7).edges() == cubic.edges());
    CHECK_THROWS_AS(gen_regular(5, 3, 7), DomainError);   // odd n*d
    CHECK_THROWS_AS(gen_regular(4, 4, 7), DomainError);   // d >= n
}

TEST_CASE("empty fuzz campaign") {
    FuzzConfig cfg;
    cfg.count = 0;
    FuzzReport rep = fuzz_campaign(cfg);
    CHECK(rep.total == 0);
    CHECK(rep.failed == 0);
    CHECK(!rep.minimal.has_value());
}

TEST_CASE("small fuzz campaign passes and is reproducible") {
    FuzzConfig cfg;
    cfg.count = 60;
    cfg.seed = 99;
    cfg.nmax = 5;
    FuzzReport a = fuzz_campaign(cfg);
    CHECK(a.total == 60);
    CHECK(a.failed == 0);
    CHECK(a.passed == 60);
    CHECK(a.oracle_checked == 60);
    FuzzReport b = fuzz_campaign(cfg);
    CHECK(fuzz_report_to_json(cfg, a).dump() == fuzz_report_to_json(cfg, b).dump());
}

TEST_CASE("fuzz config validation") {
    FuzzConfig cfg;
    cfg.nmax = 0;
    CHECK_THROWS_AS(fuzz_campaign(cfg), DomainError);
    cfg = FuzzConfig{};
    cfg.spans.clear();
    CHECK_THROWS_AS(fuzz_campaign(cfg), DomainError);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spanweight/mwis.hpp"
#include "spanweight/oracle.hpp"

using namespace spanweight;

TEST_CASE("bruteforce oracle on pinned instances") {
    Graph p3(3, {{0, 1}, {1, 2}});
    MwisResult r = mwis_bruteforce(p3, {1, 5, 1});
    CHECK(r.weight == 5);
    CHECK(r.witness == std::vector<int>{1});

    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    r = mwis_bruteforce(c5, PhiColoring(5, 1));
    CHECK(r.weight == 2);
    CHECK(r.witness == std::vector<int>{0, 2});

    Graph edgeless(4, {});
    r = mwis_bruteforce(edgeless, {2, 0, 3, 1});
    CHECK(r.weight == 6);
    CHECK(r.witness == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("bruteforce size cap") {
    Graph big(25, {});
    CHECK_THROWS_AS(mwis_bruteforce(big, PhiColoring(25, 1)), ResourceLimit);
}

TEST_CASE("phi validation") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(mwis_bruteforce(p3, {1, -1, 1}), DomainError);
    CHECK_THROWS_AS(mwis_exact(p3, {1, 1}), DomainError);
}

TEST_CASE("exact solver on pinned instances") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(mwis_exact(k4, PhiColoring(4, 1)) == std::vector<int>{0});

    Graph pet = gen_named("petersen", {});
    std::vector<int> w = mwis_exact(pet, PhiColoring(10, 1));
    CHECK(w.size() == 4);   // independence number of the Petersen graph
    CHECK(w == mwis_bruteforce(pet, PhiColoring(10, 1)).witness);
    CHECK(w == std::vector<int>{0, 2, 8, 9});

    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<int> wit = mwis_exact(p4, {2, 3, 3, 2});
    CHECK(wit == std::vector<int>{0, 2});
    CHECK(mwis_weight(p4, {2, 3, 3, 2}) == 5);
}

TEST_CASE("exact equals bruteforce on random graphs") {
    std::mt19937_64 rng(20260810);
    for (int round = 0; round < 80; ++round) {
        int n = 1 + static_cast<int>(rng() % 12);
        Rational probs[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
        Graph g = gen_random(n, probs[rng() % 3], rng());
        PhiColoring phi(static_cast<std::size_t>(n));
        for (auto& x : phi) x = static_cast<long>(rng() % 6);
        MwisResult brute = mwis_bruteforce(g, phi);
        std::vector<int> wit = mwis_exact(g, phi);
        long w = 0;
        for (int v : wit) w += phi[static_cast<std::size_t>(v)];
        CHECK(w == brute.weight);
        CHECK(wit == brute.witness);
        CHECK(mwis_weight(g, phi) == brute.weight);
    }
}

TEST_CASE("phi-maximum extension dominates") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(phi_maximum_set(p3, {0, 0, 0}) == std::vector<int>{0, 2});

    Graph k2(2, {{0, 1}});
    CHECK(phi_maximum_set(k2, {0, 0}) == std::vector<int>{0});

    Graph s3(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(phi_maximum_set(s3, PhiColoring(4, 1)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("phi-maximum sets are independent, dominating and optimal") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = gen_random(n, Rational(1, 2), rng());
        PhiColoring phi(static_cast<std::size_t>(n));
        for (auto& x : phi) x = static_cast<long>(rng() % 4);
        std::vector<int> set = phi_maximum_set(g, phi);
        CHECK(is_independent(g, set));
        CHECK(is_dominating(g, set));
        long w = 0;
        for (int v : set) w += phi[static_cast<std::size_t>(v)];
        CHECK(w == mwis_weight(g, phi));
    }
}

TEST_CASE("isolated zero-weight vertex leaves the optimum unchanged") {
    std::mt19937_64 rng(88);
    for (int round = 0; round < 20; ++round) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = gen_random(n, Rational(1, 2), rng());
        PhiColoring phi(static_cast<std::size_t>(n));
        for (auto& x : phi) x = static_cast<long>(rng() % 5);
        Graph bigger(n + 1, g.edges());
        PhiColoring phi2 = phi;
        phi2.push_back(0);
        CHECK(mwis_weight(g, phi) == mwis_weight(bigger, phi2));
    }
}

TEST_CASE("identical inputs give identical witnesses") {
    Graph g = gen_random(10, Rational(1, 2), 4242);
    PhiColoring phi = {3, 1, 4, 1, 5, 0, 2, 2, 1, 3};
    CHECK(mwis_exact(g, phi) == mwis_exact(g, phi));
    CHECK(phi_maximum_set(g, phi) == phi_maximum_set(g, phi));
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spanweight/oracle.hpp"
#include "spanweight/solver.hpp"
#include "spanweight/verify.hpp"

using namespace spanweight;

TEST_CASE("properness checking") {
    Graph k2(2, {{0, 1}});
    VerificationReport rep = verify_proper(k2, TotalWeighting::constant(k2, Rational(1)));
    CHECK(!rep.overall());
    CHECK(rep.find("proper")->witness.find("(0,1)") != std::string::npos);

    TotalWeighting w = TotalWeighting::zero(k2);
    w.vertex = {Rational(1), Rational(2)};
    w.edge = {Rational(1)};
    CHECK(verify_proper(k2, w).overall());   // 2 vs 3

    Graph edgeless(3, {});
    CHECK(verify_proper(edgeless, TotalWeighting::constant(edgeless, Rational(7))).overall());

    Graph empty(0, {});
    CHECK(verify_proper(empty, TotalWeighting::zero(empty)).overall());

    TotalWeighting missing;
    CHECK_THROWS_AS(verify_proper(k2, missing), DomainError);
}

TEST_CASE("offset verification on a solved instance") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    TotalWeighting w0 = TotalWeighting::zero(k3);
    Rational a(1);
    SolveResult sol = solve_offsets(k3, w0, a);
    VerificationReport rep = verify_offsets(k3, w0, a, sol.offsets, sol.decomposition);
    INFO(rep.summary());
    CHECK(rep.overall());
}

TEST_CASE("offset verification catches tampering") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    TotalWeighting w0 = TotalWeighting::zero(k3);
    Rational a(1);
    SolveResult sol = solve_offsets(k3, w0, a);

    SECTION("extra heavy edge on a full vertex's star") {
        OffsetWeighting bad = sol.offsets;
        bad.values.edge[static_cast<std::size_t>(k3.edge_index(0, 1))] = a;
        VerificationReport rep = verify_offsets(k3, w0, a, bad, sol.decomposition);
        CHECK(!rep.overall());
        REQUIRE(rep.find("targets") != nullptr);
        CHECK(!rep.find("targets")->pass);
        CHECK(rep.find("targets")->witness.find("vertex 0") != std::string::npos);
    }
    SECTION("half-span offset breaks the range check") {
        OffsetWeighting bad = sol.offsets;
        bad.values.vertex[0] = a / Rational(2);
        VerificationReport rep = verify_offsets(k3, w0, a, bad, sol.decomposition);
        CHECK(!rep.find("offset-range")->pass);
    }
    SECTION("span mismatch breaks the range check") {
        OffsetWeighting bad = sol.offsets;
        bad.span = Rational(2);
        CHECK(!verify_offsets(k3, w0, a, bad, sol.decomposition).find("offset-range")->pass);
    }
}

TEST_CASE("list membership") {
    Graph k2(2, {{0, 1}});
    auto lists = uniform_lists(k2, Rational(1), Rational(2));
    TotalWeighting w = solve_lists(k2, lists);
    CHECK(verify_list_membership(k2, lists, w).overall());

    TotalWeighting off = w;
    off.vertex[0] = Rational(0);   // low(z) - 1
    VerificationReport rep = verify_list_membership(k2, lists, off);
    CHECK(!rep.overall());
    CHECK(rep.find("list-membership")->witness.find("element 0") != std::string::npos);

    Graph empty(0, {});
    CHECK(verify_list_membership(empty, {}, TotalWeighting::zero(empty)).overall());

    std::map<Element, std::pair<Rational, Rational>> partial;
    partial[Element::vertex(0)] = {Rational(1), Rational(2)};
    CHECK_THROWS_AS(verify_list_membership(k2, partial, w), DomainError);
}

TEST_CASE("offset pass implies properness pass") {
    std::mt19937_64 rng(17);
    const Rational pool[] = {Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3)};
    for (int round = 0; round < 40; ++round) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = gen_random(n, Rational(1, 2), rng());
        TotalWeighting w0 = TotalWeighting::zero(g);
        for (auto& x : w0.vertex) x = pool[rng() % 4];
        for (auto& x : w0.edge) x = pool[rng() % 4];
        Rational a(1, 3);
        SolveResult sol = solve_offsets(g, w0, a);
        VerificationReport rep = verify_offsets(g, w0, a, sol.offsets, sol.decomposition);
        REQUIRE(rep.overall());
        CHECK(verify_proper(g, add_weightings(w0, sol.offsets.values)).overall());
    }
}

TEST_CASE("replay flags corrupted traces") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    TotalWeighting w0 = TotalWeighting::zero(k3);
    Rational a(1);
    SolveResult sol = solve_offsets(k3, w0, a);

    SECTION("double write") {
        RunTrace bad = sol.trace;
        REQUIRE(!bad.iterations.empty());
        bad.iterations[0].member_vertices.push_back(2);
        bad.iterations[0].member_vertices.push_back(2);
        ReplayResult rep = replay_trace(k3, w0, a, sol.decomposition, bad);
        CHECK(!rep.report.find("monotone-writes")->pass);
    }
    SECTION("overweight write") {
        RunTrace bad = sol.trace;
        bad.iterations.back().member_vertices.push_back(0);   // vertex 0 has demand 0
        ReplayResult rep = replay_trace(k3, w0, a, sol.decomposition, bad);
        CHECK(!rep.report.find("goodness")->pass);
    }
}

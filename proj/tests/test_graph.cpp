#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spanweight/graph.hpp"
#include "spanweight/oracle.hpp"

using namespace spanweight;

TEST_CASE("edge-list parsing") {
    Graph k3 = Graph::parse("3 3\n0 1\n1 2\n0 2\n");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 2));
    CHECK(k3.degree(1) == 2);

    Graph empty4 = Graph::parse("4 0");
    CHECK(empty4.vertex_count() == 4);
    CHECK(empty4.edge_count() == 0);

    Graph commented = Graph::parse("# a triangle\n3 3 # header\n0 1\n# middle\n1 2\n2 0\n");
    CHECK(commented.edge_count() == 3);
}

TEST_CASE("parse diagnostics carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            Graph::parse(text);
        } catch (const ParseError& e) {
            return e.line_no;
        }
        return -1;
    };
    CHECK(line_of("2 1\n0 0\n") == 2);                  // self-loop
    CHECK(line_of("3 2\n0 1\n1 0\n") == 3);             // duplicate edge
    CHECK(line_of("2 1\n0 5\n") == 2);                  // id out of range
    CHECK(line_of("2 1\nx y\n") == 2);                  // malformed
    CHECK(line_of("2\n") == 1);                         // bad header
    CHECK_THROWS_AS(Graph::parse("2 2\n0 1\n"), ParseError);   // missing edges
    CHECK_THROWS_AS(Graph::parse(""), ParseError);
    CHECK_THROWS_AS(Graph::parse("2 0\n0 1\n"), ParseError);   // extra edge
}

TEST_CASE("weighted degree") {
    Graph k2(2, {{0, 1}});
    TotalWeighting ones = TotalWeighting::constant(k2, Rational(1));
    CHECK(weighted_degree(k2, ones, 0) == Rational(2));

    Graph single(1, {});
    TotalWeighting w = TotalWeighting::zero(single);
    w.vertex[0] = Rational(5, 2);
    CHECK(weighted_degree(single, w, 0) == Rational(5, 2));

    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    TotalWeighting w3 = TotalWeighting::zero(k3);
    w3.edge[static_cast<std::size_t>(k3.edge_index(0, 1))] = Rational(1, 3);
    w3.edge[static_cast<std::size_t>(k3.edge_index(0, 2))] = Rational(1, 3);
    CHECK(weighted_degree(k3, w3, 0) == Rational(2, 3));

    TotalWeighting short_w;
    CHECK_THROWS_AS(weighted_degree(k3, short_w, 0), DomainError);
}

TEST_CASE("weighted degree closed forms") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 20; ++round) {
        Graph g = gen_random(1 + static_cast<int>(rng() % 8), Rational(1, 2), rng());
        TotalWeighting zero = TotalWeighting::zero(g);
        Rational c(3, 7);
        TotalWeighting cc = TotalWeighting::constant(g, c);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(weighted_degree(g, zero, v) == Rational(0));
            CHECK(weighted_degree(g, cc, v) == c * Rational(g.degree(v) + 1));
        }
    }
}

TEST_CASE("induced subgraphs") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto sub = k3.induced({0, 1});
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.to_parent == std::vector<int>{0, 1});

    auto none = k3.induced({});
    CHECK(none.graph.vertex_count() == 0);

    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto odd = c5.induced({0, 2, 4});
    CHECK(odd.graph.edge_count() == 1);
    CHECK(odd.graph.has_edge(0, 2));   // local ids of 0 and 4
    CHECK(odd.to_parent == std::vector<int>{0, 2, 4});
    CHECK(odd.graph.degree(1) == 0);   // vertex 2 is isolated inside

    CHECK_THROWS_AS(k3.induced({0, 9}), DomainError);
    CHECK_THROWS_AS(k3.induced({0, 0}), DomainError);
}

TEST_CASE("bipartite subgraph between two parts") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto star = k3.bipartite_between({0}, {1, 2});
    CHECK(star.graph.edge_count() == 2);
    CHECK(star.graph.degree(0) == 2);

    Graph p3(3, {{0, 1}, {1, 2}});
    auto both = p3.bipartite_between({0, 2}, {1});
    CHECK(both.graph.edge_count() == 2);

    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto nocross = p4.bipartite_between({0}, {3});
    CHECK(nocross.graph.edge_count() == 0);
    CHECK(nocross.graph.vertex_count() == 2);

    CHECK_THROWS_AS(k3.bipartite_between({0, 1}, {1, 2}), DomainError);
}

TEST_CASE("bipartite subgraph keeps no edges inside a part") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 25; ++round) {
        Graph g = gen_random(2 + static_cast<int>(rng() % 8), Rational(1, 2), rng());
        std::vector<int> xs, ys;
        for (int v = 0; v < g.vertex_count(); ++v) (rng() % 2 ? xs : ys).push_back(v);
        auto sub = g.bipartite_between(xs, ys);
        std::vector<bool> in_x(static_cast<std::size_t>(g.vertex_count()), false);
        for (int x : xs) in_x[static_cast<std::size_t>(x)] = true;
        for (auto [u, v] : sub.graph.edges()) {
            int pu = sub.to_parent[static_cast<std::size_t>(u)];
            int pv = sub.to_parent[static_cast<std::size_t>(v)];
            CHECK(in_x[static_cast<std::size_t>(pu)] != in_x[static_cast<std::size_t>(pv)]);
            CHECK(g.has_edge(pu, pv));
        }
    }
}

TEST_CASE("closed star") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto star = k3.closed_star(0);
    REQUIRE(star.size() == 3);
    CHECK(star[0] == Element::vertex(0));
    CHECK(star[1] == Element::edge(0, 1));
    CHECK(star[2] == Element::edge(0, 2));

    Graph lone(1, {});
    CHECK(lone.closed_star(0).size() == 1);

    Graph s3(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(s3.closed_star(0).size() == 4);
    CHECK_THROWS_AS(s3.closed_star(7), DomainError);

    std::mt19937_64 rng(5);
    for (int round = 0; round < 10; ++round) {
        Graph g = gen_random(1 + static_cast<int>(rng() % 9), Rational(1, 2), rng());
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(g.closed_star(v).size() == static_cast<std::size_t>(g.degree(v)) + 1);
    }
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), DomainError);
    CHECK_THROWS_AS(Graph(-1, {}), DomainError);
}

TEST_CASE("sparse weighting ingestion diagnoses gaps") {
    Graph k2(2, {{0, 1}});
    std::map<Element, Rational> sparse;
    sparse[Element::vertex(0)] = Rational(1);
    sparse[Element::vertex(1)] = Rational(2);
    CHECK_THROWS_WITH(to_total(k2, sparse), Catch::Matchers::ContainsSubstring("0-1"));
    sparse[Element::edge(0, 1)] = Rational(3);
    TotalWeighting w = to_total(k2, sparse);
    CHECK(w.vertex[1] == Rational(2));
    CHECK(w.edge[0] == Rational(3));
    sparse[Element::edge(0, 5)] = Rational(1);
    CHECK_THROWS_AS(to_total(k2, sparse), DomainError);
}

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "spanweight/errors.hpp"
#include "spanweight/rational.hpp"

namespace spanweight {

// A weightable element of a graph: either a vertex or an edge. Edge elements
// carry the sorted endpoint pair; a vertex element stores its id twice.
struct Element {
    int u = 0;
    int v = 0;

    static Element vertex(int id) { return {id, id}; }
    static Element edge(int a, int b) {
        if (a > b) std::swap(a, b);
        return {a, b};
    }
    bool is_vertex() const { return u == v; }
    bool is_edge() const { return u != v; }

    // File key: "7" for a vertex, "2-5" for an edge.
    std::string key() const {
        if (is_vertex()) return std::to_string(u);
        return std::to_string(u) + "-" + std::to_string(v);
    }

    friend bool operator==(const Element& a, const Element& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Element& a, const Element& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    }
};

// Simple undirected graph with vertices 0..n-1. Immutable after construction;
// edges are stored as sorted (u, v) pairs in lexicographic order and the
// per-vertex neighbor lists are sorted.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edge_list) {
        if (n < 0) throw DomainError("negative vertex count");
        n_ = n;
        for (auto& [u, v] : edge_list) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_) throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        }
        std::sort(edge_list.begin(), edge_list.end());
        for (std::size_t i = 1; i < edge_list.size(); ++i)
            if (edge_list[i] == edge_list[i - 1])
                throw DomainError("duplicate edge (" + std::to_string(edge_list[i].first) + "," +
                                  std::to_string(edge_list[i].second) + ")");
        edges_ = std::move(edge_list);
        adj_.assign(n_, {});
        inc_.assign(n_, {});
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            auto [u, v] = edges_[e];
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            inc_[u].push_back(static_cast<int>(e));
            inc_[v].push_back(static_cast<int>(e));
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    // Edge-list format: first non-comment line "n m", then m lines "u v".
    // '#' starts a comment (whole line or trailing). Diagnostics carry the
    // 1-based line number.
    static Graph parse(const std::string& text);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    // Indices into edges() of the edges incident to v.
    const std::vector<int>& incident_edges(int v) const {
        check_vertex(v);
        return inc_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }
    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    // Z_v = {v} plus the incident edges; |Z_v| = d(v) + 1.
    std::vector<Element> closed_star(int v) const {
        check_vertex(v);
        std::vector<Element> out{Element::vertex(v)};
        for (int e : inc_[v]) out.push_back(Element::edge(edges_[e].first, edges_[e].second));
        return out;
    }

    // A subgraph together with the map from its compact ids back to ours.
    struct Subgraph;

    // Subgraph induced by X (ids are compacted in ascending order of X).
    Subgraph induced(const std::vector<int>& xs) const;

    // Bipartite subgraph G[X, Y]: vertex set X ∪ Y (compacted ascending),
    // edge set exactly the edges with one end in X and the other in Y.
    Subgraph bipartite_between(const std::vector<int>& xs, const std::vector<int>& ys) const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw DomainError("unknown vertex " + std::to_string(v));
    }
    std::vector<int> checked_sorted_set(const std::vector<int>& xs, const char* op) const {
        std::vector<int> s(xs);
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= n_)
                throw DomainError(std::string(op) + ": unknown vertex " + std::to_string(s[i]));
            if (i > 0 && s[i] == s[i - 1])
                throw DomainError(std::string(op) + ": repeated vertex " + std::to_string(s[i]));
        }
        return s;
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

struct Graph::Subgraph {
    Graph graph;
    std::vector<int> to_parent;   // local id -> parent id, ascending
};

inline Graph::Subgraph Graph::induced(const std::vector<int>& xs) const {
    std::vector<int> sorted = checked_sorted_set(xs, "induced");
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) local[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : edges_)
        if (local[static_cast<std::size_t>(u)] >= 0 && local[static_cast<std::size_t>(v)] >= 0)
            sub_edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    return {Graph(static_cast<int>(sorted.size()), std::move(sub_edges)), std::move(sorted)};
}

inline Graph::Subgraph Graph::bipartite_between(const std::vector<int>& xs, const std::vector<int>& ys) const {
    std::vector<int> sx = checked_sorted_set(xs, "bipartite_between");
    std::vector<int> sy = checked_sorted_set(ys, "bipartite_between");
    std::vector<int> side(static_cast<std::size_t>(n_), 0);
    for (int x : sx) side[static_cast<std::size_t>(x)] = 1;
    for (int y : sy) {
        if (side[static_cast<std::size_t>(y)] == 1)
            throw DomainError("bipartite_between: vertex " + std::to_string(y) + " in both sides");
        side[static_cast<std::size_t>(y)] = 2;
    }
    std::vector<int> uni;
    uni.reserve(sx.size() + sy.size());
    std::merge(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(uni));
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < uni.size(); ++i) local[static_cast<std::size_t>(uni[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : edges_)
        if (side[static_cast<std::size_t>(u)] + side[static_cast<std::size_t>(v)] == 3)   // one end in each part
            sub_edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    return {Graph(static_cast<int>(uni.size()), std::move(sub_edges)), std::move(uni)};
}

inline Graph Graph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_line;   // line number per edge, for duplicate diagnostics
    long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        auto as_int = [&](const std::string& s) -> long {
            try {
                std::size_t used = 0;
                long v = std::stol(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return v;
            } catch (const std::exception&) {
                throw ParseError("expected integer, got '" + s + "'", line_no);
            }
        };
        if (n < 0) {
            if (toks.size() != 2) throw ParseError("header must be 'n m'", line_no);
            n = as_int(toks[0]);
            m = as_int(toks[1]);
            if (n < 0 || m < 0) throw ParseError("negative counts in header", line_no);
            continue;
        }
        if (toks.size() != 2) throw ParseError("edge line must be 'u v'", line_no);
        long u = as_int(toks[0]), v = as_int(toks[1]);
        if (seen >= m) throw ParseError("more than the declared " + std::to_string(m) + " edges", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex id out of range 0.." + std::to_string(n - 1), line_no);
        if (u == v) throw ParseError("self-loop '" + toks[0] + " " + toks[1] + "'", line_no);
        auto e = std::minmax(static_cast<int>(u), static_cast<int>(v));
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == std::make_pair(e.first, e.second))
                throw ParseError("duplicate edge (also on line " + std::to_string(edge_line[i]) + ")", line_no);
        edges.emplace_back(e.first, e.second);
        edge_line.push_back(line_no);
        ++seen;
    }
    if (n < 0) throw ParseError("empty input, expected 'n m' header", line_no == 0 ? 1 : line_no);
    if (seen != m)
        throw ParseError("declared " + std::to_string(m) + " edges, found " + std::to_string(seen), line_no);
    return Graph(static_cast<int>(n), std::move(edges));
}

// Total weighting: one Rational per vertex and per edge (edge order = the
// graph's canonical edge order).
struct TotalWeighting {
    std::vector<Rational> vertex;
    std::vector<Rational> edge;

    static TotalWeighting constant(const Graph& g, const Rational& c) {
        TotalWeighting w;
        w.vertex.assign(static_cast<std::size_t>(g.vertex_count()), c);
        w.edge.assign(static_cast<std::size_t>(g.edge_count()), c);
        return w;
    }
    static TotalWeighting zero(const Graph& g) { return constant(g, Rational(0)); }

    const Rational& at(const Graph& g, const Element& el) const {
        if (el.is_vertex()) return vertex.at(static_cast<std::size_t>(el.u));
        int e = g.edge_index(el.u, el.v);
        if (e < 0) throw DomainError("weighting lookup of non-edge " + el.key());
        return edge.at(static_cast<std::size_t>(e));
    }

    bool matches(const Graph& g) const {
        return vertex.size() == static_cast<std::size_t>(g.vertex_count()) &&
               edge.size() == static_cast<std::size_t>(g.edge_count());
    }

    friend bool operator==(const TotalWeighting&, const TotalWeighting&) = default;
};

// Builds a total weighting from a sparse element map, diagnosing missing and
// unknown entries.
inline TotalWeighting to_total(const Graph& g, const std::map<Element, Rational>& sparse) {
    TotalWeighting w = TotalWeighting::zero(g);
    std::vector<bool> have_v(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<bool> have_e(static_cast<std::size_t>(g.edge_count()), false);
    for (const auto& [el, val] : sparse) {
        if (el.is_vertex()) {
            if (el.u < 0 || el.u >= g.vertex_count()) throw DomainError("weight for unknown vertex " + el.key());
            w.vertex[static_cast<std::size_t>(el.u)] = val;
            have_v[static_cast<std::size_t>(el.u)] = true;
        } else {
            int e = g.edge_index(el.u, el.v);
            if (e < 0) throw DomainError("weight for non-edge " + el.key());
            w.edge[static_cast<std::size_t>(e)] = val;
            have_e[static_cast<std::size_t>(e)] = true;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!have_v[static_cast<std::size_t>(v)]) throw DomainError("undefined weight for vertex " + std::to_string(v));
    for (int e = 0; e < g.edge_count(); ++e)
        if (!have_e[static_cast<std::size_t>(e)])
            throw DomainError("undefined weight for edge " + Element::edge(g.edges()[static_cast<std::size_t>(e)].first,
                                                                           g.edges()[static_cast<std::size_t>(e)].second).key());
    return w;
}

// Weighted degree σ_w(v) = w(v) + Σ_{e ∋ v} w(e), exact.
inline Rational weighted_degree(const Graph& g, const TotalWeighting& w, int v) {
    if (!w.matches(g)) throw DomainError("weighting does not cover every element of the graph");
    Rational s = w.vertex.at(static_cast<std::size_t>(v));
    for (int e : g.incident_edges(v)) s += w.edge[static_cast<std::size_t>(e)];
    return s;
}

// Pointwise sum of two total weightings over the same graph.
inline TotalWeighting add_weightings(const TotalWeighting& a, const TotalWeighting& b) {
    if (a.vertex.size() != b.vertex.size() || a.edge.size() != b.edge.size())
        throw DomainError("adding weightings over different graphs");
    TotalWeighting r = a;
    for (std::size_t i = 0; i < r.vertex.size(); ++i) r.vertex[i] += b.vertex[i];
    for (std::size_t i = 0; i < r.edge.size(); ++i) r.edge[i] += b.edge[i];
    return r;
}

} // namespace spanweight

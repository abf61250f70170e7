#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "spanweight/errors.hpp"
#include "spanweight/graph.hpp"

namespace spanweight {

// Vertex coloring with nonnegative integers (not necessarily proper); the
// demand function of a level uses values in [0, d(v)+1].
using PhiColoring = std::vector<long>;

inline void check_phi(const Graph& g, const PhiColoring& phi) {
    if (phi.size() != static_cast<std::size_t>(g.vertex_count()))
        throw DomainError("phi coloring does not cover every vertex");
    for (std::size_t v = 0; v < phi.size(); ++v)
        if (phi[v] < 0) throw DomainError("negative phi at vertex " + std::to_string(v));
}

struct MwisResult {
    long weight = 0;
    std::vector<int> witness;   // ascending ids
};

// Every vertex outside the set has a neighbor inside it.
inline bool is_dominating(const Graph& g, const std::vector<int>& set) {
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : set) in[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        bool hit = false;
        for (int u : g.neighbors(v))
            if (in[static_cast<std::size_t>(u)]) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

inline bool is_independent(const Graph& g, const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) return false;
    return true;
}

// Exhaustive maximum-weight independent set, |V| <= 24. The witness is the
// lexicographically smallest optimal set when sets are compared as sorted id
// sequences (so a prefix beats its extensions).
inline MwisResult mwis_bruteforce(const Graph& g, const PhiColoring& phi) {
    check_phi(g, phi);
    const int n = g.vertex_count();
    if (n > 24) throw ResourceLimit("mwis_bruteforce limited to 24 vertices, got " + std::to_string(n));
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        nbr[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        nbr[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    long best_w = 0;
    std::vector<int> best;   // empty set is always independent
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
        long w = 0;
        bool indep = true;
        for (std::uint32_t rest = m; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (nbr[static_cast<std::size_t>(v)] & m) { indep = false; break; }
            w += phi[static_cast<std::size_t>(v)];
        }
        if (!indep || w < best_w) continue;
        std::vector<int> wit;
        for (std::uint32_t rest = m; rest;) {
            wit.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        if (w > best_w || std::lexicographical_compare(wit.begin(), wit.end(), best.begin(), best.end())) {
            best_w = w;
            best = std::move(wit);
        }
    }
    return {best_w, best};
}

namespace detail {

// Branch and bound on the highest-degree vertex with a greedy weighted
// clique-cover upper bound.
class MwisSolver {
public:
    MwisSolver(const Graph& g, const PhiColoring& phi,
               std::optional<std::chrono::steady_clock::time_point> deadline)
        : g_(g), phi_(phi), deadline_(deadline) {}

    long max_weight(const std::vector<int>& cand) {
        best_ = 0;
        search(0, cand);
        return best_;
    }

private:
    long cover_bound(const std::vector<int>& cand) const {
        // Greedy clique cover; each clique contributes its largest phi.
        std::vector<int> order(cand);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return phi_[static_cast<std::size_t>(a)] > phi_[static_cast<std::size_t>(b)]; });
        std::vector<std::vector<int>> cliques;
        long bound = 0;
        for (int v : order) {
            bool placed = false;
            for (auto& c : cliques) {
                bool all_adj = true;
                for (int u : c)
                    if (!g_.has_edge(u, v)) { all_adj = false; break; }
                if (all_adj) {
                    c.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.push_back({v});
                bound += phi_[static_cast<std::size_t>(v)];
            }
        }
        return bound;
    }

    void search(long acc, const std::vector<int>& cand) {
        if (++ticks_ % 1024 == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_)
            throw ResourceLimit("mwis time budget exceeded");
        if (acc > best_) best_ = acc;
        if (cand.empty()) return;
        if (acc + cover_bound(cand) <= best_) return;
        // branch vertex: highest degree inside the candidate subgraph, smallest id on ties
        int pick = cand.front();
        std::size_t pick_deg = 0;
        for (int v : cand) {
            std::size_t deg = 0;
            for (int u : cand)
                if (u != v && g_.has_edge(u, v)) ++deg;
            if (deg > pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        std::vector<int> incl;
        incl.reserve(cand.size());
        for (int v : cand)
            if (v != pick && !g_.has_edge(v, pick)) incl.push_back(v);
        search(acc + phi_[static_cast<std::size_t>(pick)], incl);
        std::vector<int> excl;
        excl.reserve(cand.size());
        for (int v : cand)
            if (v != pick) excl.push_back(v);
        search(acc, excl);
    }

    const Graph& g_;
    const PhiColoring& phi_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    long best_ = 0;
    std::uint64_t ticks_ = 0;
};

} // namespace detail

// Optimal weight only (no witness).
inline long mwis_weight(const Graph& g, const PhiColoring& phi,
                        std::optional<std::chrono::milliseconds> budget = std::nullopt) {
    check_phi(g, phi);
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (budget) deadline = std::chrono::steady_clock::now() + *budget;
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    return detail::MwisSolver(g, phi, deadline).max_weight(all);
}

// Exact maximum-weight independent set. Witness contract: identical to
// mwis_bruteforce on any graph where both run — the lexicographically
// smallest optimal witness, built by extending the prefix with the smallest
// vertex that keeps the optimum reachable and stopping as soon as the
// accumulated weight meets it.
inline std::vector<int> mwis_exact(const Graph& g, const PhiColoring& phi,
                                   std::optional<std::chrono::milliseconds> budget = std::nullopt) {
    check_phi(g, phi);
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (budget) deadline = std::chrono::steady_clock::now() + *budget;
    detail::MwisSolver solver(g, phi, deadline);
    std::vector<int> avail(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) avail[static_cast<std::size_t>(v)] = v;
    const long target = solver.max_weight(avail);
    std::vector<int> witness;
    long acc = 0;
    while (acc < target) {
        bool extended = false;
        for (std::size_t i = 0; i < avail.size(); ++i) {
            int c = avail[i];
            std::vector<int> rest;
            for (std::size_t j = i + 1; j < avail.size(); ++j)
                if (!g.has_edge(avail[j], c)) rest.push_back(avail[j]);
            if (acc + phi[static_cast<std::size_t>(c)] + solver.max_weight(rest) == target) {
                witness.push_back(c);
                acc += phi[static_cast<std::size_t>(c)];
                avail = std::move(rest);
                extended = true;
                break;
            }
        }
        if (!extended)
            throw InternalInvariantViolation("mwis witness reconstruction lost the optimum");
    }
    return witness;
}

// φ-maximum independent set: maximum φ-weight and dominating. Obtained from
// mwis_exact by greedily adding, in increasing id order, vertices with no
// neighbor in the set (weight never drops since φ >= 0).
inline std::vector<int> phi_maximum_set(const Graph& g, const PhiColoring& phi,
                                        std::optional<std::chrono::milliseconds> budget = std::nullopt) {
    std::vector<int> set = mwis_exact(g, phi, budget);
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<bool> blocked(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : set) {
        in[static_cast<std::size_t>(v)] = true;
        for (int u : g.neighbors(v)) blocked[static_cast<std::size_t>(u)] = true;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in[static_cast<std::size_t>(v)] || blocked[static_cast<std::size_t>(v)]) continue;
        in[static_cast<std::size_t>(v)] = true;
        set.push_back(v);
        for (int u : g.neighbors(v)) blocked[static_cast<std::size_t>(u)] = true;
    }
    std::sort(set.begin(), set.end());
    return set;
}

} // namespace spanweight

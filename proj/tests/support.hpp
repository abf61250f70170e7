#pragma once

// Shared test-only helpers: independent brute-force oracles and instance
// generators. Nothing here may reuse the implementation path it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "spanweight/graph.hpp"
#include "spanweight/mwis.hpp"
#include "spanweight/oracle.hpp"
#include "spanweight/wellgraph.hpp"

namespace testsup {

using spanweight::Element;
using spanweight::Graph;
using spanweight::PhiColoring;
using spanweight::Rational;
using spanweight::TotalWeighting;
using spanweight::WellInstance;

// Exhaustive star-covering feasibility: try every assignment of U-vertices
// to their neighbors, respecting the capacities.
inline bool well_feasible_bruteforce(const WellInstance& inst) {
    std::map<int, std::vector<int>> nbrs;
    for (auto [x, u] : inst.cross_edges) nbrs[u].push_back(x);
    std::map<int, long> load;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
        if (k == inst.uorder.size()) return true;
        int u = inst.uorder[k];
        for (int x : nbrs[u]) {
            if (load[x] + 1 > inst.phi.at(x)) continue;
            ++load[x];
            if (rec(k + 1)) return true;
            --load[x];
        }
        return false;
    };
    return rec(0);
}

// Hall-type condition: every subset U' of U has Σ_{x in N(U')} phi(x) >= |U'|.
inline bool well_hall_condition(const WellInstance& inst) {
    const std::size_t p = inst.uorder.size();
    if (p > 20) throw spanweight::ResourceLimit("hall check limited to 20 u-vertices");
    std::map<int, std::vector<int>> nbrs;
    for (auto [x, u] : inst.cross_edges) nbrs[u].push_back(x);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << p); ++mask) {
        std::map<int, bool> seen;
        long cap = 0;
        int size = 0;
        for (std::size_t k = 0; k < p; ++k) {
            if (!(mask & (std::uint32_t{1} << k))) continue;
            ++size;
            for (int x : nbrs[inst.uorder[k]])
                if (!seen[x]) {
                    seen[x] = true;
                    cap += inst.phi.at(x);
                }
        }
        if (cap < size) return false;
    }
    return true;
}

// Applies a vertex permutation: vertex v of the result is perm[v] of the
// input (weights move along).
inline std::pair<Graph, TotalWeighting> relabel(const Graph& g, const TotalWeighting& w,
                                                const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(inv[static_cast<std::size_t>(u)], inv[static_cast<std::size_t>(v)]);
    Graph h(g.vertex_count(), edges);
    TotalWeighting wh = TotalWeighting::zero(h);
    for (int v = 0; v < h.vertex_count(); ++v)
        wh.vertex[static_cast<std::size_t>(v)] = w.vertex[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [u, v] = h.edges()[static_cast<std::size_t>(e)];
        int orig = g.edge_index(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        wh.edge[static_cast<std::size_t>(e)] = w.edge[static_cast<std::size_t>(orig)];
    }
    return {std::move(h), std::move(wh)};
}

// Greedy front-peeling order for U: each picked vertex has at most
// phi(u) - 1 neighbors among the ones still unpicked. Returns nullopt when
// the peel gets stuck.
inline std::optional<std::vector<int>> peel_order(const Graph& g, const std::vector<int>& uset,
                                                  const PhiColoring& phi) {
    std::vector<int> remaining = uset;
    std::sort(remaining.begin(), remaining.end());
    std::vector<int> order;
    while (!remaining.empty()) {
        int pick = -1;
        for (int u : remaining) {
            long later = 0;
            for (int v : remaining)
                if (v != u && g.has_edge(u, v)) ++later;
            if (later <= phi[static_cast<std::size_t>(u)] - 1) {
                pick = u;
                break;
            }
        }
        if (pick < 0) return std::nullopt;
        order.push_back(pick);
        remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
    }
    return order;
}

// Random instance of the star-covering problem built around a phi-maximum
// independent set, so the lemma applies. Returns nullopt when the sample is
// degenerate (U empty or no valid ordering).
inline std::optional<WellInstance> random_phi_maximum_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = 2 + static_cast<int>(rng() % 11);
    Rational probs[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    Graph g = spanweight::gen_random(n, probs[rng() % 3], rng());
    if (g.edge_count() == 0) return std::nullopt;
    PhiColoring phi(static_cast<std::size_t>(n), 1);
    for (auto& x : phi) x = 1 + static_cast<long>(rng() % 4);
    std::vector<int> iset = spanweight::phi_maximum_set(g, phi);
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int v : iset) in[static_cast<std::size_t>(v)] = true;
    std::vector<int> uset;
    for (int v = 0; v < n; ++v)
        if (!in[static_cast<std::size_t>(v)]) uset.push_back(v);
    if (uset.empty()) return std::nullopt;
    auto order = peel_order(g, uset, phi);
    if (!order) return std::nullopt;
    std::map<int, long> phi_map;
    for (int v = 0; v < n; ++v) phi_map[v] = phi[static_cast<std::size_t>(v)];
    return WellInstance::from_graph(g, iset, *order, phi_map);
}

// Pigeonhole-infeasible instance: total I-side capacity strictly below |U|,
// every U-vertex keeps at least one neighbor.
inline WellInstance random_infeasible_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int r = 1 + static_cast<int>(rng() % 2);
    std::vector<long> cap(static_cast<std::size_t>(r));
    long total = 0;
    for (auto& c : cap) {
        c = 1 + static_cast<long>(rng() % 2);
        total += c;
    }
    int p = static_cast<int>(total) + 1 + static_cast<int>(rng() % 2);
    WellInstance inst;
    for (int x = 0; x < r; ++x) {
        inst.iside.push_back(x);
        inst.phi[x] = cap[static_cast<std::size_t>(x)];
    }
    for (int k = 0; k < p; ++k) {
        int u = r + k;
        inst.uorder.push_back(u);
        inst.phi[u] = 1 + static_cast<long>(rng() % 3);
        std::vector<int> chosen;
        for (int x = 0; x < r; ++x)
            if (rng() % 2) chosen.push_back(x);
        if (chosen.empty()) chosen.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(r)));
        for (int x : chosen) inst.cross_edges.emplace_back(x, u);
    }
    inst.validate();
    return inst;
}

} // namespace testsup

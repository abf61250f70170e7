#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spanweight/errors.hpp"
#include "spanweight/graph.hpp"
#include "spanweight/report.hpp"

namespace spanweight {

// No star covering exists for the blocked U-vertex; carries the I-side
// vertices reachable by alternating paths as a certificate (all of them are
// saturated to capacity).
struct NoAugmentingPath : Error {
    NoAugmentingPath(int u, std::vector<int> reach)
        : Error("no augmenting path for u-vertex " + std::to_string(u)),
          blocked_u(u), reachable(std::move(reach)) {}
    int blocked_u;
    std::vector<int> reachable;
};

// A bipartite subgraph covering each U-vertex exactly once; every component
// is a star whose U-vertices are leaves. Edges are (I-side, U-side) pairs.
struct StarForest {
    std::vector<std::pair<int, int>> edges;

    std::map<int, int> degree() const {   // I-side degrees
        std::map<int, int> d;
        for (auto [x, u] : edges) ++d[x];
        return d;
    }
};

// One instance of the star-covering problem: an independent set, an ordered
// list of outside vertices, the bipartite edges between them, the demand
// bound phi, and the ambient edges inside U (needed by the ordering
// precondition).
struct WellInstance {
    std::vector<int> iside;                        // ascending
    std::vector<int> uorder;                       // processing order
    std::vector<std::pair<int, int>> cross_edges;  // (iside vertex, u vertex)
    std::vector<std::pair<int, int>> uedges;       // ambient edges inside U
    std::map<int, long> phi;                       // on iside ∪ uorder

    static WellInstance from_graph(const Graph& g, std::vector<int> iside_in, std::vector<int> uorder_in,
                                   const std::map<int, long>& phi_in) {
        WellInstance inst;
        inst.iside = std::move(iside_in);
        std::sort(inst.iside.begin(), inst.iside.end());
        inst.uorder = std::move(uorder_in);
        std::set<int> is(inst.iside.begin(), inst.iside.end());
        std::set<int> us(inst.uorder.begin(), inst.uorder.end());
        for (auto [u, v] : g.edges()) {
            bool ui = is.count(u) > 0, vi = is.count(v) > 0;
            bool uu = us.count(u) > 0, vu = us.count(v) > 0;
            if (ui && vu) inst.cross_edges.emplace_back(u, v);
            else if (vi && uu) inst.cross_edges.emplace_back(v, u);
            else if (uu && vu) inst.uedges.emplace_back(u, v);
        }
        for (int v : inst.iside) inst.phi[v] = phi_in.at(v);
        for (int v : inst.uorder) inst.phi[v] = phi_in.at(v);
        inst.validate();
        return inst;
    }

    void validate() const {
        std::set<int> is(iside.begin(), iside.end());
        std::set<int> us(uorder.begin(), uorder.end());
        if (is.size() != iside.size()) throw DomainError("well instance: repeated iside vertex");
        if (us.size() != uorder.size()) throw DomainError("well instance: repeated u vertex");
        for (int v : iside)
            if (us.count(v)) throw DomainError("well instance: vertex " + std::to_string(v) + " on both sides");
        for (auto [x, u] : cross_edges)
            if (!is.count(x) || !us.count(u))
                throw DomainError("well instance: cross edge (" + std::to_string(x) + "," + std::to_string(u) +
                                  ") off the bipartition");
        for (auto [u, v] : uedges)
            if (!us.count(u) || !us.count(v))
                throw DomainError("well instance: u-edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") outside U");
        for (int v : iside)
            if (!phi.count(v)) throw DomainError("well instance: phi missing at " + std::to_string(v));
        for (int v : uorder)
            if (!phi.count(v)) throw DomainError("well instance: phi missing at " + std::to_string(v));
    }

    bool has_cross_edge(int x, int u) const {
        for (auto [a, b] : cross_edges)
            if (a == x && b == u) return true;
        return false;
    }
};

// Ordering precondition: u_k keeps at most phi(u_k) - 1 neighbors among the
// later U-vertices, and phi is at least 1 on every vertex it constrains.
// One pass/fail entry per vertex.
inline VerificationReport check_preconditions(const WellInstance& inst) {
    VerificationReport rep;
    std::map<int, std::size_t> pos;
    for (std::size_t k = 0; k < inst.uorder.size(); ++k) pos[inst.uorder[k]] = k;
    for (int x : inst.iside) {
        long p = inst.phi.at(x);
        rep.add("i:" + std::to_string(x), p >= 1, p >= 1 ? "" : "phi = " + std::to_string(p) + " < 1");
    }
    for (std::size_t k = 0; k < inst.uorder.size(); ++k) {
        int u = inst.uorder[k];
        long p = inst.phi.at(u);
        if (p < 1) {
            rep.add("u:" + std::to_string(u), false, "phi = " + std::to_string(p) + " < 1");
            continue;
        }
        long later = 0;
        for (auto [a, b] : inst.uedges) {
            if (a == u && pos.at(b) > k) ++later;
            if (b == u && pos.at(a) > k) ++later;
        }
        bool ok = k + 1 == inst.uorder.size() || later <= p - 1;
        rep.add("u:" + std::to_string(u), ok,
                ok ? "" : std::to_string(later) + " later neighbors > phi-1 = " + std::to_string(p - 1));
    }
    return rep;
}

// Incremental star-covering construction. U-vertices are processed in the
// given order; each either attaches to a slack neighbor or an alternating
// path (non-forest edge into the I-side, forest edge back to U) is flipped
// to free capacity. Throws NoAugmentingPath when the search saturates.
// When snapshots is non-null it receives the partial forest after each
// U-vertex is placed.
inline StarForest find_well_subgraph(const WellInstance& inst,
                                     std::vector<StarForest>* snapshots = nullptr) {
    std::map<int, std::vector<int>> nbr_of_u;    // u -> sorted iside neighbors
    for (auto [x, u] : inst.cross_edges) nbr_of_u[u].push_back(x);
    for (auto& [u, v] : nbr_of_u) std::sort(v.begin(), v.end());

    std::map<int, int> assign;                   // u -> its star center
    std::map<int, std::set<int>> children;       // x -> covered u-vertices
    auto slack = [&](int x) { return inst.phi.at(x) - static_cast<long>(children[x].size()); };

    for (int u : inst.uorder) {
        const auto& nbrs = nbr_of_u[u];
        int attach = -1;
        for (int x : nbrs)
            if (slack(x) > 0) { attach = x; break; }
        if (attach < 0) {
            // breadth-first alternating search for a slack I-vertex
            std::map<int, int> via;              // reached I-vertex -> the U-vertex it was reached through (-1 = start)
            std::deque<int> queue;
            for (int x : nbrs) {
                via[x] = -1;
                queue.push_back(x);
            }
            int slack_x = -1;
            while (!queue.empty() && slack_x < 0) {
                int x = queue.front();
                queue.pop_front();
                if (slack(x) > 0) { slack_x = x; break; }
                for (int y : children[x]) {
                    auto it = nbr_of_u.find(y);
                    if (it == nbr_of_u.end()) continue;
                    for (int x2 : it->second) {
                        if (via.count(x2)) continue;
                        via[x2] = y;
                        queue.push_back(x2);
                    }
                }
            }
            if (slack_x < 0) {
                std::vector<int> reach;
                for (auto& [x, through] : via) reach.push_back(x);
                throw NoAugmentingPath(u, std::move(reach));
            }
            // flip the path: every U-vertex on it hops one star toward the slack end
            int cur = slack_x;
            while (via.at(cur) != -1) {
                int y = via.at(cur);
                int prev = assign.at(y);
                children[prev].erase(y);
                children[cur].insert(y);
                assign[y] = cur;
                cur = prev;
            }
            attach = cur;
        }
        assign[u] = attach;
        children[attach].insert(u);
        if (snapshots) {
            StarForest partial;
            for (auto& [uu, xx] : assign) partial.edges.emplace_back(xx, uu);
            std::sort(partial.edges.begin(), partial.edges.end());
            snapshots->push_back(std::move(partial));
        }
    }

    StarForest forest;
    for (auto& [u, x] : assign) forest.edges.emplace_back(x, u);
    std::sort(forest.edges.begin(), forest.edges.end());
    return forest;
}

// True iff F covers every U-vertex exactly once and stays within phi on the
// I-side. Edges outside the instance's bipartite graph are an error.
inline bool verify_well(const WellInstance& inst, const StarForest& forest) {
    std::map<int, int> covered;
    std::map<int, long> degree;
    for (auto [x, u] : forest.edges) {
        if (!inst.has_cross_edge(x, u))
            throw DomainError("star forest edge (" + std::to_string(x) + "," + std::to_string(u) +
                              ") is not in the bipartite graph");
        ++covered[u];
        ++degree[x];
    }
    for (int u : inst.uorder)
        if (covered[u] != 1) return false;
    for (auto [x, d] : degree)
        if (d > inst.phi.at(x)) return false;
    return true;
}

} // namespace spanweight

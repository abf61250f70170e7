#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spanweight/graph.hpp"
#include "spanweight/levels.hpp"
#include "spanweight/offsets.hpp"
#include "spanweight/report.hpp"

namespace spanweight {

// Checks σ_w(u) ≠ σ_w(v) on every edge. Weighted degrees are recomputed
// from scratch here; nothing is taken from the solver's bookkeeping.
inline VerificationReport verify_proper(const Graph& g, const TotalWeighting& w) {
    VerificationReport rep;
    if (!w.matches(g)) throw DomainError("weighting does not cover every element of the graph");
    std::vector<Rational> sigma;
    for (int v = 0; v < g.vertex_count(); ++v) sigma.push_back(weighted_degree(g, w, v));
    std::string wit;
    for (auto [u, v] : g.edges())
        if (sigma[static_cast<std::size_t>(u)] == sigma[static_cast<std::size_t>(v)]) {
            if (!wit.empty()) wit += "; ";
            wit += "edge (" + std::to_string(u) + "," + std::to_string(v) + "): σ = " +
                   sigma[static_cast<std::size_t>(u)].str() + " on both ends";
        }
    rep.add("proper", wit.empty(), wit);
    return rep;
}

// Checks the full solver contract: every offset is 0 or a, every vertex
// lands exactly on its level target, and the combined weighting is proper.
inline VerificationReport verify_offsets(const Graph& g, const TotalWeighting& w0, const Rational& a,
                                         const OffsetWeighting& off, const LevelDecomposition& dec) {
    VerificationReport rep;
    {
        bool ok = off.span == a && off.values.matches(g);
        std::string wit = ok ? "" : "span or domain mismatch";
        if (ok) {
            for (int v = 0; v < g.vertex_count() && ok; ++v) {
                const Rational& x = off.values.vertex[static_cast<std::size_t>(v)];
                if (!x.is_zero() && x != a) {
                    ok = false;
                    wit = "vertex " + std::to_string(v) + " offset " + x.str() + " not in {0, " + a.str() + "}";
                }
            }
            for (int e = 0; e < g.edge_count() && ok; ++e) {
                const Rational& x = off.values.edge[static_cast<std::size_t>(e)];
                if (!x.is_zero() && x != a) {
                    auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
                    ok = false;
                    wit = "edge (" + std::to_string(u) + "," + std::to_string(v) + ") offset " + x.str() +
                          " not in {0, " + a.str() + "}";
                }
            }
        }
        rep.add("offset-range", ok, wit);
    }
    {
        bool ok = off.values.matches(g) && dec.level_of.size() == static_cast<std::size_t>(g.vertex_count());
        std::string wit = ok ? "" : "domain mismatch";
        if (ok) {
            TotalWeighting sum = add_weightings(w0, off.values);
            for (int v = 0; v < g.vertex_count(); ++v) {
                int lvl = dec.level_of[static_cast<std::size_t>(v)];
                if (lvl < 0 || lvl >= static_cast<int>(dec.levels.size())) {
                    ok = false;
                    wit = "vertex " + std::to_string(v) + " has no level";
                    break;
                }
                Rational s = weighted_degree(g, sum, v);
                const Rational& q = dec.levels[static_cast<std::size_t>(lvl)].target;
                if (s != q) {
                    ok = false;
                    wit = "vertex " + std::to_string(v) + ": σ = " + s.str() + ", target q = " + q.str();
                    break;
                }
            }
        }
        rep.add("targets", ok, wit);
    }
    if (off.values.matches(g)) {
        VerificationReport prop = verify_proper(g, add_weightings(w0, off.values));
        for (auto& c : prop.checks) rep.checks.push_back(std::move(c));
    } else {
        rep.add("proper", false, "domain mismatch");
    }
    return rep;
}

// Checks w(z) ∈ L(z) for every element. Both maps must cover exactly the
// graph's elements.
inline VerificationReport verify_list_membership(const Graph& g,
                                                 const std::map<Element, std::pair<Rational, Rational>>& lists,
                                                 const TotalWeighting& w) {
    VerificationReport rep;
    if (!w.matches(g)) throw DomainError("weighting does not cover every element of the graph");
    std::string wit;
    auto probe = [&](const Element& el, const Rational& val) {
        auto it = lists.find(el);
        if (it == lists.end()) throw DomainError("no list for element " + el.key());
        if (val != it->second.first && val != it->second.second) {
            if (!wit.empty()) wit += "; ";
            wit += "element " + el.key() + ": " + val.str() + " not in {" + it->second.first.str() + ", " +
                   it->second.second.str() + "}";
        }
    };
    for (int v = 0; v < g.vertex_count(); ++v) probe(Element::vertex(v), w.vertex[static_cast<std::size_t>(v)]);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        probe(Element::edge(u, v), w.edge[static_cast<std::size_t>(e)]);
    }
    for (const auto& [el, lh] : lists) {
        bool known = el.is_vertex() ? (el.u >= 0 && el.u < g.vertex_count()) : g.edge_index(el.u, el.v) >= 0;
        if (!known) throw DomainError("list for unknown element " + el.key());
    }
    rep.add("list-membership", wit.empty(), wit);
    return rep;
}

// Replays a trace event by event with independent bookkeeping: every write
// must hit a light element (monotone writes) and may not push any vertex
// past its level target (goodness). Also reconstructs the final offsets.
struct ReplayResult {
    VerificationReport report;
    OffsetWeighting final_offsets;
};

inline ReplayResult replay_trace(const Graph& g, const TotalWeighting& w0, const Rational& a,
                                 const LevelDecomposition& dec, const RunTrace& trace) {
    ReplayResult out;
    out.final_offsets.span = a;
    out.final_offsets.values = TotalWeighting::zero(g);
    std::vector<long> count(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<bool> hv(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<bool> he(static_cast<std::size_t>(g.edge_count()), false);

    std::string monotone_wit, good_wit;
    auto good = [&](int v) {
        // goodness: σ0 + count*a ≤ q, checked exactly
        Rational s = weighted_degree(g, w0, v) + Rational(count[static_cast<std::size_t>(v)]) * a;
        return s <= dec.target_of(v);
    };
    auto apply_vertex = [&](int v) {
        if (v < 0 || v >= g.vertex_count()) {
            if (monotone_wit.empty()) monotone_wit = "trace writes unknown vertex " + std::to_string(v);
            return;
        }
        if (hv[static_cast<std::size_t>(v)]) {
            if (monotone_wit.empty()) monotone_wit = "vertex " + std::to_string(v) + " written twice";
            return;
        }
        hv[static_cast<std::size_t>(v)] = true;
        ++count[static_cast<std::size_t>(v)];
        if (good_wit.empty() && !good(v)) good_wit = "vertex " + std::to_string(v) + " exceeds its target";
    };
    auto apply_edge = [&](int u, int v) {
        int e = g.edge_index(u, v);
        if (e < 0) {
            if (monotone_wit.empty())
                monotone_wit = "trace writes non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
            return;
        }
        if (he[static_cast<std::size_t>(e)]) {
            if (monotone_wit.empty())
                monotone_wit = "edge (" + std::to_string(u) + "," + std::to_string(v) + ") written twice";
            return;
        }
        he[static_cast<std::size_t>(e)] = true;
        ++count[static_cast<std::size_t>(u)];
        ++count[static_cast<std::size_t>(v)];
        if (good_wit.empty() && !good(u)) good_wit = "vertex " + std::to_string(u) + " exceeds its target";
        if (good_wit.empty() && !good(v)) good_wit = "vertex " + std::to_string(v) + " exceeds its target";
    };

    for (const auto& it : trace.iterations) {
        for (auto [u, v] : it.greedy_edges) apply_edge(u, v);
        for (int v : it.cover_vertices) apply_vertex(v);
        for (auto [x, u] : it.forest_edges) apply_edge(x, u);
        for (int v : it.member_vertices) apply_vertex(v);
    }
    out.report.add("monotone-writes", monotone_wit.empty(), monotone_wit);
    out.report.add("goodness", good_wit.empty(), good_wit);

    for (int v = 0; v < g.vertex_count(); ++v)
        if (hv[static_cast<std::size_t>(v)]) out.final_offsets.values.vertex[static_cast<std::size_t>(v)] = a;
    for (int e = 0; e < g.edge_count(); ++e)
        if (he[static_cast<std::size_t>(e)]) out.final_offsets.values.edge[static_cast<std::size_t>(e)] = a;
    return out;
}

} // namespace spanweight

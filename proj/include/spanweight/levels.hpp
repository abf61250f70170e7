#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spanweight/errors.hpp"
#include "spanweight/graph.hpp"
#include "spanweight/mwis.hpp"
#include "spanweight/report.hpp"

namespace spanweight {

// Candidate final weighted degrees of v: the d(v)+2 values σ_w0(v) + j*a for
// j = 0..d(v)+1, ascending.
inline std::vector<Rational> target_set(const Graph& g, const TotalWeighting& w0, const Rational& a, int v) {
    if (a.sign() <= 0) throw DomainError("span must be positive, got " + a.str());
    Rational s = weighted_degree(g, w0, v);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(g.degree(v)) + 2);
    for (int j = 0; j <= g.degree(v) + 1; ++j) out.push_back(s + Rational(j) * a);
    return out;
}

// One target level: the vertices V_i that list q among their candidate
// degrees, the carrier V(G_i) = V_i minus all lower-level picks, the demand
// phi_i on the carrier and the picked independent set I_i.
struct LevelRecord {
    Rational target;
    std::vector<int> members;    // I_i, ascending; empty iff carrier empty
    std::vector<int> carrier;    // V(G_i), ascending
    std::vector<int> targeted;   // V_i, ascending
    std::map<int, long> phi;     // demand on the carrier
};

// The full partition V = I_1 ⊕ ... ⊕ I_l with sorted distinct targets.
// Level indices are 0-based throughout.
struct LevelDecomposition {
    Rational span;
    std::vector<Rational> targets;
    std::vector<LevelRecord> levels;
    std::vector<int> level_of;   // vertex -> level index
    int last_nonempty = -1;      // greatest index with members nonempty

    long demand(int v) const {
        return levels.at(static_cast<std::size_t>(level_of.at(static_cast<std::size_t>(v))))
            .phi.at(v);
    }
    const Rational& target_of(int v) const {
        return levels.at(static_cast<std::size_t>(level_of.at(static_cast<std::size_t>(v)))).target;
    }
};

// Builds the decomposition: sorted distinct targets, per-level carriers and
// demands, and a phi-maximum independent set per nonempty carrier. The first
// level picks a maximum-cardinality independent set (its demand is zero
// everywhere, so any dominating set is phi-maximum; cardinality keeps the
// choice canonical).
inline LevelDecomposition build_levels(const Graph& g, const TotalWeighting& w0, const Rational& a) {
    if (a.sign() <= 0) throw DomainError("span must be positive, got " + a.str());
    if (!w0.matches(g)) throw DomainError("base weighting does not cover every element");
    const int n = g.vertex_count();

    std::vector<Rational> sigma0;
    sigma0.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) sigma0.push_back(weighted_degree(g, w0, v));

    std::set<Rational> target_pool;
    for (int v = 0; v < n; ++v)
        for (int j = 0; j <= g.degree(v) + 1; ++j) target_pool.insert(sigma0[static_cast<std::size_t>(v)] + Rational(j) * a);

    LevelDecomposition dec;
    dec.span = a;
    dec.targets.assign(target_pool.begin(), target_pool.end());
    std::map<Rational, int> index_of;
    for (std::size_t i = 0; i < dec.targets.size(); ++i) index_of[dec.targets[i]] = static_cast<int>(i);

    dec.levels.resize(dec.targets.size());
    std::vector<std::vector<std::pair<int, long>>> hits(dec.targets.size());   // level -> (vertex, j)
    for (int v = 0; v < n; ++v)
        for (int j = 0; j <= g.degree(v) + 1; ++j) {
            int i = index_of.at(sigma0[static_cast<std::size_t>(v)] + Rational(j) * a);
            hits[static_cast<std::size_t>(i)].emplace_back(v, j);
        }

    dec.level_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<bool> assigned(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < dec.levels.size(); ++i) {
        LevelRecord& rec = dec.levels[i];
        rec.target = dec.targets[i];
        for (auto [v, j] : hits[i]) rec.targeted.push_back(v);
        std::sort(rec.targeted.begin(), rec.targeted.end());
        for (auto [v, j] : hits[i])
            if (!assigned[static_cast<std::size_t>(v)]) {
                rec.carrier.push_back(v);
                rec.phi[v] = j;
            }
        std::sort(rec.carrier.begin(), rec.carrier.end());
        if (rec.carrier.empty()) continue;

        Graph::Subgraph sub = g.induced(rec.carrier);
        PhiColoring local_phi(rec.carrier.size(), 0);
        for (std::size_t k = 0; k < sub.to_parent.size(); ++k) local_phi[k] = rec.phi.at(sub.to_parent[k]);
        PhiColoring selection = local_phi;
        if (i == 0) {
            for (long& x : local_phi)
                if (x != 0)
                    throw InternalInvariantViolation("nonzero demand on the lowest level");
            selection.assign(rec.carrier.size(), 1);
        }
        std::vector<int> picked = phi_maximum_set(sub.graph, selection);
        for (int local : picked) {
            int v = sub.to_parent[static_cast<std::size_t>(local)];
            rec.members.push_back(v);
            assigned[static_cast<std::size_t>(v)] = true;
            dec.level_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
        std::sort(rec.members.begin(), rec.members.end());
        dec.last_nonempty = static_cast<int>(i);
    }

    for (int v = 0; v < n; ++v)
        if (!assigned[static_cast<std::size_t>(v)])
            throw InternalInvariantViolation("level decomposition left vertex " + std::to_string(v) + " uncovered");
    return dec;
}

// Re-derives every decomposition invariant from scratch and reports each
// one with a witness on failure. Never throws on bad data.
inline VerificationReport validate_levels(const Graph& g, const TotalWeighting& w0, const Rational& a,
                                          const LevelDecomposition& dec) {
    VerificationReport rep;
    const int n = g.vertex_count();
    std::vector<Rational> sigma0;
    for (int v = 0; v < n; ++v) sigma0.push_back(weighted_degree(g, w0, v));

    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i + 1 < dec.targets.size(); ++i)
            if (!(dec.targets[i] < dec.targets[i + 1])) {
                ok = false;
                wit = "targets[" + std::to_string(i) + "]=" + dec.targets[i].str() + " !< targets[" +
                      std::to_string(i + 1) + "]=" + dec.targets[i + 1].str();
                break;
            }
        if (ok && dec.levels.size() != dec.targets.size()) {
            ok = false;
            wit = "level count differs from target count";
        }
        if (ok)
            for (std::size_t i = 0; i < dec.levels.size(); ++i)
                if (dec.levels[i].target != dec.targets[i]) {
                    ok = false;
                    wit = "level " + std::to_string(i) + " target mismatch";
                    break;
                }
        rep.add("targets-sorted", ok, wit);
    }
    {
        std::set<Rational> expect;
        for (int v = 0; v < n; ++v)
            for (int j = 0; j <= g.degree(v) + 1; ++j) expect.insert(sigma0[static_cast<std::size_t>(v)] + Rational(j) * a);
        std::set<Rational> got(dec.targets.begin(), dec.targets.end());
        rep.add("targets-complete", got == expect,
                got == expect ? "" : "target set differs from the union of candidate degrees");
    }
    {
        std::vector<int> cover(static_cast<std::size_t>(n), 0);
        for (const auto& rec : dec.levels)
            for (int v : rec.members)
                if (v >= 0 && v < n) ++cover[static_cast<std::size_t>(v)];
        bool ok = true;
        std::string wit;
        for (int v = 0; v < n; ++v)
            if (cover[static_cast<std::size_t>(v)] != 1) {
                ok = false;
                wit = "vertex " + std::to_string(v) + " covered " + std::to_string(cover[static_cast<std::size_t>(v)]) + " times";
                break;
            }
        rep.add("partition", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < dec.levels.size() && ok; ++i)
            if (!is_independent(g, dec.levels[i].members)) {
                ok = false;
                wit = "level " + std::to_string(i) + " members are not independent";
            }
        rep.add("independent", ok, wit);
    }
    {
        // members' demand: (q_i - σ0)/a is an integer in [0, d+1] and matches the stored phi
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < dec.levels.size() && ok; ++i) {
            const auto& rec = dec.levels[i];
            for (int v : rec.members) {
                if (v < 0 || v >= n) { ok = false; wit = "bogus member id"; break; }
                Rational t = (rec.target - sigma0[static_cast<std::size_t>(v)]) / a;
                auto it = rec.phi.find(v);
                if (!t.is_integer() || t.sign() < 0 || t > Rational(g.degree(v) + 1)) {
                    ok = false;
                    wit = "vertex " + std::to_string(v) + " demand " + t.str() + " out of range";
                    break;
                }
                if (it == rec.phi.end() || Rational(it->second) != t) {
                    ok = false;
                    wit = "vertex " + std::to_string(v) + " stored demand disagrees with (q-σ)/a";
                    break;
                }
            }
        }
        rep.add("demand-integral", ok, wit);
    }
    {
        // carriers match V_i minus lower picks; members are phi-maximum in G_i
        bool ok = true;
        std::string wit;
        std::vector<bool> taken(static_cast<std::size_t>(n), false);
        for (std::size_t i = 0; i < dec.levels.size() && ok; ++i) {
            const auto& rec = dec.levels[i];
            std::vector<int> carrier;
            for (int v = 0; v < n; ++v) {
                if (taken[static_cast<std::size_t>(v)]) continue;
                Rational t = (rec.target - sigma0[static_cast<std::size_t>(v)]) / a;
                if (t.is_integer() && t.sign() >= 0 && t <= Rational(g.degree(v) + 1)) carrier.push_back(v);
            }
            if (carrier != rec.carrier) {
                ok = false;
                wit = "level " + std::to_string(i) + " carrier differs from recomputation";
                break;
            }
            if (!carrier.empty()) {
                if (rec.members.empty()) {
                    ok = false;
                    wit = "level " + std::to_string(i) + " has a nonempty carrier but no members";
                    break;
                }
                Graph::Subgraph sub = g.induced(carrier);
                PhiColoring phi(carrier.size(), 0);
                bool phi_ok = true;
                for (std::size_t k = 0; k < sub.to_parent.size(); ++k) {
                    Rational t = (rec.target - sigma0[static_cast<std::size_t>(sub.to_parent[k])]) / a;
                    if (!t.is_integer()) { phi_ok = false; break; }
                    phi[k] = t.to_long();
                }
                if (!phi_ok) {
                    ok = false;
                    wit = "level " + std::to_string(i) + " carrier demand not integral";
                    break;
                }
                std::vector<int> local(static_cast<std::size_t>(n), -1);
                for (std::size_t k = 0; k < sub.to_parent.size(); ++k)
                    local[static_cast<std::size_t>(sub.to_parent[k])] = static_cast<int>(k);
                long got = 0;
                std::vector<int> members_local;
                for (int v : rec.members) {
                    if (v < 0 || v >= n || local[static_cast<std::size_t>(v)] < 0) { got = -1; break; }
                    members_local.push_back(local[static_cast<std::size_t>(v)]);
                    got += phi[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])];
                }
                if (got < 0 || got != mwis_weight(sub.graph, phi)) {
                    ok = false;
                    wit = "level " + std::to_string(i) + " members are not phi-maximum (weight)";
                    break;
                }
                if (!is_dominating(sub.graph, members_local)) {
                    ok = false;
                    wit = "level " + std::to_string(i) + " members do not dominate the carrier";
                    break;
                }
            } else if (!rec.members.empty()) {
                ok = false;
                wit = "level " + std::to_string(i) + " has members but an empty carrier";
                break;
            }
            for (int v : rec.members)
                if (v >= 0 && v < n) taken[static_cast<std::size_t>(v)] = true;
        }
        rep.add("phi-maximum", ok, wit);
    }
    {
        // every carrier vertex has a neighbor in each lower level it targets,
        // and the number of such lower levels equals its demand
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < dec.levels.size() && ok; ++i) {
            const auto& rec = dec.levels[i];
            for (int v : rec.carrier) {
                long lower_hits = 0;
                for (std::size_t j = 0; j < i; ++j) {
                    Rational t = (dec.levels[j].target - sigma0[static_cast<std::size_t>(v)]) / a;
                    if (!(t.is_integer() && t.sign() >= 0 && t <= Rational(g.degree(v) + 1))) continue;
                    ++lower_hits;
                    bool has = false;
                    for (int u : g.neighbors(v))
                        if (std::binary_search(dec.levels[j].members.begin(), dec.levels[j].members.end(), u)) {
                            has = true;
                            break;
                        }
                    if (!has) {
                        ok = false;
                        wit = "vertex " + std::to_string(v) + " has no neighbor in level " + std::to_string(j);
                        break;
                    }
                }
                if (!ok) break;
                auto it = rec.phi.find(v);
                if (it == rec.phi.end() || it->second != lower_hits) {
                    ok = false;
                    wit = "vertex " + std::to_string(v) + " demand differs from its lower-level target count";
                    break;
                }
            }
        }
        rep.add("lower-level-neighbors", ok, wit);
    }
    {
        // the two lowest levels never demand two or more units
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < dec.levels.size() && i < 2; ++i)
            for (int v : dec.levels[i].members) {
                auto it = dec.levels[i].phi.find(v);
                if (it != dec.levels[i].phi.end() && it->second >= 2) {
                    ok = false;
                    wit = "vertex " + std::to_string(v) + " on level " + std::to_string(i) + " demands " +
                          std::to_string(it->second);
                }
            }
        rep.add("low-level-slices-empty", ok, wit);
    }
    {
        bool ok = dec.level_of.size() == static_cast<std::size_t>(n);
        std::string wit = ok ? "" : "level_of has wrong size";
        int last = -1;
        for (std::size_t i = 0; i < dec.levels.size() && ok; ++i) {
            if (!dec.levels[i].members.empty()) last = static_cast<int>(i);
            for (int v : dec.levels[i].members)
                if (v < 0 || v >= n || dec.level_of[static_cast<std::size_t>(v)] != static_cast<int>(i)) {
                    ok = false;
                    wit = "level_of disagrees with membership at vertex " + std::to_string(v);
                    break;
                }
        }
        if (ok && last != dec.last_nonempty) {
            ok = false;
            wit = "last_nonempty is " + std::to_string(dec.last_nonempty) + ", expected " + std::to_string(last);
        }
        rep.add("level-map", ok, wit);
    }
    return rep;
}

} // namespace spanweight

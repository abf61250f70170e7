#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spanweight/errors.hpp"
#include "spanweight/graph.hpp"
#include "spanweight/offsets.hpp"
#include "spanweight/solver.hpp"
#include "spanweight/verify.hpp"

namespace spanweight {

// ---------------------------------------------------------------------------
// Exhaustive {0,a} search

struct OracleResult {
    std::uint64_t feasible_count = 0;
    std::optional<OffsetWeighting> first;   // lexicographically first feasible assignment
};

namespace detail {

// Per-edge violation test over heavy-counts: σ(u) = σ(v) iff
// c_u - c_v = (σ0(v) - σ0(u))/a, which only matters when that quotient is a
// small integer.
struct EdgeTest {
    std::uint32_t zu = 0, zv = 0;
    bool can_violate = false;
    long diff = 0;
};

inline std::vector<EdgeTest> make_edge_tests(const Graph& g, const TotalWeighting& w0, const Rational& a,
                                             const std::vector<std::uint32_t>& zmask) {
    std::vector<EdgeTest> tests;
    const long k = g.vertex_count() + g.edge_count();
    for (auto [u, v] : g.edges()) {
        EdgeTest t;
        t.zu = zmask[static_cast<std::size_t>(u)];
        t.zv = zmask[static_cast<std::size_t>(v)];
        Rational d = (weighted_degree(g, w0, v) - weighted_degree(g, w0, u)) / a;
        if (d.is_integer() && d >= Rational(-k) && d <= Rational(k)) {
            t.can_violate = true;
            t.diff = d.to_long();
        }
        tests.push_back(t);
    }
    return tests;
}

inline std::vector<std::uint32_t> make_zmasks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> zmask(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        zmask[static_cast<std::size_t>(v)] = std::uint32_t{1} << v;
        for (int e : g.incident_edges(v)) zmask[static_cast<std::size_t>(v)] |= std::uint32_t{1} << (n + e);
    }
    return zmask;
}

} // namespace detail

// Enumerates all 2^(n+m) corrections (vertices first, then edges in
// lexicographic order; earlier elements are more significant) and counts the
// proper ones. Capped at n+m <= 24.
inline OracleResult exhaustive_offsets(const Graph& g, const TotalWeighting& w0, const Rational& a) {
    if (a.sign() <= 0) throw DomainError("span must be positive, got " + a.str());
    if (!w0.matches(g)) throw DomainError("base weighting does not cover every element");
    const int n = g.vertex_count();
    const int k = n + g.edge_count();
    if (k > 24) throw ResourceLimit("exhaustive oracle limited to 24 elements, got " + std::to_string(k));

    // element j occupies bit k-1-j, so ascending masks enumerate assignments
    // in lexicographic order
    std::vector<std::uint32_t> zmask_elem = detail::make_zmasks(g);
    std::vector<std::uint32_t> zmask(zmask_elem.size(), 0);
    auto flip = [&](std::uint32_t bits) {
        std::uint32_t out = 0;
        for (int j = 0; j < k; ++j)
            if (bits & (std::uint32_t{1} << j)) out |= std::uint32_t{1} << (k - 1 - j);
        return out;
    };
    for (std::size_t v = 0; v < zmask.size(); ++v) zmask[v] = flip(zmask_elem[v]);
    std::vector<detail::EdgeTest> tests = detail::make_edge_tests(g, w0, a, zmask);

    OracleResult result;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t m = 0; m < total; ++m) {
        bool proper = true;
        for (const auto& t : tests) {
            if (!t.can_violate) continue;
            long cu = std::popcount(static_cast<std::uint32_t>(m) & t.zu);
            long cv = std::popcount(static_cast<std::uint32_t>(m) & t.zv);
            if (cu - cv == t.diff) { proper = false; break; }
        }
        if (!proper) continue;
        ++result.feasible_count;
        if (!result.first) {
            OffsetWeighting off;
            off.span = a;
            off.values = TotalWeighting::zero(g);
            for (int j = 0; j < k; ++j) {
                if (!((m >> (k - 1 - j)) & 1)) continue;
                if (j < n) off.values.vertex[static_cast<std::size_t>(j)] = a;
                else off.values.edge[static_cast<std::size_t>(j - n)] = a;
            }
            result.first = std::move(off);
        }
    }
    return result;
}

// Membership in the oracle's feasible set: the offsets are {0,a}-valued and
// the corrected weighting is proper under the oracle's own edge test.
inline bool oracle_accepts(const Graph& g, const TotalWeighting& w0, const Rational& a,
                           const OffsetWeighting& off) {
    if (!off.values.matches(g) || off.span != a) return false;
    const int n = g.vertex_count();
    const int k = n + g.edge_count();
    if (k > 24) throw ResourceLimit("exhaustive oracle limited to 24 elements, got " + std::to_string(k));
    std::uint32_t mask = 0;
    for (int v = 0; v < n; ++v) {
        const Rational& x = off.values.vertex[static_cast<std::size_t>(v)];
        if (x.is_zero()) continue;
        if (x != a) return false;
        mask |= std::uint32_t{1} << v;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Rational& x = off.values.edge[static_cast<std::size_t>(e)];
        if (x.is_zero()) continue;
        if (x != a) return false;
        mask |= std::uint32_t{1} << (n + e);
    }
    std::vector<std::uint32_t> zmask = detail::make_zmasks(g);
    std::vector<detail::EdgeTest> tests = detail::make_edge_tests(g, w0, a, zmask);
    for (const auto& t : tests) {
        if (!t.can_violate) continue;
        long cu = std::popcount(mask & t.zu);
        long cv = std::popcount(mask & t.zv);
        if (cu - cv == t.diff) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Graph generators (canonical numberings documented per family)

// path n: 0-1-...-(n-1).  cycle n: path plus (n-1)-0, n >= 3.
// complete n: all pairs.  complete_bipartite r s: 0..r-1 versus r..r+s-1.
// star k: center 0, leaves 1..k.  petersen: outer 5-cycle 0..4, inner
// pentagram 5..9 (5+i ~ 5+((i+2) mod 5)), spokes i ~ i+5.
// hypercube d: vertices are bit strings, edges differ in one bit.
inline Graph gen_named(const std::string& name, const std::vector<long>& params) {
    auto need = [&](std::size_t cnt) {
        if (params.size() != cnt)
            throw DomainError("generator '" + name + "' expects " + std::to_string(cnt) + " parameter(s)");
    };
    std::vector<std::pair<int, int>> edges;
    if (name == "path") {
        need(1);
        long n = params[0];
        if (n < 0) throw DomainError("path: negative order");
        for (long i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
        return Graph(static_cast<int>(n), edges);
    }
    if (name == "cycle") {
        need(1);
        long n = params[0];
        if (n < 3) throw DomainError("cycle: order must be at least 3");
        for (long i = 0; i < n; ++i)
            edges.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
        return Graph(static_cast<int>(n), edges);
    }
    if (name == "complete") {
        need(1);
        long n = params[0];
        if (n < 0) throw DomainError("complete: negative order");
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        return Graph(static_cast<int>(n), edges);
    }
    if (name == "complete_bipartite") {
        need(2);
        long r = params[0], s = params[1];
        if (r < 0 || s < 0) throw DomainError("complete_bipartite: negative part size");
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < s; ++j) edges.emplace_back(static_cast<int>(i), static_cast<int>(r + j));
        return Graph(static_cast<int>(r + s), edges);
    }
    if (name == "star") {
        need(1);
        long k = params[0];
        if (k < 0) throw DomainError("star: negative leaf count");
        for (long i = 1; i <= k; ++i) edges.emplace_back(0, static_cast<int>(i));
        return Graph(static_cast<int>(k + 1), edges);
    }
    if (name == "petersen") {
        need(0);
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(5 + i, 5 + ((i + 2) % 5));
            edges.emplace_back(i, i + 5);
        }
        return Graph(10, edges);
    }
    if (name == "hypercube") {
        need(1);
        long d = params[0];
        if (d < 0 || d > 16) throw DomainError("hypercube: dimension out of range 0..16");
        long n = 1L << d;
        for (long x = 0; x < n; ++x)
            for (long b = 0; b < d; ++b)
                if (!(x & (1L << b))) edges.emplace_back(static_cast<int>(x), static_cast<int>(x | (1L << b)));
        return Graph(static_cast<int>(n), edges);
    }
    throw DomainError("unknown generator '" + name + "'");
}

// Seeded G(n, p) with exact rational p: pair (u,v) is kept when
// rng() mod den < num. Deterministic across runs for a fixed seed.
inline Graph gen_random(int n, const Rational& p, std::uint64_t seed) {
    if (n < 0) throw DomainError("gen_random: negative order");
    if (p.sign() < 0 || p > Rational(1)) throw DomainError("edge probability must be in [0,1], got " + p.str());
    if (!p.numerator().fits_slong_p() || !p.denominator().fits_slong_p())
        throw DomainError("edge probability too fine-grained");
    const std::uint64_t num = static_cast<std::uint64_t>(p.numerator().get_si());
    const std::uint64_t den = static_cast<std::uint64_t>(p.denominator().get_si());
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % den < num) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Seeded d-regular graph via the pairing model with restarts (loops and
// repeated pairs are rejected wholesale).
inline Graph gen_regular(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0 || d >= std::max(n, 1))
        throw DomainError("gen_regular: need 0 <= d < n");
    if ((static_cast<long>(n) * d) % 2 != 0) throw DomainError("gen_regular: n*d must be even");
    std::mt19937_64 rng(seed);
    const int restarts = 10000;
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng() % i]);
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph(n, std::move(edges));
    }
    throw DomainError("gen_regular: no simple pairing found after " + std::to_string(restarts) + " restarts");
}

// ---------------------------------------------------------------------------
// Seeded fuzz campaign

struct FuzzConfig {
    long count = 500;
    std::uint64_t seed = 42;
    int nmax = 6;
    std::vector<Rational> edge_probs = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    std::vector<Rational> spans = {Rational(1), Rational(1, 3), Rational(5, 2)};
    std::vector<Rational> base_pool = {Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3)};
};

struct FuzzInstance {
    Graph graph;
    TotalWeighting base;
    Rational span;
};

struct FuzzFailure {
    long index = 0;
    std::string stage;
};

struct FuzzReport {
    long total = 0;
    long passed = 0;
    long failed = 0;
    long oracle_checked = 0;
    std::vector<FuzzFailure> failures;
    std::optional<FuzzInstance> minimal;   // first failure, shrunk
    std::string minimal_stage;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Runs the full pipeline on one instance; empty result means it passed.
// oracle_ran reports whether the instance was small enough to cross-check.
inline std::optional<std::string> instance_failure(const FuzzInstance& inst, bool* oracle_ran = nullptr) {
    if (oracle_ran) *oracle_ran = false;
    try {
        SolveResult sol = solve_offsets(inst.graph, inst.base, inst.span);
        VerificationReport rep = verify_offsets(inst.graph, inst.base, inst.span, sol.offsets, sol.decomposition);
        if (!rep.overall()) return "verify: " + rep.summary();
        if (inst.graph.vertex_count() + inst.graph.edge_count() <= 24) {
            if (oracle_ran) *oracle_ran = true;
            OracleResult oracle = exhaustive_offsets(inst.graph, inst.base, inst.span);
            if (oracle.feasible_count == 0) return "oracle: no feasible assignment exists";
            if (!oracle_accepts(inst.graph, inst.base, inst.span, sol.offsets))
                return "oracle: solver output rejected";
        }
        return std::nullopt;
    } catch (const Error& e) {
        return std::string("solve: ") + e.what();
    }
}

inline FuzzInstance remove_edge(const FuzzInstance& inst, int e) {
    FuzzInstance out;
    std::vector<std::pair<int, int>> edges = inst.graph.edges();
    edges.erase(edges.begin() + e);
    out.graph = Graph(inst.graph.vertex_count(), edges);
    out.base.vertex = inst.base.vertex;
    out.base.edge = inst.base.edge;
    out.base.edge.erase(out.base.edge.begin() + e);
    out.span = inst.span;
    return out;
}

inline FuzzInstance remove_vertex(const FuzzInstance& inst, int v) {
    FuzzInstance out;
    const int n = inst.graph.vertex_count();
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int u = 0; u < n; ++u)
        if (u != v) remap[static_cast<std::size_t>(u)] = next++;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < inst.graph.edges().size(); ++e) {
        auto [a, b] = inst.graph.edges()[e];
        if (a == v || b == v) continue;
        edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
        out.base.edge.push_back(inst.base.edge[e]);
    }
    for (int u = 0; u < n; ++u)
        if (u != v) out.base.vertex.push_back(inst.base.vertex[static_cast<std::size_t>(u)]);
    out.graph = Graph(n - 1, std::move(edges));
    out.span = inst.span;
    return out;
}

// Greedy shrink: drop edges first, then vertices, as long as some failure
// persists.
inline FuzzInstance shrink_instance(FuzzInstance inst) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (int e = 0; e < inst.graph.edge_count(); ++e) {
            FuzzInstance cand = remove_edge(inst, e);
            if (instance_failure(cand)) {
                inst = std::move(cand);
                improved = true;
                break;
            }
        }
        if (improved) continue;
        for (int v = 0; v < inst.graph.vertex_count(); ++v) {
            FuzzInstance cand = remove_vertex(inst, v);
            if (instance_failure(cand)) {
                inst = std::move(cand);
                improved = true;
                break;
            }
        }
    }
    return inst;
}

} // namespace detail

// Derives a deterministic instance stream from the config, runs the solver,
// all verifiers and (where small enough) the exhaustive oracle on each one,
// and shrinks the first failing instance. Failures are data, not exceptions.
inline FuzzReport fuzz_campaign(const FuzzConfig& cfg) {
    if (cfg.nmax < 1) throw DomainError("fuzz: nmax must be at least 1");
    if (cfg.edge_probs.empty() || cfg.spans.empty() || cfg.base_pool.empty())
        throw DomainError("fuzz: empty probability, span or base pool");
    FuzzReport report;
    for (long idx = 0; idx < cfg.count; ++idx) {
        std::mt19937_64 rng(detail::splitmix64(cfg.seed ^ detail::splitmix64(static_cast<std::uint64_t>(idx))));
        FuzzInstance inst;
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.nmax));
        const Rational& p = cfg.edge_probs[rng() % cfg.edge_probs.size()];
        inst.span = cfg.spans[rng() % cfg.spans.size()];
        inst.graph = gen_random(n, p, rng());
        inst.base = TotalWeighting::zero(inst.graph);
        for (auto& x : inst.base.vertex) x = cfg.base_pool[rng() % cfg.base_pool.size()];
        for (auto& x : inst.base.edge) x = cfg.base_pool[rng() % cfg.base_pool.size()];

        bool oracle_ran = false;
        std::optional<std::string> failure = detail::instance_failure(inst, &oracle_ran);
        ++report.total;
        if (oracle_ran) ++report.oracle_checked;
        if (!failure) {
            ++report.passed;
            continue;
        }
        ++report.failed;
        report.failures.push_back({idx, *failure});
        if (!report.minimal) {
            FuzzInstance small = detail::shrink_instance(inst);
            report.minimal_stage = detail::instance_failure(small).value_or("(failure vanished)");
            report.minimal = std::move(small);
        }
    }
    return report;
}

} // namespace spanweight

#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spanweight/errors.hpp"
#include "spanweight/graph.hpp"
#include "spanweight/levels.hpp"
#include "spanweight/offsets.hpp"
#include "spanweight/verify.hpp"
#include "spanweight/wellgraph.hpp"

namespace spanweight {

struct MissingList : DomainError {
    explicit MissingList(Element e) : DomainError("no list for element " + e.key()), element(e) {}
    Element element;
};
struct DegenerateList : DomainError {
    explicit DegenerateList(Element e)
        : DomainError("list for element " + e.key() + " has equal values"), element(e) {}
    Element element;
};
struct NonUniformSpan : DomainError {
    NonUniformSpan(Element a, Element b, const Rational& sa, const Rational& sb)
        : DomainError("lists for " + a.key() + " (span " + sa.str() + ") and " + b.key() + " (span " + sb.str() +
                      ") differ in span"),
          first(a), second(b) {}
    Element first, second;
};

enum class VertexStatus { Hungry, Full, Exceeded };

// Mutable run bookkeeping: the current {0,a} correction plus, per vertex,
// the number of heavy elements in its closed star. A vertex is full when
// that count reaches its demand; the count never passes it on a correct run.
class RunState {
public:
    RunState(Graph g, TotalWeighting w0, LevelDecomposition dec)
        : g_(std::move(g)), w0_(std::move(w0)), dec_(std::move(dec)),
          hv_(static_cast<std::size_t>(g_.vertex_count()), false),
          he_(static_cast<std::size_t>(g_.edge_count()), false),
          count_(static_cast<std::size_t>(g_.vertex_count()), 0) {
        if (!w0_.matches(g_)) throw DomainError("base weighting does not cover every element");
    }

    const Graph& graph() const { return g_; }
    const TotalWeighting& base() const { return w0_; }
    const LevelDecomposition& decomposition() const { return dec_; }

    bool is_heavy(const Element& el) const {
        if (el.is_vertex()) return hv_.at(static_cast<std::size_t>(el.u));
        int e = g_.edge_index(el.u, el.v);
        if (e < 0) throw DomainError("status of non-edge " + el.key());
        return he_[static_cast<std::size_t>(e)];
    }

    long star_heavies(int v) const { return count_.at(static_cast<std::size_t>(v)); }

    Rational sigma(int v) const {
        return weighted_degree(g_, w0_, v) + Rational(star_heavies(v)) * dec_.span;
    }

    // Sets an element heavy; returns false when it already was. Throws when
    // the write would push an endpoint past its target.
    bool make_heavy(const Element& el) {
        if (el.is_vertex()) {
            if (hv_[static_cast<std::size_t>(el.u)]) return false;
            hv_[static_cast<std::size_t>(el.u)] = true;
            bump(el.u);
            return true;
        }
        int e = g_.edge_index(el.u, el.v);
        if (e < 0) throw DomainError("weighting non-edge " + el.key());
        if (he_[static_cast<std::size_t>(e)]) return false;
        he_[static_cast<std::size_t>(e)] = true;
        bump(el.u);
        bump(el.v);
        return true;
    }

    OffsetWeighting offsets() const {
        OffsetWeighting off;
        off.span = dec_.span;
        off.values = TotalWeighting::zero(g_);
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (hv_[static_cast<std::size_t>(v)]) off.values.vertex[static_cast<std::size_t>(v)] = dec_.span;
        for (int e = 0; e < g_.edge_count(); ++e)
            if (he_[static_cast<std::size_t>(e)]) off.values.edge[static_cast<std::size_t>(e)] = dec_.span;
        return off;
    }

private:
    void bump(int v) {
        if (++count_[static_cast<std::size_t>(v)] > dec_.demand(v))
            throw InternalInvariantViolation("vertex " + std::to_string(v) + " pushed past its target");
    }

    Graph g_;
    TotalWeighting w0_;
    LevelDecomposition dec_;
    std::vector<bool> hv_, he_;
    std::vector<long> count_;
};

// Exact comparison of σ against the vertex's level target. Exceeded never
// occurs on a correct run.
inline VertexStatus vertex_status(const RunState& state, int v) {
    long c = state.star_heavies(v);
    long d = state.decomposition().demand(v);
    if (c == d) return VertexStatus::Full;
    return c < d ? VertexStatus::Hungry : VertexStatus::Exceeded;
}

struct SolveResult {
    OffsetWeighting offsets;
    LevelDecomposition decomposition;
    RunTrace trace;
};

namespace detail {

inline std::string dump_instance(const Graph& g, const TotalWeighting& w0, const Rational& a,
                                 const RunTrace& trace) {
    std::ostringstream os;
    os << "span " << a.str() << "; graph " << g.vertex_count() << " " << g.edge_count() << ":";
    for (auto [u, v] : g.edges()) os << " " << u << "-" << v;
    os << "; base:";
    for (const auto& r : w0.vertex) os << " " << r.str();
    os << " |";
    for (const auto& r : w0.edge) os << " " << r.str();
    os << "; trace:";
    for (const auto& it : trace.iterations) {
        os << " [level " << it.level;
        for (auto [u, v] : it.greedy_edges) os << " e" << u << "-" << v;
        for (int v : it.cover_vertices) os << " v" << v;
        for (auto [x, u] : it.forest_edges) os << " f" << x << "-" << u;
        for (int v : it.member_vertices) os << " m" << v;
        os << "]";
    }
    return os.str();
}

} // namespace detail

// Builds a {0,a} correction w with σ_{w0+w}(v) equal to the level target of
// every vertex, which makes w0+w proper (adjacent vertices always land on
// distinct targets). Levels are processed from the top down; each iteration
// first spends greedy edge weight inside the upper slice of V_i, then covers
// the vertices that stay hungry with a star forest rooted in I_i.
inline SolveResult solve_offsets(const Graph& g, const TotalWeighting& w0, const Rational& a) {
    LevelDecomposition dec = build_levels(g, w0, a);
    RunState state(g, w0, dec);
    RunTrace trace;
    trace.span = a;

    auto hungry = [&](int v) { return vertex_status(state, v) == VertexStatus::Hungry; };

    try {
        for (int i = dec.last_nonempty - 1; i >= 0; --i) {
            const LevelRecord& rec = dec.levels[static_cast<std::size_t>(i)];
            TraceIteration step;
            step.level = i;

            std::vector<int> upper;   // carrier vertices that live on higher levels
            std::vector<bool> in_upper(static_cast<std::size_t>(g.vertex_count()), false);
            for (int v : rec.carrier)
                if (dec.level_of[static_cast<std::size_t>(v)] > i) {
                    upper.push_back(v);
                    in_upper[static_cast<std::size_t>(v)] = true;
                }

            // (a) greedy pass over the light edges of G[upper], lexicographic order
            for (auto [u, v] : g.edges()) {
                if (!in_upper[static_cast<std::size_t>(u)] || !in_upper[static_cast<std::size_t>(v)]) continue;
                if (state.is_heavy(Element::edge(u, v))) continue;
                if (hungry(u) && hungry(v)) {
                    state.make_heavy(Element::edge(u, v));
                    step.greedy_edges.emplace_back(u, v);
                }
            }
            // (b) weight the hungry vertices of the slice (light ones only; writes are monotone)
            for (int v : upper)
                if (hungry(v) && state.make_heavy(Element::vertex(v))) step.cover_vertices.push_back(v);

            // (c) the still-hungry ones need one unit from I_i; order by level, then id
            std::vector<int> uset;
            for (int v : upper)
                if (hungry(v)) uset.push_back(v);
            std::sort(uset.begin(), uset.end(), [&](int x, int y) {
                return std::make_pair(dec.level_of[static_cast<std::size_t>(x)], x) <
                       std::make_pair(dec.level_of[static_cast<std::size_t>(y)], y);
            });
            step.u_order = uset;

            if (!uset.empty()) {
                std::vector<int> iplus;
                for (int v : rec.members)
                    if (rec.phi.at(v) >= 1) iplus.push_back(v);
                std::map<int, long> phi;
                for (int v : iplus) phi[v] = rec.phi.at(v);
                for (int v : uset) phi[v] = rec.phi.at(v);
                WellInstance inst = WellInstance::from_graph(g, iplus, uset, phi);
                for (int u : uset)
                    if (!state.is_heavy(Element::vertex(u)))
                        throw InternalInvariantViolation("hungry slice vertex " + std::to_string(u) +
                                                         " is still light");
                for (auto [x, y] : inst.uedges)
                    if (!state.is_heavy(Element::edge(x, y)))
                        throw InternalInvariantViolation("edge inside the hungry slice is still light");
                VerificationReport pre = check_preconditions(inst);
                if (!pre.overall())
                    throw InternalInvariantViolation("u-ordering precondition failed at level " +
                                                     std::to_string(i) + ": " + pre.summary());
                StarForest forest = find_well_subgraph(inst);
                for (auto [x, u] : forest.edges) {
                    state.make_heavy(Element::edge(x, u));
                    step.forest_edges.emplace_back(x, u);
                }
            }

            // (e) finally fill I_i's own hungry vertices
            for (int v : rec.members)
                if (hungry(v) && state.make_heavy(Element::vertex(v))) step.member_vertices.push_back(v);

            trace.iterations.push_back(std::move(step));
        }

        for (int v = 0; v < g.vertex_count(); ++v)
            if (vertex_status(state, v) != VertexStatus::Full)
                throw InternalInvariantViolation("vertex " + std::to_string(v) + " not full at termination");
    } catch (const NoAugmentingPath& e) {
        throw InternalInvariantViolation(std::string("star covering failed: ") + e.what(),
                                         detail::dump_instance(g, w0, a, trace));
    } catch (const InternalInvariantViolation& e) {
        throw InternalInvariantViolation(e.what(), detail::dump_instance(g, w0, a, trace));
    }

    SolveResult result{state.offsets(), std::move(dec), std::move(trace)};

    // never trust the run: re-check range, targets and properness from scratch
    VerificationReport check = verify_offsets(g, w0, a, result.offsets, result.decomposition);
    if (!check.overall())
        throw InternalInvariantViolation("terminal verification failed:\n" + check.summary(),
                                         detail::dump_instance(g, w0, a, result.trace));
    return result;
}

// Picks one value per element from two-element lists of one common span:
// the low values become the base weighting, the span becomes a, and the
// heavy elements of the correction take their high value.
inline TotalWeighting solve_lists(const Graph& g, const std::map<Element, std::pair<Rational, Rational>>& lists) {
    TotalWeighting low = TotalWeighting::zero(g);
    Rational span;
    bool have_span = false;
    Element span_el;
    auto pick = [&](const Element& el) -> Rational {
        auto it = lists.find(el);
        if (it == lists.end()) throw MissingList(el);
        Rational lo = it->second.first, hi = it->second.second;
        if (hi < lo) std::swap(lo, hi);
        if (lo == hi) throw DegenerateList(el);
        Rational s = hi - lo;
        if (!have_span) {
            span = s;
            span_el = el;
            have_span = true;
        } else if (s != span) {
            throw NonUniformSpan(span_el, el, span, s);
        }
        return lo;
    };
    for (int v = 0; v < g.vertex_count(); ++v) low.vertex[static_cast<std::size_t>(v)] = pick(Element::vertex(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        low.edge[static_cast<std::size_t>(e)] = pick(Element::edge(u, v));
    }
    if (!have_span) return low;   // empty graph
    SolveResult sol = solve_offsets(g, low, span);
    return add_weightings(low, sol.offsets.values);
}

// Uniform list assignment {x, y} on every element.
inline std::map<Element, std::pair<Rational, Rational>> uniform_lists(const Graph& g, const Rational& x,
                                                                      const Rational& y) {
    std::map<Element, std::pair<Rational, Rational>> lists;
    for (int v = 0; v < g.vertex_count(); ++v) lists[Element::vertex(v)] = {x, y};
    for (auto [u, v] : g.edges()) lists[Element::edge(u, v)] = {x, y};
    return lists;
}

} // namespace spanweight

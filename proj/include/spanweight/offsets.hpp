#pragma once

#include <utility>
#include <vector>

#include "spanweight/graph.hpp"
#include "spanweight/rational.hpp"

namespace spanweight {

// The {0, a} correction produced by the solver: light elements carry 0,
// heavy elements carry the span. Stored as plain values so independent
// checkers can catch out-of-range tampering.
struct OffsetWeighting {
    Rational span;
    TotalWeighting values;

    bool heavy_vertex(int v) const { return !values.vertex.at(static_cast<std::size_t>(v)).is_zero(); }
    bool heavy_edge(int e) const { return !values.edge.at(static_cast<std::size_t>(e)).is_zero(); }

    // Light/heavy pattern, independent of the span (used by the scaling
    // metamorphic checks).
    std::vector<bool> pattern() const {
        std::vector<bool> p;
        p.reserve(values.vertex.size() + values.edge.size());
        for (const auto& r : values.vertex) p.push_back(!r.is_zero());
        for (const auto& r : values.edge) p.push_back(!r.is_zero());
        return p;
    }

    friend bool operator==(const OffsetWeighting&, const OffsetWeighting&) = default;
};

// Replayable record of every weight assignment the solver makes, grouped by
// iteration. Within one iteration the chronological order is: greedy edges,
// then cover vertices, then star-forest edges, then member vertices.
struct TraceIteration {
    int level = 0;                                   // 0-based level index i
    std::vector<std::pair<int, int>> greedy_edges;   // in processing order
    std::vector<int> cover_vertices;                 // hungry vertices of the upper slice
    std::vector<int> u_order;                        // U_{i+1} in its processing order
    std::vector<std::pair<int, int>> forest_edges;   // chosen F_i, sorted
    std::vector<int> member_vertices;                // hungry members of I_i

    friend bool operator==(const TraceIteration&, const TraceIteration&) = default;
};

struct RunTrace {
    Rational span;
    std::vector<TraceIteration> iterations;

    friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

} // namespace spanweight

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "spanweight/graph.hpp"
#include "spanweight/offsets.hpp"

namespace spanweight {

// Graphviz export. Vertices are labeled "id : σ" when a weighting is given;
// heavy elements (offset equal to the span relative to the base) are drawn
// bold. Node and edge order is deterministic (ascending ids).
inline void write_dot(std::ostream& os, const Graph& g,
                      const TotalWeighting* weighting = nullptr,
                      const OffsetWeighting* offsets = nullptr) {
    os << "graph G {\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        std::string attrs;
        if (weighting) attrs += "label=\"" + std::to_string(v) + " : " + weighted_degree(g, *weighting, v).str() + "\"";
        if (offsets && offsets->heavy_vertex(v)) {
            if (!attrs.empty()) attrs += ", ";
            attrs += "style=bold";
        }
        if (!attrs.empty()) os << " [" << attrs << "]";
        os << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        os << "  " << u << " -- " << v;
        if (offsets && offsets->heavy_edge(e)) os << " [style=bold]";
        os << ";\n";
    }
    os << "}\n";
}

} // namespace spanweight

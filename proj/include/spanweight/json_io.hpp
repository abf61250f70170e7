#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spanweight/graph.hpp"
#include "spanweight/levels.hpp"
#include "spanweight/offsets.hpp"
#include "spanweight/oracle.hpp"
#include "spanweight/report.hpp"
#include "spanweight/wellgraph.hpp"

namespace spanweight {

using json = nlohmann::ordered_json;

// Weighting files: {"span": "p/q", "vertices": {"0": "p/q", ...},
// "edges": {"u-v": "p/q", ...}} with exact rational strings and u < v in
// every edge key. "span" is present on solver output and optional on input.

inline json weighting_to_json(const Graph& g, const TotalWeighting& w,
                              const std::optional<Rational>& span = std::nullopt) {
    json j;
    if (span) j["span"] = span->str();
    json verts = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) verts[std::to_string(v)] = w.vertex.at(static_cast<std::size_t>(v)).str();
    j["vertices"] = std::move(verts);
    json edges = json::object();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        edges[Element::edge(u, v).key()] = w.edge.at(static_cast<std::size_t>(e)).str();
    }
    j["edges"] = std::move(edges);
    return j;
}

inline Element parse_edge_key(const std::string& key) {
    auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
        throw ParseError("bad edge key '" + key + "', expected 'u-v'");
    int u = 0, v = 0;
    try {
        std::size_t used = 0;
        u = std::stoi(key.substr(0, dash), &used);
        if (used != dash) throw std::invalid_argument(key);
        std::string rest = key.substr(dash + 1);
        v = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
        throw ParseError("bad edge key '" + key + "', expected 'u-v'");
    }
    if (u >= v) throw ParseError("bad edge key '" + key + "': endpoints must satisfy u < v");
    return Element::edge(u, v);
}

struct ParsedWeighting {
    TotalWeighting weighting;
    std::optional<Rational> span;
};

inline ParsedWeighting weighting_from_json(const Graph& g, const json& j) {
    if (!j.is_object()) throw ParseError("weighting document must be a JSON object");
    ParsedWeighting out;
    if (j.contains("span")) out.span = Rational::parse(j.at("span").get<std::string>());
    std::map<Element, Rational> sparse;
    if (j.contains("vertices"))
        for (auto it = j.at("vertices").begin(); it != j.at("vertices").end(); ++it) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(it.key(), &used);
                if (used != it.key().size()) throw std::invalid_argument(it.key());
            } catch (const std::exception&) {
                throw ParseError("bad vertex key '" + it.key() + "'");
            }
            sparse[Element::vertex(v)] = Rational::parse(it.value().get<std::string>());
        }
    if (j.contains("edges"))
        for (auto it = j.at("edges").begin(); it != j.at("edges").end(); ++it)
            sparse[parse_edge_key(it.key())] = Rational::parse(it.value().get<std::string>());
    out.weighting = to_total(g, sparse);
    return out;
}

// List files use the same keys with two-element arrays:
// {"vertices": {"0": ["1", "2"]}, "edges": {"0-1": ["1", "2"]}}

inline json lists_to_json(const Graph& g, const std::map<Element, std::pair<Rational, Rational>>& lists) {
    json j;
    json verts = json::object(), edges = json::object();
    for (const auto& [el, lh] : lists) {
        json pair = json::array({lh.first.str(), lh.second.str()});
        if (el.is_vertex()) verts[el.key()] = std::move(pair);
        else edges[el.key()] = std::move(pair);
    }
    j["vertices"] = std::move(verts);
    j["edges"] = std::move(edges);
    return j;
}

inline std::map<Element, std::pair<Rational, Rational>> lists_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("list document must be a JSON object");
    std::map<Element, std::pair<Rational, Rational>> lists;
    auto read_pair = [](const json& arr, const std::string& key) {
        if (!arr.is_array() || arr.size() != 2)
            throw ParseError("list for '" + key + "' must be a two-element array");
        return std::make_pair(Rational::parse(arr[0].get<std::string>()),
                              Rational::parse(arr[1].get<std::string>()));
    };
    if (j.contains("vertices"))
        for (auto it = j.at("vertices").begin(); it != j.at("vertices").end(); ++it) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(it.key(), &used);
                if (used != it.key().size()) throw std::invalid_argument(it.key());
            } catch (const std::exception&) {
                throw ParseError("bad vertex key '" + it.key() + "'");
            }
            lists[Element::vertex(v)] = read_pair(it.value(), it.key());
        }
    if (j.contains("edges"))
        for (auto it = j.at("edges").begin(); it != j.at("edges").end(); ++it)
            lists[parse_edge_key(it.key())] = read_pair(it.value(), it.key());
    return lists;
}

inline json levels_to_json(const LevelDecomposition& dec) {
    json j;
    j["span"] = dec.span.str();
    json targets = json::array();
    for (const auto& q : dec.targets) targets.push_back(q.str());
    j["targets"] = std::move(targets);
    json levels = json::array();
    for (const auto& rec : dec.levels) {
        json r;
        r["q"] = rec.target.str();
        r["members"] = rec.members;
        r["carrier"] = rec.carrier;
        r["targeted"] = rec.targeted;
        json phi = json::object();
        for (const auto& [v, x] : rec.phi) phi[std::to_string(v)] = x;
        r["phi"] = std::move(phi);
        levels.push_back(std::move(r));
    }
    j["levels"] = std::move(levels);
    j["level_of"] = dec.level_of;
    j["last_nonempty"] = dec.last_nonempty;
    return j;
}

inline json trace_to_json(const RunTrace& trace) {
    json j;
    j["span"] = trace.span.str();
    json iters = json::array();
    for (const auto& it : trace.iterations) {
        json r;
        r["level"] = it.level;
        json ge = json::array();
        for (auto [u, v] : it.greedy_edges) ge.push_back(json::array({u, v}));
        r["greedy_edges"] = std::move(ge);
        r["cover_vertices"] = it.cover_vertices;
        r["u_order"] = it.u_order;
        json fe = json::array();
        for (auto [x, u] : it.forest_edges) fe.push_back(json::array({x, u}));
        r["forest_edges"] = std::move(fe);
        r["member_vertices"] = it.member_vertices;
        iters.push_back(std::move(r));
    }
    j["iterations"] = std::move(iters);
    return j;
}

inline json report_to_json(const VerificationReport& rep) {
    json j;
    j["overall"] = rep.overall();
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

inline json well_instance_to_json(const WellInstance& inst) {
    json j;
    j["iside"] = inst.iside;
    j["uorder"] = inst.uorder;
    json ce = json::array();
    for (auto [x, u] : inst.cross_edges) ce.push_back(json::array({x, u}));
    j["cross_edges"] = std::move(ce);
    json ue = json::array();
    for (auto [a, b] : inst.uedges) ue.push_back(json::array({a, b}));
    j["uedges"] = std::move(ue);
    json phi = json::object();
    for (const auto& [v, x] : inst.phi) phi[std::to_string(v)] = x;
    j["phi"] = std::move(phi);
    return j;
}

inline WellInstance well_instance_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("well instance must be a JSON object");
    WellInstance inst;
    try {
        inst.iside = j.at("iside").get<std::vector<int>>();
        inst.uorder = j.at("uorder").get<std::vector<int>>();
        for (const auto& e : j.at("cross_edges"))
            inst.cross_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        if (j.contains("uedges"))
            for (const auto& e : j.at("uedges")) inst.uedges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        for (auto it = j.at("phi").begin(); it != j.at("phi").end(); ++it)
            inst.phi[std::stoi(it.key())] = it.value().get<long>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad well instance: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("bad well instance: non-integer phi key");
    }
    inst.validate();
    return inst;
}

// Edge-list text for a graph, replayable through Graph::parse.
inline std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

inline json fuzz_report_to_json(const FuzzConfig& cfg, const FuzzReport& rep) {
    json j;
    json c;
    c["count"] = cfg.count;
    c["seed"] = cfg.seed;
    c["nmax"] = cfg.nmax;
    json probs = json::array(), spans = json::array(), pool = json::array();
    for (const auto& p : cfg.edge_probs) probs.push_back(p.str());
    for (const auto& s : cfg.spans) spans.push_back(s.str());
    for (const auto& b : cfg.base_pool) pool.push_back(b.str());
    c["edge_probs"] = std::move(probs);
    c["spans"] = std::move(spans);
    c["base_pool"] = std::move(pool);
    j["config"] = std::move(c);
    j["total"] = rep.total;
    j["passed"] = rep.passed;
    j["failed"] = rep.failed;
    j["oracle_checked"] = rep.oracle_checked;
    json fails = json::array();
    for (const auto& f : rep.failures) {
        json e;
        e["index"] = f.index;
        e["stage"] = f.stage;
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    if (rep.minimal) {
        json m;
        m["stage"] = rep.minimal_stage;
        m["span"] = rep.minimal->span.str();
        m["graph"] = graph_to_edge_list(rep.minimal->graph);
        m["base"] = weighting_to_json(rep.minimal->graph, rep.minimal->base);
        j["minimal"] = std::move(m);
    } else {
        j["minimal"] = nullptr;
    }
    return j;
}

} // namespace spanweight

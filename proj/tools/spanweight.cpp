// Command-line front end: solve, verify, oracle-check, fuzz, generate and
// export. Exit codes: 0 success, 1 a verification or feasibility check
// failed, 2 invalid input, 3 internal assertion (diagnostic dump on stderr).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spanweight/dot.hpp"
#include "spanweight/graph.hpp"
#include "spanweight/json_io.hpp"
#include "spanweight/levels.hpp"
#include "spanweight/mwis.hpp"
#include "spanweight/oracle.hpp"
#include "spanweight/solver.hpp"
#include "spanweight/verify.hpp"
#include "spanweight/wellgraph.hpp"

namespace sw = spanweight;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sw::ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sw::ParseError("cannot write '" + path + "'");
    out << content;
}

sw::json parse_json(const std::string& text, const std::string& what) {
    try {
        return sw::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw sw::ParseError("bad " + what + " JSON: " + e.what());
    }
}

sw::Graph load_graph(const std::string& path) { return sw::Graph::parse(read_file(path)); }

// --base accepts "zero" or "file:PATH" (a weighting JSON without span).
sw::TotalWeighting load_base(const sw::Graph& g, const std::string& spec) {
    if (spec == "zero") return sw::TotalWeighting::zero(g);
    if (spec.rfind("file:", 0) == 0)
        return sw::weighting_from_json(g, parse_json(read_file(spec.substr(5)), "weighting")).weighting;
    throw sw::ParseError("bad --base '" + spec + "', expected 'zero' or 'file:PATH'");
}

// --lists accepts "uniform:X,Y" or "file:PATH".
std::map<sw::Element, std::pair<sw::Rational, sw::Rational>> load_lists(const sw::Graph& g,
                                                                        const std::string& spec) {
    if (spec.rfind("uniform:", 0) == 0) {
        std::string body = spec.substr(8);
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw sw::ParseError("bad --lists '" + spec + "', expected 'uniform:X,Y'");
        return sw::uniform_lists(g, sw::Rational::parse(body.substr(0, comma)),
                                 sw::Rational::parse(body.substr(comma + 1)));
    }
    if (spec.rfind("file:", 0) == 0) return sw::lists_from_json(parse_json(read_file(spec.substr(5)), "lists"));
    throw sw::ParseError("bad --lists '" + spec + "', expected 'uniform:X,Y' or 'file:PATH'");
}

std::vector<sw::Rational> parse_rational_csv(const std::string& csv) {
    std::vector<sw::Rational> out;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) out.push_back(sw::Rational::parse(tok));
    if (out.empty()) throw sw::ParseError("empty rational list '" + csv + "'");
    return out;
}

int cmd_weigh(const std::string& graph_file, const std::string& base_spec, const std::string& span_text,
              const std::string& lists_spec, const std::string& out_file, const std::string& levels_file,
              const std::string& trace_file) {
    sw::Graph g = load_graph(graph_file);
    if (lists_spec.empty() == span_text.empty())
        throw sw::ParseError("exactly one of --span (with --base) or --lists is required");

    sw::TotalWeighting final_w;
    std::optional<sw::Rational> span;
    sw::VerificationReport report;
    sw::SolveResult sol;

    if (!span_text.empty()) {
        sw::Rational a = sw::Rational::parse(span_text);
        sw::TotalWeighting w0 = load_base(g, base_spec);
        sol = sw::solve_offsets(g, w0, a);
        final_w = sw::add_weightings(w0, sol.offsets.values);
        span = a;
        report = sw::verify_offsets(g, w0, a, sol.offsets, sol.decomposition);
    } else {
        auto lists = load_lists(g, lists_spec);
        final_w = sw::solve_lists(g, lists);
        // recover the run artifacts for --emit-levels / --emit-trace
        sw::TotalWeighting low = sw::TotalWeighting::zero(g);
        if (g.vertex_count() > 0) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                auto lh = lists.at(sw::Element::vertex(v));
                low.vertex[static_cast<std::size_t>(v)] = std::min(lh.first, lh.second);
            }
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
                auto lh = lists.at(sw::Element::edge(u, v));
                low.edge[static_cast<std::size_t>(e)] = std::min(lh.first, lh.second);
            }
        }
        if (g.vertex_count() > 0 || g.edge_count() > 0) {
            auto any = lists.begin()->second;
            sw::Rational a = any.first < any.second ? any.second - any.first : any.first - any.second;
            sol = sw::solve_offsets(g, low, a);
            span = a;
        }
        report = sw::verify_list_membership(g, lists, final_w);
        sw::VerificationReport prop = sw::verify_proper(g, final_w);
        for (auto& c : prop.checks) report.checks.push_back(std::move(c));
    }

    write_output(out_file, sw::weighting_to_json(g, final_w, span).dump(2) + "\n");
    if (!levels_file.empty()) write_output(levels_file, sw::levels_to_json(sol.decomposition).dump(2) + "\n");
    if (!trace_file.empty()) write_output(trace_file, sw::trace_to_json(sol.trace).dump(2) + "\n");
    std::cerr << report.summary();
    return report.overall() ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& graph_file, const std::string& weighting_file, const std::string& lists_file) {
    sw::Graph g = load_graph(graph_file);
    sw::ParsedWeighting pw = sw::weighting_from_json(g, parse_json(read_file(weighting_file), "weighting"));
    sw::VerificationReport report = sw::verify_proper(g, pw.weighting);
    if (!lists_file.empty()) {
        auto lists = sw::lists_from_json(parse_json(read_file(lists_file), "lists"));
        sw::VerificationReport mem = sw::verify_list_membership(g, lists, pw.weighting);
        for (auto& c : mem.checks) report.checks.push_back(std::move(c));
    }
    std::cout << report.summary();
    return report.overall() ? kExitOk : kExitCheckFailed;
}

int cmd_oracle(const std::string& graph_file, const std::string& base_spec, const std::string& span_text) {
    sw::Graph g = load_graph(graph_file);
    sw::TotalWeighting w0 = load_base(g, base_spec);
    sw::Rational a = sw::Rational::parse(span_text);
    sw::OracleResult res = sw::exhaustive_offsets(g, w0, a);
    if (res.feasible_count == 0) {
        std::cout << "infeasible, count=0\n";
        return kExitCheckFailed;
    }
    std::cout << "feasible, count=" << res.feasible_count << "\n";
    sw::SolveResult sol = sw::solve_offsets(g, w0, a);
    bool member = sw::oracle_accepts(g, w0, a, sol.offsets);
    std::cout << "solver output feasible: " << (member ? "yes" : "no") << "\n";
    return member ? kExitOk : kExitCheckFailed;
}

int cmd_fuzz(const sw::FuzzConfig& cfg, const std::string& out_file) {
    sw::FuzzReport rep = sw::fuzz_campaign(cfg);
    std::cout << "fuzz: " << rep.total << " instances, " << rep.passed << " passed, " << rep.failed
              << " failed (oracle cross-checked " << rep.oracle_checked << ")\n";
    for (const auto& f : rep.failures) std::cout << "  instance " << f.index << ": " << f.stage << "\n";
    if (rep.minimal) {
        std::cout << "minimal failing instance (" << rep.minimal_stage << "):\n"
                  << sw::graph_to_edge_list(rep.minimal->graph);
    }
    if (!out_file.empty()) write_output(out_file, sw::fuzz_report_to_json(cfg, rep).dump(2) + "\n");
    return rep.failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& out_file) {
    sw::Graph g;
    auto as_long = [](const std::string& s) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw sw::ParseError("expected integer parameter, got '" + s + "'");
        }
    };
    if (family == "random") {
        if (params.size() != 3) throw sw::ParseError("usage: gen random N P SEED");
        g = sw::gen_random(static_cast<int>(as_long(params[0])), sw::Rational::parse(params[1]),
                           static_cast<std::uint64_t>(as_long(params[2])));
    } else if (family == "regular") {
        if (params.size() != 3) throw sw::ParseError("usage: gen regular N D SEED");
        g = sw::gen_regular(static_cast<int>(as_long(params[0])), static_cast<int>(as_long(params[1])),
                            static_cast<std::uint64_t>(as_long(params[2])));
    } else {
        std::vector<long> nums;
        for (const auto& p : params) nums.push_back(as_long(p));
        g = sw::gen_named(family, nums);
    }
    write_output(out_file, sw::graph_to_edge_list(g));
    return kExitOk;
}

int cmd_mwis(const std::string& graph_file, const std::string& phi_csv, bool brute, long budget_ms,
             bool extend) {
    sw::Graph g = load_graph(graph_file);
    sw::PhiColoring phi(static_cast<std::size_t>(g.vertex_count()), 1);
    if (!phi_csv.empty()) {
        phi.clear();
        std::istringstream in(phi_csv);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                phi.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw sw::ParseError("bad phi entry '" + tok + "'");
            }
        }
    }
    std::optional<std::chrono::milliseconds> budget;
    if (budget_ms > 0) budget = std::chrono::milliseconds(budget_ms);
    std::vector<int> witness;
    long weight = 0;
    if (brute) {
        sw::MwisResult r = sw::mwis_bruteforce(g, phi);
        weight = r.weight;
        witness = r.witness;
    } else {
        witness = extend ? sw::phi_maximum_set(g, phi, budget) : sw::mwis_exact(g, phi, budget);
        for (int v : witness) weight += phi[static_cast<std::size_t>(v)];
    }
    std::cout << "weight " << weight << ", witness:";
    for (int v : witness) std::cout << " " << v;
    std::cout << "\n";
    return kExitOk;
}

int cmd_well(const std::string& instance_file) {
    sw::WellInstance inst = sw::well_instance_from_json(parse_json(read_file(instance_file), "well instance"));
    sw::VerificationReport pre = sw::check_preconditions(inst);
    std::cout << pre.summary();
    try {
        sw::StarForest forest = sw::find_well_subgraph(inst);
        std::cout << "star forest:";
        for (auto [x, u] : forest.edges) std::cout << " (" << x << "," << u << ")";
        std::cout << "\nwell: " << (sw::verify_well(inst, forest) ? "yes" : "no") << "\n";
        return kExitOk;
    } catch (const sw::NoAugmentingPath& e) {
        std::cout << "no star covering: blocked at u-vertex " << e.blocked_u << ", saturated reachable set:";
        for (int x : e.reachable) std::cout << " " << x;
        std::cout << "\n";
        return kExitCheckFailed;
    }
}

int cmd_export_dot(const std::string& graph_file, const std::string& weighting_file, const std::string& base_spec,
                   const std::string& out_file) {
    sw::Graph g = load_graph(graph_file);
    std::ostringstream os;
    if (weighting_file.empty()) {
        sw::write_dot(os, g);
    } else {
        sw::ParsedWeighting pw = sw::weighting_from_json(g, parse_json(read_file(weighting_file), "weighting"));
        sw::TotalWeighting base = load_base(g, base_spec);
        std::optional<sw::OffsetWeighting> off;
        if (pw.span) {
            sw::OffsetWeighting candidate;
            candidate.span = *pw.span;
            candidate.values.vertex.resize(pw.weighting.vertex.size());
            candidate.values.edge.resize(pw.weighting.edge.size());
            bool in_range = true;
            for (std::size_t i = 0; i < pw.weighting.vertex.size() && in_range; ++i) {
                candidate.values.vertex[i] = pw.weighting.vertex[i] - base.vertex[i];
                in_range = candidate.values.vertex[i].is_zero() || candidate.values.vertex[i] == *pw.span;
            }
            for (std::size_t i = 0; i < pw.weighting.edge.size() && in_range; ++i) {
                candidate.values.edge[i] = pw.weighting.edge[i] - base.edge[i];
                in_range = candidate.values.edge[i].is_zero() || candidate.values.edge[i] == *pw.span;
            }
            if (!in_range)
                throw sw::ParseError("weighting minus base is not a {0, span} correction; check --base");
            off = std::move(candidate);
        }
        sw::write_dot(os, g, &pw.weighting, off ? &*off : nullptr);
    }
    write_output(out_file, os.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper total weightings from two-element lists of uniform span"};
    app.require_subcommand(1);

    std::string graph_file, base_spec = "zero", span_text, lists_spec, out_file, levels_file, trace_file;
    std::string weighting_file, lists_file, instance_file, phi_csv, family;
    std::vector<std::string> gen_params;
    bool brute = false, extend = false;
    long budget_ms = 0;
    sw::FuzzConfig cfg;
    std::string spans_csv, probs_csv, pool_csv;

    CLI::App* weigh = app.add_subcommand("weigh", "solve an instance and verify the result");
    weigh->add_option("--graph", graph_file, "edge-list file")->required();
    weigh->add_option("--base", base_spec, "'zero' or 'file:PATH' (with --span)");
    weigh->add_option("--span", span_text, "positive rational span a");
    weigh->add_option("--lists", lists_spec, "'uniform:X,Y' or 'file:PATH'");
    weigh->add_option("-o,--output", out_file, "weighting JSON output (default stdout)");
    weigh->add_option("--emit-levels", levels_file, "write the level decomposition JSON");
    weigh->add_option("--emit-trace", trace_file, "write the run trace JSON");

    CLI::App* verify = app.add_subcommand("verify", "check a weighting for properness");
    verify->add_option("--graph", graph_file, "edge-list file")->required();
    verify->add_option("--weighting", weighting_file, "weighting JSON")->required();
    verify->add_option("--lists", lists_file, "also check membership against these lists");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive cross-check of one instance");
    oracle->add_option("--graph", graph_file, "edge-list file")->required();
    oracle->add_option("--base", base_spec, "'zero' or 'file:PATH'");
    oracle->add_option("--span", span_text, "positive rational span a")->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random campaign against the oracle");
    fuzz->add_option("--count", cfg.count, "number of instances");
    fuzz->add_option("--seed", cfg.seed, "campaign seed");
    fuzz->add_option("--nmax", cfg.nmax, "maximum vertex count");
    fuzz->add_option("--spans", spans_csv, "comma-separated candidate spans");
    fuzz->add_option("--probs", probs_csv, "comma-separated edge probabilities");
    fuzz->add_option("--pool", pool_csv, "comma-separated base weight pool");
    fuzz->add_option("-o,--output", out_file, "write the full report JSON");

    CLI::App* gen = app.add_subcommand("gen", "generate a graph file");
    gen->add_option("family", family,
                    "path|cycle|complete|complete_bipartite|star|petersen|hypercube|random|regular")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("-o,--output", out_file, "edge-list output (default stdout)");

    CLI::App* mwis = app.add_subcommand("mwis", "maximum-weight independent set (debugging)");
    mwis->add_option("--graph", graph_file, "edge-list file")->required();
    mwis->add_option("--phi", phi_csv, "comma-separated weights (default all 1)");
    mwis->add_flag("--brute", brute, "use the exhaustive oracle");
    mwis->add_flag("--extend", extend, "extend to a dominating (phi-maximum) set");
    mwis->add_option("--budget-ms", budget_ms, "abort after this many milliseconds");

    CLI::App* well = app.add_subcommand("well", "star covering of a bipartite instance (debugging)");
    well->add_option("--instance", instance_file, "well instance JSON")->required();

    CLI::App* dot = app.add_subcommand("export-dot", "Graphviz export");
    dot->add_option("--graph", graph_file, "edge-list file")->required();
    dot->add_option("--weighting", weighting_file, "weighting JSON for labels and heavy styling");
    dot->add_option("--base", base_spec, "'zero' or 'file:PATH', subtracted to find heavy elements");
    dot->add_option("-o,--output", out_file, "DOT output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*weigh) return cmd_weigh(graph_file, base_spec, span_text, lists_spec, out_file, levels_file, trace_file);
        if (*verify) return cmd_verify(graph_file, weighting_file, lists_file);
        if (*oracle) return cmd_oracle(graph_file, base_spec, span_text);
        if (*fuzz) {
            if (!spans_csv.empty()) cfg.spans = parse_rational_csv(spans_csv);
            if (!probs_csv.empty()) cfg.edge_probs = parse_rational_csv(probs_csv);
            if (!pool_csv.empty()) cfg.base_pool = parse_rational_csv(pool_csv);
            return cmd_fuzz(cfg, out_file);
        }
        if (*gen) return cmd_gen(family, gen_params, out_file);
        if (*mwis) return cmd_mwis(graph_file, phi_csv, brute, budget_ms, extend);
        if (*well) return cmd_well(instance_file);
        if (*dot) return cmd_export_dot(graph_file, weighting_file, base_spec, out_file);
    } catch (const sw::InternalInvariantViolation& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        if (!e.dump.empty()) std::cerr << "dump: " << e.dump << "\n";
        return kExitInternal;
    } catch (const sw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}

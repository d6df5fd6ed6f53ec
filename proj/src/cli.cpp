#include "orient/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orient/benchmark.hpp"
#include "orient/gadgets.hpp"
#include "orient/graph.hpp"
#include "orient/normalizer.hpp"
#include "orient/reductions.hpp"
#include "orient/solver.hpp"
#include "orient/tree_algo.hpp"

namespace orient {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Alphabet parse_alphabet(const std::string& spec) {
    Alphabet a;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        int lo = std::stoi(spec.substr(0, dots));
        int hi = std::stoi(spec.substr(dots + 2));
        if (lo != 1) throw validation_error("alphabet must start at 1");
        a = Alphabet::up_to(hi);
    } else {
        std::istringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) a.weights.push_back(std::stoi(tok));
    }
    a.validate();
    return a;
}

SolveLimits limits_from_env() {
    SolveLimits limits;
    if (const char* env = std::getenv("ORIENT_MAX_EDGES")) {
        size_t cap = std::stoull(env);
        limits.max_edges = cap;
        limits.oracle_max_edges = cap;
    }
    return limits;
}

int emit(std::ostream& out, const json& report) {
    out << report.dump(2) << "\n";
    return 0;
}

json orientation_report(const Graph& g, const WeightedOrientation& wo) {
    return serialize_orientation(g, wo);
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"exact semi-proper orientation toolkit"};
    app.require_subcommand(1);

    std::string graph_path, orientation_path, cnf_path, out_path;
    std::string alphabet_spec = "1,2", flavor, gadget_name, family = "random";
    std::string which = "H";
    long long k = 0;
    int max_weight = 2, count = 10, min_n = 4, max_n = 8;
    double edge_prob = 0.3;
    std::uint64_t seed = 1;
    bool exact = false;

    CLI::App* solve = app.add_subcommand("solve", "semi-proper orientation number");
    solve->add_option("--graph", graph_path)->required();

    CLI::App* dec = app.add_subcommand("decide", "is max in-sum <= k feasible");
    dec->add_option("--graph", graph_path)->required();
    dec->add_option("-k", k)->required();
    dec->add_option("--alphabet", alphabet_spec);

    CLI::App* proper = app.add_subcommand("proper-number", "proper orientation number");
    proper->add_option("--graph", graph_path)->required();

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force minimum over all weightings");
    oracle->add_option("--graph", graph_path)->required();
    oracle->add_option("-W", max_weight)->required();

    CLI::App* normalize = app.add_subcommand("normalize", "rewrite weights into {1,2}");
    normalize->add_option("--graph", graph_path)->required();
    normalize->add_option("--orientation", orientation_path)->required();

    CLI::App* tree = app.add_subcommand("tree", "tree construction with max in-sum <= 2");
    tree->add_option("--graph", graph_path)->required();
    tree->add_flag("--exact", exact, "classify into {0,1,2}");

    CLI::App* reduce = app.add_subcommand("reduce", "build a hardness construction");
    reduce->add_option("--flavor", flavor)->required()
        ->check(CLI::IsMember({"type2", "cubic1in3"}));
    reduce->add_option("--cnf", cnf_path)->required();
    reduce->add_option("--out", out_path);

    CLI::App* extract = app.add_subcommand("extract", "assignment from an optimal orientation");
    extract->add_option("--graph", graph_path)->required();
    extract->add_option("--orientation", orientation_path)->required();
    extract->add_option("--which", which)->check(CLI::IsMember({"H", "G"}));

    CLI::App* vg = app.add_subcommand("verify-gadget", "check a catalog gadget's contract");
    vg->add_option("--name", gadget_name)->required();

    CLI::App* bench = app.add_subcommand("benchmark", "gap between the two numbers");
    bench->add_option("--family", family)
        ->check(CLI::IsMember({"random", "random-bipartite", "trees"}));
    bench->add_option("--count", count);
    bench->add_option("--seed", seed);
    bench->add_option("--min-n", min_n);
    bench->add_option("--max-n", max_n);
    bench->add_option("--edge-prob", edge_prob);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        err << app.help();
        return 2;
    }

    SolveLimits limits = limits_from_env();

    try {
        if (solve->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            SolveReport rep = semi_proper_number(g, limits);
            json r;
            r["command"] = "solve";
            r["input"] = graph_path;
            r["result"] = {{"chi_s", rep.value}};
            r["witness"] = orientation_report(g, rep.witness);
            return emit(out, r);
        }
        if (dec->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            Alphabet a = parse_alphabet(alphabet_spec);
            auto wo = decide(g, k, a, {}, limits);
            json r;
            r["command"] = "decide";
            r["input"] = graph_path;
            r["result"] = {{"k", k}, {"feasible", wo.has_value()}};
            if (wo) r["witness"] = orientation_report(g, *wo);
            emit(out, r);
            return wo ? 0 : 1;
        }
        if (proper->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            SolveReport rep = proper_orientation_number(g, limits);
            json r;
            r["command"] = "proper-number";
            r["input"] = graph_path;
            r["result"] = {{"chi_vec", rep.value}};
            r["witness"] = orientation_report(g, rep.witness);
            return emit(out, r);
        }
        if (oracle->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            WeightedOrientation witness;
            long long v = oracle_min_max(g, max_weight, limits, &witness);
            json r;
            r["command"] = "oracle";
            r["input"] = graph_path;
            r["result"] = {{"max_weight", max_weight}, {"value", v}};
            r["witness"] = orientation_report(g, witness);
            return emit(out, r);
        }
        if (normalize->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            WeightedOrientation wo =
                parse_orientation(g, read_file(orientation_path));
            NormalizeStats stats;
            WeightedOrientation fixed = normalize_to_12(g, wo, &stats);
            json r;
            r["command"] = "normalize";
            r["input"] = orientation_path;
            r["result"] = {{"steps", stats.steps.size()},
                           {"max_s_before", max_s(g, wo)},
                           {"max_s_after", max_s(g, fixed)}};
            r["witness"] = orientation_report(g, fixed);
            return emit(out, r);
        }
        if (tree->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            json r;
            r["command"] = "tree";
            r["input"] = graph_path;
            if (exact) {
                TreeReport rep = tree_number(g);
                r["result"] = {{"value", rep.value},
                               {"max_s", g.edge_count() ? max_s(g, rep.witness) : 0}};
                r["witness"] = orientation_report(g, rep.witness);
            } else {
                WeightedOrientation wo = tree_semi_proper(g);
                r["result"] = {{"max_s", g.edge_count() ? max_s(g, wo) : 0}};
                r["witness"] = orientation_report(g, wo);
            }
            return emit(out, r);
        }
        if (reduce->parsed()) {
            CnfFlavor fl = flavor == "type2" ? CnfFlavor::type2 : CnfFlavor::cubic1in3;
            CnfInstance f = parse_dimacs(read_file(cnf_path), fl);
            ValidationReport vr = validate_instance(f);
            json r;
            r["command"] = "reduce";
            r["input"] = cnf_path;
            if (!vr.ok) {
                r["result"] = {{"valid", false}};
                r["diagnostics"] = vr.diagnostics;
                emit(out, r);
                return 1;
            }
            ReductionOutput ro = fl == CnfFlavor::type2 ? build_H(f) : build_G(f);
            std::string text = serialize_graph(ro.graph);
            r["result"] = {{"valid", true},
                           {"n", ro.graph.vertex_count()},
                           {"m", ro.graph.edge_count()},
                           {"planar", is_planar(ro.graph)},
                           {"bipartite", is_bipartite(ro.graph).bipartite}};
            r["graph"] = text;
            if (!out_path.empty()) {
                std::ofstream of(out_path, std::ios::binary);
                of << text;
            }
            return emit(out, r);
        }
        if (extract->parsed()) {
            Graph g = parse_graph(read_file(graph_path));
            WeightedOrientation wo =
                parse_orientation(g, read_file(orientation_path));
            ReductionKind kind = which == "H" ? ReductionKind::H : ReductionKind::G;
            std::vector<bool> assignment = extract_assignment(g, wo, kind);
            json r;
            r["command"] = "extract";
            r["input"] = orientation_path;
            json vars = json::array();
            for (bool b : assignment) vars.push_back(b);
            r["result"] = {{"assignment", vars}};
            return emit(out, r);
        }
        if (vg->parsed()) {
            GadgetCatalogEntry entry = gadget(parse_gadget_name(gadget_name));
            GadgetReport rep = verify_gadget(entry);
            json r;
            r["command"] = "verify-gadget";
            r["input"] = gadget_name;
            json checks = json::array();
            for (const auto& c : rep.checks) {
                json jc;
                jc["name"] = c.name;
                jc["method"] = c.method;
                jc["passed"] = c.passed;
                if (!c.detail.empty()) jc["detail"] = c.detail;
                checks.push_back(jc);
            }
            r["result"] = {{"all_passed", rep.all_passed},
                           {"reconstructed", entry.reconstructed},
                           {"checks", checks}};
            emit(out, r);
            return rep.all_passed ? 0 : 1;
        }
        if (bench->parsed()) {
            BenchmarkTable table = benchmark_gap(parse_bench_family(family), count,
                                                 min_n, max_n, edge_prob, seed, limits);
            json rows = json::array();
            for (const auto& row : table.rows) {
                json jr;
                jr["index"] = row.index;
                jr["n"] = row.n;
                jr["m"] = row.m;
                if (row.skipped) {
                    jr["skipped"] = true;
                } else {
                    jr["chi_s"] = row.semi_proper;
                    jr["chi_vec"] = row.proper;
                    jr["gap"] = row.gap;
                }
                rows.push_back(jr);
            }
            json r;
            r["command"] = "benchmark";
            r["input"] = {{"family", family}, {"count", count}, {"seed", seed},
                          {"min_n", min_n}, {"max_n", max_n},
                          {"edge_prob", edge_prob}};
            r["result"] = {{"max_gap", table.max_gap}, {"rows", rows}};
            return emit(out, r);
        }
    } catch (const size_error& e) {
        err << "size error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const contract_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

} // namespace orient

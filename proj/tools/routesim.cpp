// routesim: generate graphs, check their structure, build routing schemes,
// route messages, verify guarantees and reproduce the size/stretch report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "routing/error.hpp"
#include "routing/experiment.hpp"
#include "routing/rng.hpp"
#include "routing/scheme.hpp"
#include "routing/simulator.hpp"

using namespace routing;
using ordered_json = nlohmann::ordered_json;

namespace {

void write_text(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        fail(Errc::io_error, "cannot open " + path + " for writing");
    f << text;
    if (!f)
        fail(Errc::io_error, "write failed: " + path);
}

std::string read_text(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        fail(Errc::io_error, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

PortAssignment make_ports(const LabeledGraph& g, const std::string& spec)
{
    if (spec == "canonical")
        return PortAssignment::canonical(g);
    if (spec.rfind("seed:", 0) == 0)
        return PortAssignment::random_shuffle(g, std::stoull(spec.substr(5)));
    fail(Errc::parse_error, "ports must be 'canonical' or 'seed:<u64>'");
}

int cmd_generate(int n, std::uint64_t seed, const std::string& family, int k,
                 const std::string& out)
{
    LabeledGraph g;
    if (family == "uniform")
        g = generate_uniform(n, seed);
    else if (family == "gk")
        g = build_gk(k);
    else
        fail(Errc::parse_error, "family must be uniform or gk");
    write_text(out, graph_to_text(g));
    std::fprintf(stderr, "wrote %d nodes, %lld edges\n", g.node_count(), g.edge_count());
    return 0;
}

int cmd_check(const std::string& in, int c, double K, bool as_json)
{
    LabeledGraph g = graph_from_text(read_text(in));
    bool diam = check_diameter_two(g);
    auto degree = check_degree_lemma(g, c, K);
    auto coverage = check_coverage_lemma(g, c);
    if (as_json) {
        ordered_json j;
        j["n"] = g.node_count();
        j["edges"] = g.edge_count();
        j["diameter_two"] = diam;
        j["degree_pass"] = degree.passed;
        j["degree_threshold"] = degree.threshold;
        j["degree_max_deviation"] = degree.max_deviation;
        j["coverage_pass"] = coverage.passed;
        j["coverage_violations"] = coverage.violations.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("n=%d edges=%lld\n", g.node_count(), g.edge_count());
        std::printf("diameter_two: %s\n", diam ? "pass" : "FAIL");
        std::printf("degree (c=%d, K=%g): %s (max deviation %.2f, threshold %.2f)\n", c, K,
                    degree.passed ? "pass" : "FAIL", degree.max_deviation, degree.threshold);
        std::printf("coverage (c=%d): %s (%zu violating pairs)\n", c,
                    coverage.passed ? "pass" : "FAIL", coverage.violations.size());
    }
    return (diam && degree.passed && coverage.passed) ? 0 : 1;
}

int cmd_build(const std::string& in, const std::string& scheme_name,
              const std::string& model_str, int c, const std::string& ports_spec,
              const std::string& out)
{
    LabeledGraph g = graph_from_text(read_text(in));
    SchemeKind kind = scheme_kind_from_name(scheme_name);
    RoutingScheme s;
    switch (kind) {
    case SchemeKind::canonical_sp:
        s = build_canonical_sp(g);
        break;
    case SchemeKind::sp_neighbor_known:
        s = model_str.empty() ? build_sp_neighbor_known(g, c)
                              : build_sp_neighbor_known(g, c, ModelSpec::parse(model_str));
        break;
    case SchemeKind::sp_relabel:
        s = build_sp_relabel(g, c);
        break;
    case SchemeKind::stretch15:
        s = build_stretch15(g, c);
        break;
    case SchemeKind::stretch2_hub:
        s = build_stretch2_hub(g, c);
        break;
    case SchemeKind::stretch_logn:
        s = build_stretch_logn(g, c);
        break;
    case SchemeKind::sp_fixed_port:
        s = build_sp_fixed_port(g, make_ports(g, ports_spec), c, ports_spec);
        break;
    case SchemeKind::full_info:
        s = build_full_info(g, make_ports(g, ports_spec), ports_spec);
        break;
    }
    write_scheme_file(s, out);

    SizeReport size = measure_size(s);
    ordered_json j;
    j["scheme"] = scheme_kind_name(s.kind);
    j["model"] = s.model.to_string();
    j["n"] = s.n;
    j["c"] = s.c;
    j["total_bits"] = size.total_bits;
    j["label_bits"] = size.total_label_bits;
    j["max_node_bits"] = size.max_node_bits;
    j["claim_violations"] = s.stats.claim_violations;
    j["padded_labels"] = s.stats.padded_labels;
    ordered_json parts;
    for (auto& [name, bits] : size.breakdown)
        parts[name] = bits;
    j["breakdown"] = parts;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_route(const std::string& graph_path, const std::string& scheme_path, int src,
              int dst, bool trace)
{
    LabeledGraph g = graph_from_text(read_text(graph_path));
    RoutingScheme s = read_scheme_file(scheme_path, g);
    RouteResult r = route(g, s, src, dst);
    if (trace)
        std::cout << format_trace(r);
    ordered_json j;
    j["src"] = src;
    j["dst"] = dst;
    j["delivered"] = r.delivered;
    j["path"] = r.path;
    j["edge_traversals"] = r.edge_traversals;
    j["failed_probes"] = r.failed_probes;
    j["shortest"] = r.shortest;
    j["stretch"] = r.stretch.str();
    std::cout << j.dump(2) << "\n";
    return r.delivered ? 0 : 1;
}

int cmd_verify(const std::string& graph_path, const std::string& scheme_path,
               const std::string& pairs)
{
    LabeledGraph g = graph_from_text(read_text(graph_path));
    RoutingScheme s = read_scheme_file(scheme_path, g);
    PairPolicy policy = PairPolicy::all();
    if (pairs.rfind("sample:", 0) == 0)
        policy = PairPolicy::sample(std::stoll(pairs.substr(7)), 0x70616972u);
    else if (pairs != "all")
        fail(Errc::parse_error, "pairs must be 'all' or 'sample:<count>'");

    ordered_json j;
    j["scheme"] = scheme_kind_name(s.kind);
    bool ok = false;
    if (s.kind == SchemeKind::full_info) {
        auto rep = verify_full_info(g, s);
        j["mode"] = "full_info_oracle";
        j["pairs"] = rep.pairs;
        j["mismatches"] = rep.mismatches.size();
        ok = rep.passed;
    } else if (s.kind == SchemeKind::stretch15 || s.kind == SchemeKind::stretch2_hub ||
               s.kind == SchemeKind::stretch_logn) {
        auto rep = max_stretch(g, s, policy);
        j["mode"] = "stretch_bound";
        j["pairs"] = rep.pairs;
        j["max_stretch"] = rep.max_stretch.str();
        j["max_traversals"] = rep.max_traversals;
        if (s.kind == SchemeKind::stretch_logn) {
            int cap = 2 * coverage_target(g.node_count(), s.c);
            j["traversal_bound"] = cap;
            ok = rep.undelivered == 0 && rep.max_traversals <= cap;
        } else {
            Rational bound = s.kind == SchemeKind::stretch15 ? Rational{3, 2} : Rational{2, 1};
            j["stretch_bound"] = bound.str();
            ok = rep.undelivered == 0 && !rational_less(bound, rep.max_stretch);
        }
    } else {
        auto rep = verify_shortest(g, s, policy);
        j["mode"] = "shortest_path";
        j["pairs"] = rep.pairs;
        j["violations"] = rep.violations.size();
        ok = rep.passed;
    }
    j["pass"] = ok;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_report(const std::string& config_path, const std::string& format,
               const std::string& out)
{
    ExperimentConfig cfg = ExperimentConfig::from_json(read_text(config_path));
    auto rows = run_experiments(cfg);
    write_text(out, emit_report(rows, report_format_from_name(format), cfg.timings));
    long long failures = 0;
    for (const auto& r : rows)
        if (r.status != "ok" || r.violations != 0)
            ++failures;
    std::fprintf(stderr, "%zu rows, %lld with failures\n", rows.size(), failures);
    return failures == 0 ? 0 : 1;
}

int cmd_reconstruct(int k, std::uint64_t perm_seed)
{
    // demonstrate the permutation recovery on a relabeled gadget
    std::vector<int> labels(k);
    for (int i = 0; i < k; ++i)
        labels[i] = 2 * k + 1 + i;
    std::mt19937_64 rng(perm_seed);
    for (int i = k; i > 1; --i)
        std::swap(labels[i - 1], labels[bounded_random(rng, std::uint64_t(i))]);

    LabeledGraph base = build_gk(k);
    std::vector<int> perm(3 * k + 1);
    for (int i = 0; i <= 3 * k; ++i)
        perm[i] = i;
    for (int i = 0; i < k; ++i)
        perm[2 * k + 1 + i] = labels[i];
    LabeledGraph g = relabel_nodes(base, perm);
    RoutingScheme s = build_canonical_sp(g);
    std::vector<int> rec = reconstruct_permutation(s, g, k);

    ordered_json j;
    j["k"] = k;
    j["applied"] = labels;
    j["reconstructed"] = rec;
    j["match"] = (rec == labels);
    std::cout << j.dump(2) << "\n";
    return rec == labels ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"compact routing schemes on random graphs"};
    app.require_subcommand(1);

    int n = 64, k = 4, c = 3, src = 1, dst = 2;
    std::uint64_t seed = 1, perm_seed = 1;
    double K = 2.0;
    bool as_json = false, trace = false;
    std::string in, out = "-", family = "uniform", scheme, model, ports = "canonical";
    std::string graph_path, scheme_path, pairs = "all", config_path, format = "csv";

    auto* gen = app.add_subcommand("generate", "sample a graph and write it out");
    gen->add_option("--n", n, "node count");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--family", family, "uniform or gk");
    gen->add_option("--k", k, "gadget size for the gk family");
    gen->add_option("--out", out, "output path ('-' for stdout)")->required();

    auto* chk = app.add_subcommand("check", "run the random-graph structure checkers");
    chk->add_option("--in", in, "graph file")->required();
    chk->add_option("--c", c, "deficiency constant");
    chk->add_option("--K", K, "degree threshold multiplier");
    chk->add_flag("--json", as_json, "machine-readable output");

    auto* bld = app.add_subcommand("build", "build a routing scheme over a graph");
    bld->add_option("--in", in, "graph file")->required();
    bld->add_option("--scheme", scheme, "scheme kind")->required();
    bld->add_option("--model", model, "model override, e.g. IB/alpha");
    bld->add_option("--c", c, "deficiency constant");
    bld->add_option("--ports", ports, "'canonical' or 'seed:<u64>' (port-based schemes)");
    bld->add_option("--out", out, "scheme file")->required();

    auto* rte = app.add_subcommand("route", "route one message and print the result");
    rte->add_option("--graph", graph_path, "graph file")->required();
    rte->add_option("--scheme", scheme_path, "scheme file")->required();
    rte->add_option("--src", src, "source node")->required();
    rte->add_option("--dst", dst, "destination node")->required();
    rte->add_flag("--trace", trace, "print one line per hop");

    auto* ver = app.add_subcommand("verify", "check a scheme's guarantee over node pairs");
    ver->add_option("--graph", graph_path, "graph file")->required();
    ver->add_option("--scheme", scheme_path, "scheme file")->required();
    ver->add_option("--pairs", pairs, "'all' or 'sample:<count>'");

    auto* rep = app.add_subcommand("report", "run an experiment config and emit the table");
    rep->add_option("--config", config_path, "experiment config (json)")->required();
    rep->add_option("--format", format, "csv or json");
    rep->add_option("--out", out, "report path ('-' for stdout)")->required();

    auto* rec = app.add_subcommand("reconstruct",
                                   "recover a top-row labeling of the gk gadget from its "
                                   "bottom-row routing functions");
    rec->add_option("--k", k, "gadget size");
    rec->add_option("--perm-seed", perm_seed, "labeling permutation seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(n, seed, family, k, out);
        if (chk->parsed())
            return cmd_check(in, c, K, as_json);
        if (bld->parsed())
            return cmd_build(in, scheme, model, c, ports, out);
        if (rte->parsed())
            return cmd_route(graph_path, scheme_path, src, dst, trace);
        if (ver->parsed())
            return cmd_verify(graph_path, scheme_path, pairs);
        if (rep->parsed())
            return cmd_report(config_path, format, out);
        if (rec->parsed())
            return cmd_reconstruct(k, perm_seed);
    } catch (const Error& e) {
        std::fprintf(stderr, "error (%s): %s\n", errc_name(e.code()), e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

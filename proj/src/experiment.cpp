#include "routing/experiment.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "routing/error.hpp"
#include "routing/rng.hpp"

namespace routing {

namespace {

constexpr std::uint64_t kPortSeedSalt = 0x706f727473ull; // "ports"

using ordered_json = nlohmann::ordered_json;

} // namespace

ExperimentConfig ExperimentConfig::from_json(std::string_view json_text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        fail(Errc::parse_error, std::string("config: ") + e.what());
    }
    ExperimentConfig cfg;
    for (auto& v : j.at("n"))
        cfg.n_values.push_back(v.get<int>());
    if (j.contains("seeds")) {
        for (auto& v : j.at("seeds"))
            cfg.seeds.push_back(v.get<std::uint64_t>());
    } else if (j.contains("seed_count")) {
        for (std::uint64_t s = 1; s <= j.at("seed_count").get<std::uint64_t>(); ++s)
            cfg.seeds.push_back(s);
    } else {
        fail(Errc::parse_error, "config: needs seeds or seed_count");
    }
    cfg.c = j.value("c", 3);
    cfg.degree_K = j.value("degree_K", 2.0);
    cfg.sample_pairs = j.value("sample_pairs", (long long)100000);
    cfg.exhaustive_max_n = j.value("exhaustive_max_n", 256);
    cfg.retry_limit = j.value("retry_limit", 5);
    cfg.timings = j.value("timings", false);
    for (auto& e : j.at("schemes")) {
        SchemeRequest req;
        if (e.is_string()) {
            req.kind = scheme_kind_from_name(e.get<std::string>());
        } else {
            req.kind = scheme_kind_from_name(e.at("name").get<std::string>());
            if (e.contains("model"))
                req.model = ModelSpec::parse(e.at("model").get<std::string>());
        }
        cfg.schemes.push_back(req);
    }
    return cfg;
}

std::string ExperimentConfig::to_json() const
{
    ordered_json j;
    j["n"] = n_values;
    j["seeds"] = seeds;
    j["c"] = c;
    j["degree_K"] = degree_K;
    j["sample_pairs"] = sample_pairs;
    j["exhaustive_max_n"] = exhaustive_max_n;
    j["retry_limit"] = retry_limit;
    j["timings"] = timings;
    ordered_json arr = ordered_json::array();
    for (const auto& req : schemes) {
        if (req.model) {
            ordered_json e;
            e["name"] = scheme_kind_name(req.kind);
            e["model"] = req.model->to_string();
            arr.push_back(e);
        } else {
            arr.push_back(std::string(scheme_kind_name(req.kind)));
        }
    }
    j["schemes"] = arr;
    return j.dump(2) + "\n";
}

namespace {

struct PreparedGraph {
    LabeledGraph g;
    std::uint64_t used_seed = 0;
    int retries = 0;
    bool diam = false, degree = false, coverage = false;
    bool usable = false;
    std::vector<std::vector<int>> dist;
};

PreparedGraph prepare_graph(int n, std::uint64_t slot_seed, const ExperimentConfig& cfg)
{
    PreparedGraph pg;
    for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
        std::uint64_t seed = attempt == 0 ? slot_seed : mix_seed(slot_seed, std::uint64_t(attempt));
        LabeledGraph g = generate_uniform(n, seed);
        bool diam = check_diameter_two(g);
        bool degree = check_degree_lemma(g, cfg.c, cfg.degree_K).passed;
        bool coverage = check_coverage_lemma(g, cfg.c).passed;
        pg.retries = attempt;
        pg.used_seed = seed;
        pg.diam = diam;
        pg.degree = degree;
        pg.coverage = coverage;
        if (diam && degree && coverage) {
            pg.g = std::move(g);
            pg.usable = true;
            pg.dist = all_pairs_distances(pg.g);
            return pg;
        }
    }
    return pg; // lemma checks exhausted; rows report retry_exhausted
}

RoutingScheme build_requested(const SchemeRequest& req, const LabeledGraph& g, int c,
                              std::uint64_t port_seed)
{
    switch (req.kind) {
    case SchemeKind::canonical_sp:
        return build_canonical_sp(g);
    case SchemeKind::sp_neighbor_known:
        return req.model ? build_sp_neighbor_known(g, c, *req.model)
                         : build_sp_neighbor_known(g, c);
    case SchemeKind::sp_relabel:
        return build_sp_relabel(g, c);
    case SchemeKind::stretch15:
        return build_stretch15(g, c);
    case SchemeKind::stretch2_hub:
        return build_stretch2_hub(g, c);
    case SchemeKind::stretch_logn:
        return build_stretch_logn(g, c);
    case SchemeKind::sp_fixed_port:
        return build_sp_fixed_port(g, PortAssignment::random_shuffle(g, port_seed), c,
                                   "seed:" + std::to_string(port_seed));
    case SchemeKind::full_info:
        return build_full_info(g, PortAssignment::random_shuffle(g, port_seed),
                               "seed:" + std::to_string(port_seed));
    }
    fail(Errc::invalid_argument, "unknown scheme kind");
}

bool scheme_is_shortest_path(SchemeKind k)
{
    switch (k) {
    case SchemeKind::canonical_sp:
    case SchemeKind::sp_neighbor_known:
    case SchemeKind::sp_relabel:
    case SchemeKind::sp_fixed_port:
    case SchemeKind::full_info:
        return true;
    default:
        return false;
    }
}

} // namespace

std::vector<ReportRow> run_experiments(const ExperimentConfig& cfg)
{
    std::vector<ReportRow> rows;
    for (int n : cfg.n_values) {
        PairPolicy policy = PairPolicy::all();
        if (n > cfg.exhaustive_max_n)
            policy = PairPolicy::sample(cfg.sample_pairs, 0x70616972u);
        for (std::uint64_t slot : cfg.seeds) {
            PreparedGraph pg = prepare_graph(n, slot, cfg);
            std::uint64_t port_seed = mix_seed(pg.used_seed, kPortSeedSalt);
            for (const auto& req : cfg.schemes) {
                ReportRow row;
                row.scheme = scheme_kind_name(req.kind);
                row.n = n;
                row.seed = slot;
                row.used_seed = pg.used_seed;
                row.retries = pg.retries;
                row.diam_pass = pg.diam;
                row.degree_pass = pg.degree;
                row.coverage_pass = pg.coverage;
                auto started = std::chrono::steady_clock::now();
                if (!pg.usable) {
                    row.status = errc_name(Errc::retry_exhausted);
                    rows.push_back(row);
                    continue;
                }
                try {
                    RoutingScheme s = build_requested(req, pg.g, cfg.c, port_seed);
                    row.model = s.model.to_string();
                    SizeReport size = measure_size(s);
                    row.total_bits = size.total_bits;
                    row.label_bits = size.total_label_bits;
                    row.max_node_bits = size.max_node_bits;
                    row.claim_violations = s.stats.claim_violations;
                    if (req.kind == SchemeKind::full_info) {
                        auto rep = verify_full_info(pg.g, s, &pg.dist);
                        row.violations = (long long)rep.mismatches.size();
                        auto sr = max_stretch(pg.g, s, policy, &pg.dist);
                        row.max_stretch = sr.max_stretch;
                        row.max_traversals = sr.max_traversals;
                    } else if (scheme_is_shortest_path(req.kind)) {
                        auto rep = verify_shortest(pg.g, s, policy, &pg.dist);
                        row.violations = (long long)rep.violations.size();
                        row.max_traversals = rep.max_route_length;
                        if (rep.passed) {
                            row.max_stretch = Rational::make(1, 1);
                        } else {
                            row.status = "stretch_violation";
                            row.max_stretch = Rational{0, 1};
                        }
                    } else {
                        auto sr = max_stretch(pg.g, s, policy, &pg.dist);
                        row.max_stretch = sr.max_stretch;
                        row.max_traversals = sr.max_traversals;
                        row.violations = sr.undelivered;
                    }
                } catch (const Error& e) {
                    row.status = errc_name(e.code());
                }
                auto elapsed = std::chrono::steady_clock::now() - started;
                row.runtime_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
                rows.push_back(row);
            }
        }
    }
    return rows;
}

namespace {

const char* kCsvColumns[] = {
    "scheme", "model", "n", "seed", "used_seed", "retries", "status",
    "diam_pass", "degree_pass", "coverage_pass", "total_bits", "label_bits",
    "max_node_bits", "claim_violations", "max_stretch", "violations",
    "max_traversals",
};

} // namespace

std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format, bool timings)
{
    if (format == ReportFormat::csv) {
        std::string out;
        for (std::size_t i = 0; i < std::size(kCsvColumns); ++i) {
            if (i)
                out += ',';
            out += kCsvColumns[i];
        }
        if (timings)
            out += ",runtime_ms";
        out += '\n';
        for (const auto& r : rows) {
            out += r.scheme + ',' + r.model + ',';
            out += std::to_string(r.n) + ',' + std::to_string(r.seed) + ',';
            out += std::to_string(r.used_seed) + ',' + std::to_string(r.retries) + ',';
            out += r.status + ',';
            out += (r.diam_pass ? "1," : "0,");
            out += (r.degree_pass ? "1," : "0,");
            out += (r.coverage_pass ? "1," : "0,");
            out += std::to_string(r.total_bits) + ',' + std::to_string(r.label_bits) + ',';
            out += std::to_string(r.max_node_bits) + ',' +
                   std::to_string(r.claim_violations) + ',';
            out += r.max_stretch.str() + ',';
            out += std::to_string(r.violations) + ',' + std::to_string(r.max_traversals);
            if (timings)
                out += ',' + std::to_string(r.runtime_ms);
            out += '\n';
        }
        return out;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["scheme"] = r.scheme;
        j["model"] = r.model;
        j["n"] = r.n;
        j["seed"] = r.seed;
        j["used_seed"] = r.used_seed;
        j["retries"] = r.retries;
        j["status"] = r.status;
        j["diam_pass"] = r.diam_pass;
        j["degree_pass"] = r.degree_pass;
        j["coverage_pass"] = r.coverage_pass;
        j["total_bits"] = r.total_bits;
        j["label_bits"] = r.label_bits;
        j["max_node_bits"] = r.max_node_bits;
        j["claim_violations"] = r.claim_violations;
        j["max_stretch"] = r.max_stretch.str();
        j["violations"] = r.violations;
        j["max_traversals"] = r.max_traversals;
        if (timings)
            j["runtime_ms"] = r.runtime_ms;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::vector<ReportRow> parse_report_csv(std::string_view text)
{
    std::vector<ReportRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line))
        fail(Errc::parse_error, "empty report");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                f.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        f.push_back(cur);
        if (f.size() < std::size(kCsvColumns))
            fail(Errc::parse_error, "short report row");
        ReportRow r;
        r.scheme = f[0];
        r.model = f[1];
        r.n = std::stoi(f[2]);
        r.seed = std::stoull(f[3]);
        r.used_seed = std::stoull(f[4]);
        r.retries = std::stoi(f[5]);
        r.status = f[6];
        r.diam_pass = f[7] == "1";
        r.degree_pass = f[8] == "1";
        r.coverage_pass = f[9] == "1";
        r.total_bits = std::stoull(f[10]);
        r.label_bits = std::stoull(f[11]);
        r.max_node_bits = std::stoull(f[12]);
        r.claim_violations = std::stoi(f[13]);
        std::size_t slash = f[14].find('/');
        if (slash == std::string::npos)
            fail(Errc::parse_error, "stretch field is not p/q");
        r.max_stretch = {std::stoll(f[14].substr(0, slash)), std::stoll(f[14].substr(slash + 1))};
        r.violations = std::stoll(f[15]);
        r.max_traversals = std::stoi(f[16]);
        rows.push_back(r);
    }
    return rows;
}

ReportFormat report_format_from_name(std::string_view name)
{
    if (name == "csv")
        return ReportFormat::csv;
    if (name == "json")
        return ReportFormat::json;
    fail(Errc::parse_error, "unknown report format: " + std::string(name));
}

} // namespace routing

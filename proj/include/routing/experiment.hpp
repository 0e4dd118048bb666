#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "routing/scheme.hpp"
#include "routing/simulator.hpp"

namespace routing {

struct SchemeRequest {
    SchemeKind kind = SchemeKind::sp_neighbor_known;
    std::optional<ModelSpec> model; // builder default when absent
};

struct ExperimentConfig {
    std::vector<int> n_values;
    std::vector<std::uint64_t> seeds;
    int c = 3;
    double degree_K = 2.0;
    std::vector<SchemeRequest> schemes;
    long long sample_pairs = 100000; // used above the exhaustive cutoff
    int exhaustive_max_n = 256;
    int retry_limit = 5;
    bool timings = false;

    static ExperimentConfig from_json(std::string_view json_text);
    std::string to_json() const;
};

struct ReportRow {
    std::string scheme;
    std::string model;
    int n = 0;
    std::uint64_t seed = 0;      // seed slot from the config
    std::uint64_t used_seed = 0; // after lemma-retry resampling
    int retries = 0;
    std::string status = "ok"; // or an error code name
    bool diam_pass = false;
    bool degree_pass = false;
    bool coverage_pass = false;
    std::uint64_t total_bits = 0;
    std::uint64_t label_bits = 0;
    std::uint64_t max_node_bits = 0;
    int claim_violations = 0;
    Rational max_stretch{0, 1};
    long long violations = 0; // shortest-path or full-info mismatches
    int max_traversals = 0;
    long long runtime_ms = 0;
};

// generate (with lemma-retry), build, measure and verify every requested
// scheme for every (n, seed); rows come back in config order
std::vector<ReportRow> run_experiments(const ExperimentConfig& cfg);

enum class ReportFormat { csv, json };

std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                        bool timings = false);
std::vector<ReportRow> parse_report_csv(std::string_view text);

ReportFormat report_format_from_name(std::string_view name);

} // namespace routing

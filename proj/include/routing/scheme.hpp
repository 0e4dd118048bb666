#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "routing/bits.hpp"
#include "routing/graph.hpp"

namespace routing {

// --- knowledge / relabeling models ---

// IA: ports fixed, neighbors unknown. IB: ports rewritable, neighbors
// unknown. II: neighbor labels known for free.
enum class InfoModel { IA, IB, II };
// alpha: labels fixed. beta: permutation of 1..n. gamma: arbitrary labels,
// their length charged per node.
enum class RelabelModel { alpha, beta, gamma };

struct ModelSpec {
    InfoModel info = InfoModel::II;
    RelabelModel relabel = RelabelModel::alpha;

    bool neighbors_known() const { return info == InfoModel::II; }
    std::string to_string() const;
    static ModelSpec parse(std::string_view s);

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// Free port reassignment combined with known neighbors would hand every node
// deg*log(deg) free bits, so that combination is rejected outright.
void require_legal(const ModelSpec& m, bool rewrites_ports);

// --- actions and probe headers ---

enum class ActionKind {
    deliver,
    forward_port,     // IA/IB only
    forward_neighbor, // II only
    probe_next,       // bounce back to the sender, stretch-log-n protocol
};

struct Action {
    ActionKind kind = ActionKind::deliver;
    int target = 0; // port index or neighbor label
};

const char* action_kind_name(ActionKind k);

// Probe protocol state carried in the message header (stretch-log-n only).
struct Header {
    bool probing = false;
    bool failed = false;
    int probe_index = 0; // 1-based index of the probe in flight

    friend bool operator==(const Header&, const Header&) = default;
};

// --- schemes ---

enum class SchemeKind : std::uint8_t {
    canonical_sp = 1,      // explicit next-hop table, works on any connected graph
    sp_neighbor_known = 2, // unary + explicit two-table construction
    sp_relabel = 3,        // routing information moved into gamma labels
    stretch15 = 4,         // routing centers around node 1
    stretch2_hub = 5,      // single hub at node 1
    stretch_logn = 6,      // probe the coverage set, no tables at all
    sp_fixed_port = 7,     // bitmap + port permutation + two-table
    full_info = 8,         // every shortest-path port per destination
};

const char* scheme_kind_name(SchemeKind k);
SchemeKind scheme_kind_from_name(std::string_view name);

struct BuildStats {
    int claim_violations = 0; // stages where |A_t| <= m_{t-1}/3
    int max_stage = 0;        // deepest unary stage used by any node
    int padded_labels = 0;    // gamma labels padded because deg < target
};

struct DecodedViews; // internal, derived from encodings + free knowledge

// A built scheme: per-node charged encodings (each starts with an 8-bit
// scheme tag), optional gamma labels, and the port assignment it was built
// against (environment under IA, the rank-order rewrite under IB).
struct RoutingScheme {
    SchemeKind kind = SchemeKind::canonical_sp;
    ModelSpec model;
    int n = 0;
    int c = 0;
    std::vector<BitString> encodings; // index 1..n
    std::vector<BitString> labels;    // gamma only, index 1..n
    std::optional<PortAssignment> ports;
    std::string port_spec = "none"; // "none" | "canonical" | "seed:<u64>"
    BuildStats stats;
    std::map<std::string, std::uint64_t> component_bits;
    std::shared_ptr<const DecodedViews> views;
};

// --- builders ---

RoutingScheme build_canonical_sp(const LabeledGraph& g);
RoutingScheme build_sp_neighbor_known(const LabeledGraph& g, int c,
                                      ModelSpec model = {InfoModel::II, RelabelModel::alpha});
RoutingScheme build_sp_relabel(const LabeledGraph& g, int c);
RoutingScheme build_stretch15(const LabeledGraph& g, int c);
RoutingScheme build_stretch2_hub(const LabeledGraph& g, int c);
RoutingScheme build_stretch_logn(const LabeledGraph& g, int c);
RoutingScheme build_sp_fixed_port(const LabeledGraph& g, const PortAssignment& ports, int c,
                                  std::string_view port_spec = "none");
RoutingScheme build_full_info(const LabeledGraph& g, const PortAssignment& ports,
                              std::string_view port_spec = "none");

// throws lemma_precondition naming the failed checker
void require_lemmas(const LabeledGraph& g, int c, bool need_coverage, bool need_degree);

// --- evaluation ---

struct DestRef {
    int plain = 0;                    // original label, non-gamma schemes
    const BitString* gamma = nullptr; // self-contained label, gamma schemes
};

struct EvalResult {
    Action action;
    Header header;
};

// Pure function of (encoding, the model's free knowledge, destination,
// header). Knowledge discipline: IA/IB paths only consult the decoded
// bitmap and permutation, II paths may consult neighbor labels.
EvalResult evaluate(const RoutingScheme& s, const LabeledGraph& g, int node,
                    const DestRef& dst, const Header& h);

// full-information variant: every shortest-path port, ascending
std::vector<int> evaluate_full_ports(const RoutingScheme& s, const LabeledGraph& g,
                                     int node, int dst);

// rebuilds the decoded views from encodings + free knowledge (called by
// builders and by the file loader)
std::shared_ptr<const DecodedViews> decode_views(const RoutingScheme& s, const LabeledGraph& g);

// --- size accounting ---

struct SizeReport {
    std::vector<std::uint64_t> per_node_bits; // index 1..n
    std::vector<std::uint64_t> label_bits;    // index 1..n, zero unless gamma
    std::uint64_t total_bits = 0;
    std::uint64_t max_node_bits = 0;
    std::uint64_t total_label_bits = 0;
    std::map<std::string, std::uint64_t> breakdown;
};

SizeReport measure_size(const RoutingScheme& s);

// --- serialization ---

// header lines (scheme/model/n/c/ports/nbits) then one hex line holding the
// concatenation over nodes of prime(label)?prime(encoding); see docs/FORMATS.md
std::string scheme_to_text(const RoutingScheme& s);
RoutingScheme scheme_from_text(std::string_view text, const LabeledGraph& g);
void write_scheme_file(const RoutingScheme& s, const std::string& path);
RoutingScheme read_scheme_file(const std::string& path, const LabeledGraph& g);

// --- G_k permutation reconstruction ---

// response of one bottom node's routing function: destination label ->
// neighbor label the message leaves over
using RoutingResponder = std::function<int(int)>;

// Recovers how the top row of G_k was labeled by querying each bottom-row
// function for all of k+1..3k and grouping labels reached over one edge.
// result[i] = label of the top node attached to middle position k+1+i.
std::vector<int> reconstruct_permutation(std::span<const RoutingResponder> fs, int k);
std::vector<int> reconstruct_permutation(const RoutingScheme& s, const LabeledGraph& gk, int k);

} // namespace routing

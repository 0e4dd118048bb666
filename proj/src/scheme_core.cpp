#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "routing/codec.hpp"
#include "routing/error.hpp"
#include "routing/graph.hpp"
#include "routing/lehmer.hpp"
#include "scheme_internal.hpp"

namespace routing {

std::string ModelSpec::to_string() const
{
    std::string s;
    switch (info) {
    case InfoModel::IA: s = "IA"; break;
    case InfoModel::IB: s = "IB"; break;
    case InfoModel::II: s = "II"; break;
    }
    s += '/';
    switch (relabel) {
    case RelabelModel::alpha: s += "alpha"; break;
    case RelabelModel::beta: s += "beta"; break;
    case RelabelModel::gamma: s += "gamma"; break;
    }
    return s;
}

ModelSpec ModelSpec::parse(std::string_view s)
{
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        fail(Errc::parse_error, "model spec must look like II/alpha");
    std::string_view a = s.substr(0, slash), b = s.substr(slash + 1);
    ModelSpec m;
    if (a == "IA")
        m.info = InfoModel::IA;
    else if (a == "IB")
        m.info = InfoModel::IB;
    else if (a == "II")
        m.info = InfoModel::II;
    else
        fail(Errc::parse_error, "unknown information model: " + std::string(a));
    if (b == "alpha")
        m.relabel = RelabelModel::alpha;
    else if (b == "beta")
        m.relabel = RelabelModel::beta;
    else if (b == "gamma")
        m.relabel = RelabelModel::gamma;
    else
        fail(Errc::parse_error, "unknown relabeling model: " + std::string(b));
    return m;
}

void require_legal(const ModelSpec& m, bool rewrites_ports)
{
    if (rewrites_ports && m.info == InfoModel::II)
        fail(Errc::illegal_model,
             "free port assignment with known neighbors is forbidden (it leaks "
             "deg*log(deg) free bits per node)");
    if (rewrites_ports && m.info == InfoModel::IA)
        fail(Errc::illegal_model, "model IA fixes the port assignment");
}

const char* action_kind_name(ActionKind k)
{
    switch (k) {
    case ActionKind::deliver: return "deliver";
    case ActionKind::forward_port: return "forward_port";
    case ActionKind::forward_neighbor: return "forward_neighbor";
    case ActionKind::probe_next: return "probe_next";
    }
    return "unknown";
}

const char* scheme_kind_name(SchemeKind k)
{
    switch (k) {
    case SchemeKind::canonical_sp: return "canonical_sp";
    case SchemeKind::sp_neighbor_known: return "sp_neighbor_known";
    case SchemeKind::sp_relabel: return "sp_relabel";
    case SchemeKind::stretch15: return "stretch15";
    case SchemeKind::stretch2_hub: return "stretch2_hub";
    case SchemeKind::stretch_logn: return "stretch_logn";
    case SchemeKind::sp_fixed_port: return "sp_fixed_port";
    case SchemeKind::full_info: return "full_info";
    }
    return "unknown";
}

SchemeKind scheme_kind_from_name(std::string_view name)
{
    for (int k = 1; k <= 8; ++k)
        if (name == scheme_kind_name(SchemeKind(k)))
            return SchemeKind(k);
    fail(Errc::parse_error, "unknown scheme kind: " + std::string(name));
}

void require_lemmas(const LabeledGraph& g, int c, bool need_coverage, bool need_degree)
{
    if (!check_diameter_two(g))
        fail(Errc::lemma_precondition, "check_diameter_two failed: graph diameter is not 2");
    if (need_coverage) {
        auto rep = check_coverage_lemma(g, c);
        if (!rep.passed)
            fail(Errc::lemma_precondition,
                 "check_coverage_lemma failed: " + std::to_string(rep.violations.size()) +
                     " uncovered pairs at c=" + std::to_string(c));
    }
    if (need_degree) {
        auto rep = check_degree_lemma(g, c);
        if (!rep.passed)
            fail(Errc::lemma_precondition,
                 "check_degree_lemma failed: " + std::to_string(rep.failing_nodes.size()) +
                     " nodes out of range");
    }
}

int rank_among_nonneighbors(const LabeledGraph& g, int u, int w)
{
    auto row = g.adjacency_row(u);
    std::size_t upto = std::size_t(w - 1); // count neighbors with label < w
    std::size_t full = upto / 64;
    int nbr_below = 0;
    for (std::size_t i = 0; i < full; ++i)
        nbr_below += int(std::popcount(row[i]));
    if (upto % 64)
        nbr_below += int(std::popcount(row[full] & ((std::uint64_t(1) << (upto % 64)) - 1)));
    return (w - 1) - nbr_below - (u < w ? 1 : 0);
}

int rank_among_nonneighbors(std::span<const int> sorted_nbrs, int u, int w)
{
    auto it = std::lower_bound(sorted_nbrs.begin(), sorted_nbrs.end(), w);
    return (w - 1) - int(it - sorted_nbrs.begin()) - (u < w ? 1 : 0);
}

int rank_in_sorted(std::span<const int> sorted, int v)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v)
        return -1;
    return int(it - sorted.begin());
}

// --- two-table construction (neighbor-known core) ---

BitString build_sp_tables(const LabeledGraph& g, int u, std::span<const int> cov,
                          BuildStats& stats, std::map<std::string, std::uint64_t>& comp)
{
    int n = g.node_count();
    double log2n = std::log2(double(n));

    // least covering stage per non-neighbor, ascending
    std::vector<int> stage;
    stage.reserve(n - 1 - g.degree(u));
    for (int w = 1; w <= n; ++w) {
        if (w == u || g.adjacent(u, w))
            continue;
        int t = 0;
        for (std::size_t i = 0; i < cov.size(); ++i) {
            if (g.adjacent(cov[i], w)) {
                t = int(i) + 1;
                break;
            }
        }
        if (t == 0)
            fail(Errc::construction_failure,
                 "no covering intermediate from " + std::to_string(u) + " to " +
                     std::to_string(w));
        stage.push_back(t);
    }

    // cutoff: run stages while m_{t-1} is still >= n / log2(n)
    std::vector<int> stage_count(cov.size() + 1, 0);
    for (int t : stage)
        stage_count[t]++;
    long long m_prev = (long long)stage.size();
    int l = 0;
    for (int t = 1; t <= int(cov.size()); ++t) {
        if (double(m_prev) * log2n < double(n))
            break;
        long long at = stage_count[t];
        if (3 * at <= m_prev)
            stats.claim_violations++;
        m_prev -= at;
        l = t;
    }
    stats.max_stage = std::max(stats.max_stage, l);

    BitString out;
    std::size_t before = out.size();
    for (int t : stage) {
        if (t <= l)
            out.append_unary(unsigned(t));
        else
            out.push_back(false);
    }
    comp["unary_table"] += out.size() - before;

    before = out.size();
    unsigned width = ceil_log2(std::uint64_t(cov.size()));
    for (int t : stage)
        if (t > l)
            out.append_bits(std::uint64_t(t - 1), width);
    comp["explicit_table"] += out.size() - before;
    return out;
}

std::vector<int> decode_sp_tables(BitReader& r, std::size_t a0_count, int cov_size, int n)
{
    double log2n = std::log2(double(n));
    std::vector<int> stage(a0_count, 0);
    std::size_t deferred = 0;
    for (std::size_t i = 0; i < a0_count; ++i) {
        unsigned t = r.read_unary();
        stage[i] = int(t);
        if (t == 0)
            ++deferred;
    }
    // the decoder recomputes the stage cutoff to sanity-check the unary depths
    std::vector<long long> stage_count(std::size_t(cov_size) + 1, 0);
    for (int t : stage)
        if (t >= 1)
            stage_count[t]++;
    long long m_prev = (long long)a0_count;
    int l = 0;
    for (int t = 1; t <= cov_size; ++t) {
        if (double(m_prev) * log2n < double(n))
            break;
        m_prev -= stage_count[t];
        l = t;
    }
    for (int t : stage)
        if (t > l)
            fail(Errc::parse_error, "unary stage beyond the table cutoff");
    unsigned width = ceil_log2(std::uint64_t(cov_size));
    for (std::size_t i = 0; i < a0_count && deferred; ++i) {
        if (stage[i] == 0) {
            int t = int(r.read_bits(width)) + 1;
            if (t > cov_size)
                fail(Errc::parse_error, "explicit table entry out of range");
            stage[i] = t;
            --deferred;
        }
    }
    return stage;
}

// --- decoded views ---

namespace {

std::vector<int> bitmap_to_list(BitReader& r, int u, int n)
{
    std::vector<int> nbrs;
    for (int w = 1; w <= n; ++w) {
        if (w == u)
            continue;
        if (r.read_bit())
            nbrs.push_back(w);
    }
    return nbrs;
}

std::vector<int> invert_rank_perm(const std::vector<int>& pi)
{
    std::vector<int> port_of_rank(pi.size() + 1, 0);
    for (std::size_t p = 0; p < pi.size(); ++p)
        port_of_rank[pi[p]] = int(p) + 1;
    return port_of_rank;
}

} // namespace

std::shared_ptr<const DecodedViews> decode_views(const RoutingScheme& s, const LabeledGraph& g)
{
    int n = g.node_count();
    if (s.n != n)
        fail(Errc::invalid_argument, "scheme was built for a different node count");
    auto views = std::make_shared<DecodedViews>();
    views->node.resize(n + 1);
    for (int u = 1; u <= n; ++u) {
        NodeView& v = views->node[u];
        BitReader r(s.encodings[u]);
        if (r.read_bits(kSchemeTagBits) != std::uint64_t(s.kind))
            fail(Errc::parse_error, "encoding tag does not match the scheme kind");
        int deg = g.degree(u);
        std::size_t a0 = std::size_t(n) - 1 - std::size_t(deg);
        switch (s.kind) {
        case SchemeKind::canonical_sp: {
            unsigned width = ceil_log2(std::uint64_t(n));
            v.next.resize(a0);
            for (std::size_t i = 0; i < a0; ++i)
                v.next[i] = int(r.read_bits(width)) + 1;
            break;
        }
        case SchemeKind::sp_neighbor_known: {
            v.cov = coverage_set(g, u, s.c).members;
            if (s.model.info == InfoModel::IB) {
                v.bitmap_nbrs = bitmap_to_list(r, u, n);
                auto stage = decode_sp_tables(r, a0, int(v.cov.size()), n);
                v.next_port.resize(a0);
                // ports are rank-ordered under IB, so stage t sits behind port t
                for (std::size_t i = 0; i < a0; ++i)
                    v.next_port[i] = stage[i];
            } else {
                auto stage = decode_sp_tables(r, a0, int(v.cov.size()), n);
                v.next.resize(a0);
                for (std::size_t i = 0; i < a0; ++i)
                    v.next[i] = v.cov[stage[i] - 1];
            }
            break;
        }
        case SchemeKind::sp_relabel:
            break; // tag only; destination labels carry everything
        case SchemeKind::stretch15: {
            v.is_center = r.read_bit();
            if (v.is_center) {
                v.cov = coverage_set(g, u, s.c).members;
                auto stage = decode_sp_tables(r, a0, int(v.cov.size()), n);
                v.next.resize(a0);
                for (std::size_t i = 0; i < a0; ++i)
                    v.next[i] = v.cov[stage[i] - 1];
            } else {
                v.hub = int(r.read_bits(bit_width_for(std::uint64_t(n))));
                if (v.hub < 1 || v.hub > n)
                    fail(Errc::parse_error, "stretch15 hub pointer out of range");
            }
            break;
        }
        case SchemeKind::stretch2_hub: {
            if (u == 1) {
                v.cov = coverage_set(g, u, s.c).members;
                auto stage = decode_sp_tables(r, a0, int(v.cov.size()), n);
                v.next.resize(a0);
                for (std::size_t i = 0; i < a0; ++i)
                    v.next[i] = v.cov[stage[i] - 1];
            } else if (!g.adjacent(u, 1)) {
                v.cov = coverage_set(g, u, s.c).members;
                unsigned width = ceil_log2(v.cov.size());
                std::size_t j = r.read_bits(width);
                if (j >= v.cov.size())
                    fail(Errc::parse_error, "stretch2 uplink index out of range");
                v.hub = v.cov[j];
            }
            break;
        }
        case SchemeKind::stretch_logn:
            v.cov = coverage_set(g, u, s.c).members;
            break;
        case SchemeKind::sp_fixed_port: {
            v.bitmap_nbrs = bitmap_to_list(r, u, n);
            v.port_of_rank = invert_rank_perm(read_permutation(r, int(v.bitmap_nbrs.size())));
            int m = std::min<int>(int(v.bitmap_nbrs.size()), coverage_target(n, s.c));
            auto stage = decode_sp_tables(r, a0, m, n);
            v.next_port.resize(a0);
            for (std::size_t i = 0; i < a0; ++i)
                v.next_port[i] = v.port_of_rank[stage[i]];
            break;
        }
        case SchemeKind::full_info: {
            v.bitmap_nbrs = bitmap_to_list(r, u, n);
            v.port_of_rank = invert_rank_perm(read_permutation(r, int(v.bitmap_nbrs.size())));
            v.dest_maps_pos = r.pos();
            r.skip(a0 * v.bitmap_nbrs.size());
            break;
        }
        }
        if (!r.done())
            fail(Errc::parse_error, "trailing bits in encoding of node " + std::to_string(u));
    }
    return views;
}

// --- evaluation ---

namespace {

int relabel_field_width(int n)
{
    return int(ceil_log2(std::uint64_t(n)));
}

} // namespace

EvalResult evaluate(const RoutingScheme& s, const LabeledGraph& g, int node,
                    const DestRef& dst, const Header& h)
{
    const NodeView& v = s.views->node[node];
    int n = g.node_count();
    EvalResult res;
    res.header = h;

    if (s.model.relabel == RelabelModel::gamma) {
        if (dst.gamma == nullptr)
            fail(Errc::invalid_label, "gamma scheme needs a gamma destination label");
        unsigned width = unsigned(relabel_field_width(n));
        const BitString& lab = *dst.gamma;
        if (lab.size() != s.labels[1].size())
            fail(Errc::invalid_label, "destination label has the wrong length");
        int w = int(lab.get_bits(0, width)) + 1;
        if (w < 1 || w > n)
            fail(Errc::invalid_label, "destination label decodes out of range");
        if (w == node) {
            res.action = {ActionKind::deliver, 0};
            return res;
        }
        if (g.adjacent(node, w)) {
            res.action = {ActionKind::forward_neighbor, w};
            return res;
        }
        std::size_t entries = (lab.size() / width) - 1;
        for (std::size_t i = 0; i < entries; ++i) {
            int e = int(lab.get_bits((i + 1) * width, width)) + 1;
            if (e > n)
                fail(Errc::invalid_label, "coverage entry decodes out of range");
            if (g.adjacent(node, e)) {
                res.action = {ActionKind::forward_neighbor, e};
                return res;
            }
        }
        fail(Errc::construction_failure,
             "no neighbor of " + std::to_string(node) + " occurs in the destination label");
    }

    int w = dst.plain;
    if (w < 1 || w > n)
        fail(Errc::invalid_label, "destination out of range");
    if (w == node) {
        res.action = {ActionKind::deliver, 0};
        return res;
    }

    switch (s.kind) {
    case SchemeKind::canonical_sp: {
        if (g.adjacent(node, w)) {
            res.action = {ActionKind::forward_neighbor, w};
            return res;
        }
        int next = v.next[rank_among_nonneighbors(g, node, w)];
        if (next == node)
            fail(Errc::invalid_label, "no route recorded for this destination");
        res.action = {ActionKind::forward_neighbor, next};
        return res;
    }
    case SchemeKind::sp_neighbor_known: {
        if (s.model.info == InfoModel::IB) {
            int r = rank_in_sorted(v.bitmap_nbrs, w);
            if (r >= 0) {
                res.action = {ActionKind::forward_port, r + 1}; // rank-ordered ports
                return res;
            }
            int rank = rank_among_nonneighbors(v.bitmap_nbrs, node, w);
            res.action = {ActionKind::forward_port, v.next_port[rank]};
            return res;
        }
        if (g.adjacent(node, w)) {
            res.action = {ActionKind::forward_neighbor, w};
            return res;
        }
        res.action = {ActionKind::forward_neighbor, v.next[rank_among_nonneighbors(g, node, w)]};
        return res;
    }
    case SchemeKind::sp_relabel:
        fail(Errc::invalid_label, "unreachable"); // handled above
    case SchemeKind::stretch15: {
        if (g.adjacent(node, w)) {
            res.action = {ActionKind::forward_neighbor, w};
            return res;
        }
        if (v.is_center) {
            res.action = {ActionKind::forward_neighbor,
                          v.next[rank_among_nonneighbors(g, node, w)]};
            return res;
        }
        res.action = {ActionKind::forward_neighbor, v.hub};
        return res;
    }
    case SchemeKind::stretch2_hub: {
        if (g.adjacent(node, w)) {
            res.action = {ActionKind::forward_neighbor, w};
            return res;
        }
        if (node == 1) {
            res.action = {ActionKind::forward_neighbor,
                          v.next[rank_among_nonneighbors(g, node, w)]};
            return res;
        }
        // route toward the hub
        if (g.adjacent(node, 1)) {
            res.action = {ActionKind::forward_neighbor, 1};
            return res;
        }
        res.action = {ActionKind::forward_neighbor, v.hub};
        return res;
    }
    case SchemeKind::stretch_logn: {
        if (g.adjacent(node, w)) {
            res.action = {ActionKind::forward_neighbor, w};
            res.header = Header{};
            return res;
        }
        if (h.probing && !h.failed) {
            // probed node: not my neighbor either, send it back
            res.action = {ActionKind::probe_next, 0};
            return res;
        }
        int next_probe = h.failed ? h.probe_index + 1 : 1;
        if (next_probe > int(v.cov.size()))
            fail(Errc::probe_exhausted,
                 "all " + std::to_string(v.cov.size()) + " coverage probes failed from node " +
                     std::to_string(node));
        res.header = Header{true, false, next_probe};
        res.action = {ActionKind::forward_neighbor, v.cov[next_probe - 1]};
        return res;
    }
    case SchemeKind::sp_fixed_port: {
        int r = rank_in_sorted(v.bitmap_nbrs, w);
        if (r >= 0) {
            res.action = {ActionKind::forward_port, v.port_of_rank[r + 1]};
            return res;
        }
        int rank = rank_among_nonneighbors(v.bitmap_nbrs, node, w);
        res.action = {ActionKind::forward_port, v.next_port[rank]};
        return res;
    }
    case SchemeKind::full_info: {
        auto ports = evaluate_full_ports(s, g, node, w);
        res.action = {ActionKind::forward_port, ports.front()};
        return res;
    }
    }
    fail(Errc::invalid_argument, "unknown scheme kind");
}

std::vector<int> evaluate_full_ports(const RoutingScheme& s, const LabeledGraph& g,
                                     int node, int dst)
{
    (void)g; // the decoded bitmap and permutation carry all the knowledge here
    if (s.kind != SchemeKind::full_info)
        fail(Errc::invalid_argument, "scheme does not carry full routing information");
    const NodeView& v = s.views->node[node];
    if (dst == node)
        fail(Errc::invalid_label, "destination equals the evaluating node");
    int r = rank_in_sorted(v.bitmap_nbrs, dst);
    if (r >= 0)
        return {v.port_of_rank[r + 1]};
    int rank = rank_among_nonneighbors(v.bitmap_nbrs, node, dst);
    std::size_t d = v.bitmap_nbrs.size();
    std::size_t pos = v.dest_maps_pos + std::size_t(rank) * d;
    std::vector<int> ports;
    const BitString& enc = s.encodings[node];
    for (std::size_t t = 0; t < d; ++t)
        if (enc.bit(pos + t))
            ports.push_back(v.port_of_rank[t + 1]);
    if (ports.empty())
        fail(Errc::invalid_label,
             "no shortest-path edge recorded from " + std::to_string(node) + " to " +
                 std::to_string(dst));
    std::sort(ports.begin(), ports.end());
    return ports;
}

// --- size accounting ---

SizeReport measure_size(const RoutingScheme& s)
{
    SizeReport rep;
    rep.per_node_bits.assign(s.n + 1, 0);
    rep.label_bits.assign(s.n + 1, 0);
    for (int u = 1; u <= s.n; ++u) {
        rep.per_node_bits[u] = s.encodings[u].size();
        if (s.model.relabel == RelabelModel::gamma)
            rep.label_bits[u] = s.labels[u].size();
        rep.total_bits += rep.per_node_bits[u] + rep.label_bits[u];
        rep.total_label_bits += rep.label_bits[u];
        rep.max_node_bits = std::max(rep.max_node_bits, rep.per_node_bits[u]);
    }
    rep.breakdown = s.component_bits;
    return rep;
}

// --- serialization ---

std::string scheme_to_text(const RoutingScheme& s)
{
    BitString body;
    for (int u = 1; u <= s.n; ++u) {
        if (s.model.relabel == RelabelModel::gamma)
            body.append(sd_encode_prime(s.labels[u]));
        body.append(sd_encode_prime(s.encodings[u]));
    }
    std::string out;
    out += "scheme=" + std::string(scheme_kind_name(s.kind)) + "\n";
    out += "model=" + s.model.to_string() + "\n";
    out += "n=" + std::to_string(s.n) + "\n";
    out += "c=" + std::to_string(s.c) + "\n";
    out += "ports=" + s.port_spec + "\n";
    out += "nbits=" + std::to_string(body.size()) + "\n";
    out += body.to_hex() + "\n";
    return out;
}

namespace {

std::string_view take_line(std::string_view& rest)
{
    std::size_t nl = rest.find('\n');
    if (nl == std::string_view::npos)
        fail(Errc::parse_error, "truncated scheme file");
    std::string_view line = rest.substr(0, nl);
    rest.remove_prefix(nl + 1);
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

std::string_view expect_key(std::string_view line, std::string_view key)
{
    if (line.substr(0, key.size()) != key || line.size() <= key.size() ||
        line[key.size()] != '=')
        fail(Errc::parse_error, "expected " + std::string(key) + "=... line");
    return line.substr(key.size() + 1);
}

} // namespace

RoutingScheme scheme_from_text(std::string_view text, const LabeledGraph& g)
{
    std::string_view rest = text;
    RoutingScheme s;
    s.kind = scheme_kind_from_name(expect_key(take_line(rest), "scheme"));
    s.model = ModelSpec::parse(expect_key(take_line(rest), "model"));
    s.n = std::stoi(std::string(expect_key(take_line(rest), "n")));
    s.c = std::stoi(std::string(expect_key(take_line(rest), "c")));
    s.port_spec = std::string(expect_key(take_line(rest), "ports"));
    std::size_t nbits = std::stoull(std::string(expect_key(take_line(rest), "nbits")));
    std::string_view hex = rest;
    while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r'))
        hex.remove_suffix(1);
    if (s.n != g.node_count())
        fail(Errc::invalid_argument, "scheme file node count does not match the graph");

    BitString body = BitString::from_hex(hex, nbits);
    BitReader r(body);
    s.encodings.resize(s.n + 1);
    if (s.model.relabel == RelabelModel::gamma)
        s.labels.resize(s.n + 1);
    for (int u = 1; u <= s.n; ++u) {
        if (s.model.relabel == RelabelModel::gamma)
            s.labels[u] = read_prime(r);
        s.encodings[u] = read_prime(r);
    }
    if (!r.done())
        fail(Errc::parse_error, "trailing bits in scheme body");

    if (s.port_spec == "none") {
        // pass
    } else if (s.port_spec == "canonical") {
        s.ports = PortAssignment::canonical(g);
    } else if (s.port_spec.rfind("seed:", 0) == 0) {
        s.ports = PortAssignment::random_shuffle(g, std::stoull(s.port_spec.substr(5)));
    } else {
        fail(Errc::parse_error, "unknown ports spec: " + s.port_spec);
    }
    s.views = decode_views(s, g);
    return s;
}

void write_scheme_file(const RoutingScheme& s, const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        fail(Errc::io_error, "cannot open " + path + " for writing");
    f << scheme_to_text(s);
    if (!f)
        fail(Errc::io_error, "write failed: " + path);
}

RoutingScheme read_scheme_file(const std::string& path, const LabeledGraph& g)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        fail(Errc::io_error, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return scheme_from_text(ss.str(), g);
}

} // namespace routing

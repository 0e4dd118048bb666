#include <algorithm>

#include "routing/error.hpp"
#include "routing/lehmer.hpp"
#include "scheme_internal.hpp"

namespace routing {

namespace {

void start_encoding(BitString& enc, SchemeKind kind,
                    std::map<std::string, std::uint64_t>& comp)
{
    enc.append_bits(std::uint64_t(kind), kSchemeTagBits);
    comp["program_tag"] += kSchemeTagBits;
}

void append_neighbor_bitmap(BitString& enc, const LabeledGraph& g, int u,
                            std::map<std::string, std::uint64_t>& comp)
{
    int n = g.node_count();
    for (int w = 1; w <= n; ++w) {
        if (w == u)
            continue;
        enc.push_back(g.adjacent(u, w));
    }
    comp["neighbor_bitmap"] += std::size_t(n) - 1;
}

RoutingScheme make_scheme(SchemeKind kind, ModelSpec model, const LabeledGraph& g, int c)
{
    RoutingScheme s;
    s.kind = kind;
    s.model = model;
    s.n = g.node_count();
    s.c = c;
    s.encodings.resize(s.n + 1);
    return s;
}

} // namespace

RoutingScheme build_canonical_sp(const LabeledGraph& g)
{
    int n = g.node_count();
    RoutingScheme s = make_scheme(SchemeKind::canonical_sp,
                                  {InfoModel::II, RelabelModel::alpha}, g, 0);
    unsigned width = ceil_log2(std::uint64_t(n));
    auto dist = all_pairs_distances(g);
    for (int u = 1; u <= n; ++u) {
        BitString& enc = s.encodings[u];
        start_encoding(enc, s.kind, s.component_bits);
        std::size_t before = enc.size();
        for (int w = 1; w <= n; ++w) {
            if (w == u || g.adjacent(u, w))
                continue;
            int next = u; // self marks "no route"
            if (dist[u][w] > 0) {
                for (int v : g.neighbors(u)) {
                    if (dist[v][w] == dist[u][w] - 1) { // least such intermediary
                        next = v;
                        break;
                    }
                }
            }
            enc.append_bits(std::uint64_t(next - 1), width);
        }
        s.component_bits["explicit_table"] += enc.size() - before;
    }
    s.views = decode_views(s, g);
    return s;
}

RoutingScheme build_sp_neighbor_known(const LabeledGraph& g, int c, ModelSpec model)
{
    if (model.info == InfoModel::IA)
        fail(Errc::illegal_model,
             "neighbor-known construction needs model II, or IB with rank-ordered ports");
    if (model.relabel != RelabelModel::alpha)
        fail(Errc::illegal_model, "neighbor-known construction does not relabel");
    require_legal(model, /*rewrites_ports=*/model.info == InfoModel::IB);
    require_lemmas(g, c, /*need_coverage=*/true, /*need_degree=*/false);

    RoutingScheme s = make_scheme(SchemeKind::sp_neighbor_known, model, g, c);
    for (int u = 1; u <= g.node_count(); ++u) {
        BitString& enc = s.encodings[u];
        start_encoding(enc, s.kind, s.component_bits);
        if (model.info == InfoModel::IB)
            append_neighbor_bitmap(enc, g, u, s.component_bits);
        auto cov = coverage_set(g, u, c);
        enc.append(build_sp_tables(g, u, cov.members, s.stats, s.component_bits));
    }
    if (model.info == InfoModel::IB) {
        // rank-ordered rewrite: port i leads to the i-th least neighbor;
        // the convention itself is charged zero bits
        s.ports = PortAssignment::canonical(g);
        s.port_spec = "canonical";
    }
    s.views = decode_views(s, g);
    return s;
}

RoutingScheme build_sp_relabel(const LabeledGraph& g, int c)
{
    require_lemmas(g, c, /*need_coverage=*/true, /*need_degree=*/false);
    int n = g.node_count();
    RoutingScheme s = make_scheme(SchemeKind::sp_relabel,
                                  {InfoModel::II, RelabelModel::gamma}, g, c);
    s.labels.resize(n + 1);
    unsigned width = ceil_log2(std::uint64_t(n));
    int target = coverage_target(n, c);
    for (int u = 1; u <= n; ++u) {
        start_encoding(s.encodings[u], s.kind, s.component_bits);
        BitString& lab = s.labels[u];
        lab.append_bits(std::uint64_t(u - 1), width);
        auto cov = coverage_set(g, u, c);
        for (int v : cov.members)
            lab.append_bits(std::uint64_t(v - 1), width);
        if (int(cov.members.size()) < target) {
            // short coverage set: pad with the owner's own label, which can
            // never match a neighbor of a node still scanning the list
            s.stats.padded_labels++;
            for (int i = int(cov.members.size()); i < target; ++i)
                lab.append_bits(std::uint64_t(u - 1), width);
        }
        s.component_bits["labels"] += lab.size();
    }
    s.views = decode_views(s, g);
    return s;
}

RoutingScheme build_stretch15(const LabeledGraph& g, int c)
{
    require_lemmas(g, c, /*need_coverage=*/true, /*need_degree=*/false);
    int n = g.node_count();
    RoutingScheme s = make_scheme(SchemeKind::stretch15,
                                  {InfoModel::II, RelabelModel::alpha}, g, c);

    auto centers = coverage_set(g, 1, c).members;
    centers.push_back(1);
    std::sort(centers.begin(), centers.end());
    std::vector<bool> is_center(n + 1, false);
    for (int b : centers)
        is_center[b] = true;

    for (int u = 1; u <= n; ++u) {
        BitString& enc = s.encodings[u];
        start_encoding(enc, s.kind, s.component_bits);
        enc.push_back(is_center[u]);
        s.component_bits["mode_flag"] += 1;
        if (is_center[u]) {
            auto cov = coverage_set(g, u, c);
            enc.append(build_sp_tables(g, u, cov.members, s.stats, s.component_bits));
        } else {
            int hub = 0;
            for (int v : g.neighbors(u)) {
                if (is_center[v]) {
                    hub = v;
                    break;
                }
            }
            if (hub == 0)
                fail(Errc::center_uncovered,
                     "node " + std::to_string(u) + " has no neighbor among the routing centers");
            enc.append_bits(std::uint64_t(hub), bit_width_for(std::uint64_t(n)));
            s.component_bits["hub_pointer"] += bit_width_for(std::uint64_t(n));
        }
    }
    s.views = decode_views(s, g);
    return s;
}

RoutingScheme build_stretch2_hub(const LabeledGraph& g, int c)
{
    require_lemmas(g, c, /*need_coverage=*/true, /*need_degree=*/false);
    int n = g.node_count();
    RoutingScheme s = make_scheme(SchemeKind::stretch2_hub,
                                  {InfoModel::II, RelabelModel::alpha}, g, c);
    for (int u = 1; u <= n; ++u) {
        BitString& enc = s.encodings[u];
        start_encoding(enc, s.kind, s.component_bits);
        if (u == 1) {
            auto cov = coverage_set(g, u, c);
            std::map<std::string, std::uint64_t> hub_comp;
            BitString tables = build_sp_tables(g, u, cov.members, s.stats, hub_comp);
            enc.append(tables);
            s.component_bits["hub_table"] += tables.size();
        } else if (!g.adjacent(u, 1)) {
            auto cov = coverage_set(g, u, c);
            std::size_t j = 0;
            while (j < cov.members.size() && !g.adjacent(cov.members[j], 1))
                ++j;
            if (j == cov.members.size())
                fail(Errc::construction_failure,
                     "no coverage member of " + std::to_string(u) + " reaches the hub");
            unsigned width = ceil_log2(cov.members.size());
            enc.append_bits(std::uint64_t(j), width);
            s.component_bits["coverage_index"] += width;
        }
        // immediate hub neighbors carry the tag alone
    }
    s.views = decode_views(s, g);
    return s;
}

RoutingScheme build_stretch_logn(const LabeledGraph& g, int c)
{
    require_lemmas(g, c, /*need_coverage=*/true, /*need_degree=*/false);
    RoutingScheme s = make_scheme(SchemeKind::stretch_logn,
                                  {InfoModel::II, RelabelModel::alpha}, g, c);
    for (int u = 1; u <= g.node_count(); ++u)
        start_encoding(s.encodings[u], s.kind, s.component_bits);
    s.views = decode_views(s, g);
    return s;
}

RoutingScheme build_sp_fixed_port(const LabeledGraph& g, const PortAssignment& ports, int c,
                                  std::string_view port_spec)
{
    require_lemmas(g, c, /*need_coverage=*/true, /*need_degree=*/false);
    RoutingScheme s = make_scheme(SchemeKind::sp_fixed_port,
                                  {InfoModel::IA, RelabelModel::alpha}, g, c);
    for (int u = 1; u <= g.node_count(); ++u) {
        BitString& enc = s.encodings[u];
        start_encoding(enc, s.kind, s.component_bits);
        append_neighbor_bitmap(enc, g, u, s.component_bits);
        auto pi = ports.rank_permutation(g, u);
        std::size_t before = enc.size();
        append_permutation(enc, pi);
        s.component_bits["port_permutation"] += enc.size() - before;
        auto cov = coverage_set(g, u, c);
        enc.append(build_sp_tables(g, u, cov.members, s.stats, s.component_bits));
    }
    s.ports = ports;
    s.port_spec = std::string(port_spec);
    s.views = decode_views(s, g);
    return s;
}

RoutingScheme build_full_info(const LabeledGraph& g, const PortAssignment& ports,
                              std::string_view port_spec)
{
    if (!check_diameter_two(g))
        fail(Errc::lemma_precondition, "check_diameter_two failed: graph diameter is not 2");
    {
        auto rep = check_degree_lemma(g, 3);
        if (!rep.passed)
            fail(Errc::lemma_precondition,
                 "check_degree_lemma failed: " + std::to_string(rep.failing_nodes.size()) +
                     " nodes out of range");
    }
    int n = g.node_count();
    RoutingScheme s = make_scheme(SchemeKind::full_info,
                                  {InfoModel::IA, RelabelModel::alpha}, g, 0);
    for (int u = 1; u <= n; ++u) {
        BitString& enc = s.encodings[u];
        start_encoding(enc, s.kind, s.component_bits);
        append_neighbor_bitmap(enc, g, u, s.component_bits);
        auto pi = ports.rank_permutation(g, u);
        std::size_t before = enc.size();
        append_permutation(enc, pi);
        s.component_bits["port_permutation"] += enc.size() - before;
        before = enc.size();
        auto nbrs = g.neighbors(u);
        for (int w = 1; w <= n; ++w) {
            if (w == u || g.adjacent(u, w))
                continue;
            // one bit per neighbor: does u -> v -> w stay on a shortest path
            for (int v : nbrs)
                enc.push_back(g.adjacent(v, w));
        }
        s.component_bits["destination_bitmaps"] += enc.size() - before;
    }
    s.ports = ports;
    s.port_spec = std::string(port_spec);
    s.views = decode_views(s, g);
    return s;
}

} // namespace routing

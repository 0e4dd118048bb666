#include <doctest.h>

#include <algorithm>

#include "routing/error.hpp"
#include "routing/lehmer.hpp"
#include "routing/scheme.hpp"
#include "routing/simulator.hpp"

using namespace routing;

namespace {

LabeledGraph k4_minus_34()
{
    // node 1 and 2 see everyone; diameter 2 through the missing (3,4) edge
    std::vector<std::pair<int, int>> e{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    return LabeledGraph::from_edges(4, e);
}

LabeledGraph complete(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            e.emplace_back(u, v);
    return LabeledGraph::from_edges(n, e);
}

std::uint64_t breakdown_total(const SizeReport& rep)
{
    std::uint64_t t = 0;
    for (auto& [name, bits] : rep.breakdown)
        t += bits;
    return t;
}

} // namespace

TEST_CASE("model spec parsing and legality")
{
    CHECK(ModelSpec{InfoModel::IA, RelabelModel::alpha}.to_string() == "IA/alpha");
    CHECK(ModelSpec::parse("II/gamma") == ModelSpec{InfoModel::II, RelabelModel::gamma});
    CHECK_THROWS_AS((void)ModelSpec::parse("IX/alpha"), Error);
    CHECK_THROWS_AS(require_legal({InfoModel::II, RelabelModel::alpha}, true), Error);
    CHECK_NOTHROW(require_legal({InfoModel::IB, RelabelModel::alpha}, true));
    CHECK_NOTHROW(require_legal({InfoModel::II, RelabelModel::alpha}, false));
}

TEST_CASE("builders reject graphs that fail the structure checks")
{
    // complete graphs have diameter 1, paths have diameter 3+
    CHECK_THROWS_WITH_AS((void)build_sp_neighbor_known(complete(16), 3),
                         doctest::Contains("check_diameter_two"), Error);
    std::vector<std::pair<int, int>> pe{{1, 2}, {2, 3}, {3, 4}};
    LabeledGraph p4 = LabeledGraph::from_edges(4, pe);
    CHECK_THROWS_AS((void)build_stretch15(p4, 3), Error);
    CHECK_THROWS_AS((void)build_full_info(p4, PortAssignment::canonical(p4)), Error);
}

TEST_CASE("neighbor-known tables vanish when a node sees everyone")
{
    LabeledGraph g = k4_minus_34();
    RoutingScheme s = build_sp_neighbor_known(g, 0);
    // nodes 1 and 2 have no non-neighbors: tag only
    CHECK(s.encodings[1].size() == 8);
    CHECK(s.encodings[2].size() == 8);
    // 3 and 4 each defer to one covering intermediate
    CHECK(s.encodings[3].size() > 8);

    auto rep = verify_shortest(g, s);
    CHECK(rep.passed);
    CHECK(rep.pairs == 12);
}

TEST_CASE("neighbor-known scheme routes shortest on uniform graphs")
{
    LabeledGraph g = generate_uniform(128, 7);
    RoutingScheme s = build_sp_neighbor_known(g, 3);
    auto rep = verify_shortest(g, s);
    CHECK(rep.passed);
    CHECK(rep.pairs == 128 * 127);

    SizeReport size = measure_size(s);
    CHECK(size.max_node_bits <= 6 * 128);
    CHECK(size.total_bits == breakdown_total(size));
    CHECK(size.breakdown.at("program_tag") == 8 * 128);
    CHECK(size.breakdown.count("unary_table") == 1);
    CHECK(size.breakdown.count("explicit_table") == 1);

    // the stage-shrinkage claim holds for nearly every node at this scale
    CHECK(s.stats.claim_violations <= 128 / 20);
}

TEST_CASE("neighbor-known scheme under rewritten ports")
{
    LabeledGraph g = generate_uniform(64, 11);
    RoutingScheme s = build_sp_neighbor_known(g, 3, {InfoModel::IB, RelabelModel::alpha});
    CHECK(s.ports.has_value());
    CHECK(s.port_spec == "canonical");

    auto rep = verify_shortest(g, s);
    CHECK(rep.passed);

    // forwarding must be expressible as ports here
    RouteResult r = route(g, s, 1, 2);
    for (const auto& a : r.actions)
        CHECK(a.kind == ActionKind::forward_port);

    // bitmap adds n-1 bits on top of the model-II table budget
    SizeReport size = measure_size(s);
    CHECK(size.max_node_bits <= 7 * 64 + 8);
    CHECK(size.breakdown.at("neighbor_bitmap") == 63 * 64);

    CHECK_THROWS_AS(
        (void)build_sp_neighbor_known(g, 3, {InfoModel::IA, RelabelModel::alpha}), Error);
}

TEST_CASE("relabeled scheme: label layout and shortest routes")
{
    LabeledGraph g = generate_uniform(256, 7);
    RoutingScheme s = build_sp_relabel(g, 3);
    CHECK(s.model.relabel == RelabelModel::gamma);
    SizeReport size = measure_size(s);
    for (int u = 1; u <= 256; ++u) {
        CHECK(size.label_bits[u] == (1 + 48) * 8);
        CHECK(size.per_node_bits[u] == 8); // the constant program tag
    }
    CHECK(s.stats.padded_labels == 0);
    CHECK(size.total_bits == 256 * 392 + 256 * 8);

    auto rep = verify_shortest(g, s);
    CHECK(rep.passed);
}

TEST_CASE("relabeled scheme pads short coverage lists and reports it")
{
    // at n=16, c=0 the target (12) exceeds typical degrees; the first
    // diameter-2 seed is deterministic
    std::uint64_t seed = 1;
    while (!check_diameter_two(generate_uniform(16, seed)))
        ++seed;
    LabeledGraph g = generate_uniform(16, seed);
    RoutingScheme s = build_sp_relabel(g, 0);
    CHECK(s.stats.padded_labels > 0);
    for (int u = 1; u <= 16; ++u)
        CHECK(s.labels[u].size() == std::size_t(1 + coverage_target(16, 0)) * 4);
    auto rep = verify_shortest(g, s);
    CHECK(rep.passed);
}

TEST_CASE("stretch-1.5 scheme structure and bound")
{
    int n = 128;
    LabeledGraph g = generate_uniform(n, 7);
    RoutingScheme s = build_stretch15(g, 3);

    auto centers = coverage_set(g, 1, 3).members;
    std::size_t center_count = centers.size() + 1;
    std::size_t satellites = 0;
    SizeReport size = measure_size(s);
    for (int u = 1; u <= n; ++u) {
        if (size.per_node_bits[u] <= 8 + 1 + 8)
            ++satellites;
        else
            CHECK(size.per_node_bits[u] <= 6 * n + 16);
    }
    CHECK(satellites == std::size_t(n) - center_count);

    auto sr = max_stretch(g, s);
    CHECK_FALSE(rational_less(Rational{3, 2}, sr.max_stretch)); // <= 1.5
    CHECK((sr.max_stretch == Rational{3, 2} || sr.max_stretch == Rational{1, 1}));
    CHECK(sr.undelivered == 0);

    // adjacent pairs go direct
    int w = g.neighbors(5).front();
    RouteResult r = route(g, s, 5, w);
    CHECK(r.path == std::vector<int>{5, w});
    CHECK(r.stretch == Rational{1, 1});
}

TEST_CASE("stretch-2 hub scheme")
{
    int n = 128;
    LabeledGraph g = generate_uniform(n, 7);
    RoutingScheme s = build_stretch2_hub(g, 3);

    SizeReport size = measure_size(s);
    for (int u = 2; u <= n; ++u)
        CHECK(size.per_node_bits[u] <= 8 + 6); // tag + coverage index
    CHECK(size.breakdown.at("hub_table") > 0);

    int worst_hops = 0;
    auto dist = all_pairs_distances(g);
    for (int u = 1; u <= n; ++u)
        for (int w = 1; w <= n; ++w) {
            if (u == w)
                continue;
            RouteResult r = route(g, s, u, w, dist[u][w]);
            CHECK(r.delivered);
            worst_hops = std::max(worst_hops, int(r.path.size()) - 1);
            CHECK_FALSE(rational_less(Rational{2, 1}, r.stretch));
        }
    CHECK(worst_hops <= 4);
}

TEST_CASE("probe scheme: traversal accounting")
{
    int n = 128;
    LabeledGraph g = generate_uniform(n, 7);
    RoutingScheme s = build_stretch_logn(g, 3);
    SizeReport size = measure_size(s);
    CHECK(size.total_bits == std::uint64_t(n) * 8); // nothing but the tags

    auto dist = all_pairs_distances(g);
    int cap = 2 * coverage_target(n, 3);
    for (int u = 1; u <= n; ++u) {
        for (int w = 1; w <= n; ++w) {
            if (u == w)
                continue;
            RouteResult r = route(g, s, u, w, dist[u][w]);
            REQUIRE(r.delivered);
            if (dist[u][w] == 1) {
                CHECK(r.edge_traversals == 1);
            } else {
                // each failed probe walks one edge out and back
                CHECK(r.edge_traversals == 2 * r.failed_probes + 2);
                CHECK(r.net_length() == 2);
            }
            CHECK(r.edge_traversals <= cap);
        }
    }

    // a bounced walk revisits the source between probes
    for (int w = 1; w <= n; ++w) {
        if (w == 1 || g.adjacent(1, w))
            continue;
        RouteResult r = route(g, s, 1, w, 2);
        if (r.failed_probes > 0) {
            CHECK(r.path[0] == 1);
            CHECK(r.path[2] == 1);
        }
        break;
    }
}

TEST_CASE("probe scheme: exhaustion surfaces as an error")
{
    LabeledGraph g = generate_uniform(64, 2);
    RoutingScheme s = build_stretch_logn(g, 3);
    int m = int(coverage_set(g, 1, 3).members.size());
    int w = 0; // some non-neighbor of node 1
    for (int x = 2; x <= 64; ++x)
        if (!g.adjacent(1, x)) {
            w = x;
            break;
        }
    REQUIRE(w != 0);
    Header last_failed{true, true, m};
    CHECK_THROWS_AS((void)evaluate(s, g, 1, DestRef{w, nullptr}, last_failed), Error);
}

TEST_CASE("fixed-port scheme routes shortest through adversarial ports")
{
    int n = 128;
    LabeledGraph g = generate_uniform(n, 7);
    PortAssignment ports = PortAssignment::random_shuffle(g, 99);
    RoutingScheme s = build_sp_fixed_port(g, ports, 3, "seed:99");
    auto rep = verify_shortest(g, s);
    CHECK(rep.passed);

    RouteResult r = route(g, s, 3, 4);
    for (const auto& a : r.actions)
        CHECK(a.kind == ActionKind::forward_port);

    SizeReport size = measure_size(s);
    // per-node budget: (n/2) log n * 1.2 + 7n, exact in tenths
    for (int u = 1; u <= n; ++u)
        CHECK(size.per_node_bits[u] * 10 <= std::uint64_t(n / 2) * 7 * 12 + 70ull * n);
    CHECK(size.breakdown.at("port_permutation") > 0);
    CHECK(size.breakdown.at("neighbor_bitmap") == std::uint64_t(n - 1) * n);
}

TEST_CASE("full-information scheme matches the first-hop oracle")
{
    int n = 64;
    LabeledGraph g = generate_uniform(n, 5);
    PortAssignment ports = PortAssignment::random_shuffle(g, 123);
    RoutingScheme s = build_full_info(g, ports, "seed:123");

    auto rep = verify_full_info(g, s);
    CHECK(rep.passed);
    CHECK(rep.pairs == n * (n - 1));

    // adjacent destination: exactly the direct port
    int w = g.neighbors(9).front();
    auto p = evaluate_full_ports(s, g, 9, w);
    REQUIRE(p.size() == 1);
    CHECK(ports.neighbor_at(9, p[0]) == w);

    // routes produced from the full sets are shortest too
    auto sp = verify_shortest(g, s);
    CHECK(sp.passed);

    SizeReport size = measure_size(s);
    for (int u = 1; u <= n; ++u)
        CHECK(size.per_node_bits[u] <= std::uint64_t(n) * n / 4 + std::uint64_t(n) * 6 + 2ull * n);
}

TEST_CASE("full-information mutation flags exactly one pair")
{
    int n = 64;
    LabeledGraph g = generate_uniform(n, 5);
    RoutingScheme s = build_full_info(g, PortAssignment::canonical(g), "canonical");
    REQUIRE(verify_full_info(g, s).passed);

    // flip one bit inside node 1's first destination bitmap
    int u = 1;
    std::size_t prefix = 8 + std::size_t(n - 1) + perm_code_width(g.degree(u));
    BitString enc;
    for (std::size_t i = 0; i < s.encodings[u].size(); ++i) {
        bool b = s.encodings[u].bit(i);
        enc.push_back(i == prefix + 2 ? !b : b);
    }
    RoutingScheme mutated = s;
    mutated.encodings[u] = enc;
    mutated.views = decode_views(mutated, g);

    auto rep = verify_full_info(g, mutated);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.mismatches.size() == 1);
    CHECK(rep.mismatches[0].first == u);
    // the flipped column is the first non-neighbor of node 1
    int first_nonneighbor = 0;
    for (int x = 1; x <= n; ++x)
        if (x != u && !g.adjacent(u, x)) {
            first_nonneighbor = x;
            break;
        }
    CHECK(rep.mismatches[0].second == first_nonneighbor);
}

TEST_CASE("size accounting is pure arithmetic over the carried bits")
{
    RoutingScheme s;
    s.kind = SchemeKind::stretch_logn;
    s.model = {InfoModel::II, RelabelModel::alpha};
    s.n = 5;
    s.encodings.resize(6);
    SizeReport rep = measure_size(s);
    CHECK(rep.total_bits == 0);
    CHECK(rep.max_node_bits == 0);

    s.model.relabel = RelabelModel::gamma;
    s.labels.resize(6);
    s.labels[2] = BitString::from_string("101");
    rep = measure_size(s);
    CHECK(rep.total_bits == 3);
    CHECK(rep.label_bits[2] == 3);
}

TEST_CASE("scheme files round-trip bit-exactly")
{
    LabeledGraph g = generate_uniform(64, 11);
    std::vector<RoutingScheme> schemes;
    schemes.push_back(build_canonical_sp(g));
    schemes.push_back(build_sp_neighbor_known(g, 3));
    schemes.push_back(build_sp_relabel(g, 3));
    schemes.push_back(build_stretch15(g, 3));
    schemes.push_back(build_stretch2_hub(g, 3));
    schemes.push_back(build_stretch_logn(g, 3));
    schemes.push_back(build_sp_fixed_port(g, PortAssignment::random_shuffle(g, 5), 3, "seed:5"));
    schemes.push_back(build_full_info(g, PortAssignment::random_shuffle(g, 5), "seed:5"));

    for (const auto& s : schemes) {
        std::string text = scheme_to_text(s);
        RoutingScheme loaded = scheme_from_text(text, g);
        CHECK(scheme_to_text(loaded) == text);
        // loaded views must route identically
        RouteResult a = route(g, s, 2, 33);
        RouteResult b = route(g, loaded, 2, 33);
        CHECK(a.path == b.path);
    }

    CHECK_THROWS_AS((void)scheme_from_text("bogus\n", g), Error);
    LabeledGraph small = generate_uniform(8, 1);
    CHECK_THROWS_AS((void)scheme_from_text(scheme_to_text(schemes[0]), small), Error);
}

#include "routing/simulator.hpp"

#include <algorithm>
#include <numeric>

#include "routing/error.hpp"
#include "routing/rng.hpp"

namespace routing {

Rational Rational::make(long long num, long long den)
{
    if (den <= 0)
        fail(Errc::invalid_argument, "rational with nonpositive denominator");
    long long g = std::gcd(num, den);
    if (g)
        return {num / g, den / g};
    return {num, den};
}

std::string Rational::str() const
{
    return std::to_string(num) + "/" + std::to_string(den);
}

bool rational_less(const Rational& a, const Rational& b)
{
    return a.num * b.den < b.num * a.den;
}

RouteResult route(const LabeledGraph& g, const RoutingScheme& s, int src, int dst,
                  int shortest_hint)
{
    int n = g.node_count();
    if (src < 1 || src > n || dst < 1 || dst > n)
        fail(Errc::invalid_argument, "route endpoints out of range");
    if (src == dst)
        fail(Errc::invalid_argument, "route source equals destination");

    RouteResult res;
    res.shortest = shortest_hint >= 0 ? shortest_hint : bfs_distances(g, src)[dst];

    Message msg;
    if (s.model.relabel == RelabelModel::gamma)
        msg.destination.gamma = &s.labels[dst];
    else
        msg.destination.plain = dst;

    int cur = src;
    int prev = 0;
    int cap = 4 * n;
    res.path.push_back(cur);
    while (cur != dst) {
        if (res.edge_traversals >= cap)
            fail(Errc::hop_cap_exceeded,
                 "message exceeded " + std::to_string(cap) + " traversals from " +
                     std::to_string(src) + " to " + std::to_string(dst));
        EvalResult er = evaluate(s, g, cur, msg.destination, msg.header);
        res.actions.push_back(er.action);
        msg.header = er.header;
        int next = 0;
        switch (er.action.kind) {
        case ActionKind::deliver:
            fail(Errc::invalid_label, "deliver action at a node that is not the destination");
        case ActionKind::forward_neighbor:
            if (s.model.info != InfoModel::II)
                fail(Errc::illegal_action,
                     "forward_neighbor is only available when neighbors are known (II)");
            next = er.action.target;
            if (next < 1 || next > n || !g.adjacent(cur, next))
                fail(Errc::illegal_action,
                     "node " + std::to_string(cur) + " forwarded to non-neighbor " +
                         std::to_string(next));
            break;
        case ActionKind::forward_port:
            if (s.model.info == InfoModel::II)
                fail(Errc::illegal_action, "port forwarding under model II");
            if (!s.ports)
                fail(Errc::illegal_action, "scheme carries no port assignment");
            next = s.ports->neighbor_at(cur, er.action.target);
            break;
        case ActionKind::probe_next:
            // bounce: back over the edge this message arrived on
            if (prev == 0 || !msg.header.probing)
                fail(Errc::illegal_action, "probe bounce without a probe in flight");
            next = prev;
            msg.header.failed = true;
            res.failed_probes++;
            break;
        }
        res.headers.push_back(msg.header);
        prev = cur;
        cur = next;
        res.edge_traversals++;
        res.path.push_back(cur);
    }
    res.delivered = true;
    if (res.shortest > 0)
        res.stretch = Rational::make(res.net_length(), res.shortest);
    return res;
}

namespace {

template <typename Fn>
void for_each_pair(int n, const PairPolicy& policy, Fn&& fn)
{
    if (policy.exhaustive) {
        for (int u = 1; u <= n; ++u)
            for (int w = 1; w <= n; ++w)
                if (u != w)
                    fn(u, w);
        return;
    }
    std::mt19937_64 rng(policy.seed);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(policy.sample_count);
    for (long long i = 0; i < policy.sample_count; ++i) {
        int u = int(bounded_random(rng, std::uint64_t(n))) + 1;
        int w = int(bounded_random(rng, std::uint64_t(n - 1))) + 1;
        if (w >= u)
            ++w;
        pairs.emplace_back(u, w);
    }
    // group by source so callers can reuse one BFS per source
    std::stable_sort(pairs.begin(), pairs.end());
    for (auto [u, w] : pairs)
        fn(u, w);
}

} // namespace

StretchReport max_stretch(const LabeledGraph& g, const RoutingScheme& s,
                          const PairPolicy& policy,
                          const std::vector<std::vector<int>>* dist)
{
    StretchReport rep;
    int last_src = 0;
    std::vector<int> local_dist;
    for_each_pair(g.node_count(), policy, [&](int u, int w) {
        const std::vector<int>* d;
        if (dist) {
            d = &(*dist)[u];
        } else {
            if (u != last_src) {
                local_dist = bfs_distances(g, u);
                last_src = u;
            }
            d = &local_dist;
        }
        RouteResult r = route(g, s, u, w, (*d)[w]);
        rep.pairs++;
        if (!r.delivered) {
            rep.undelivered++;
            return;
        }
        if (rational_less(rep.max_stretch, r.stretch))
            rep.max_stretch = r.stretch;
        rep.max_traversals = std::max(rep.max_traversals, r.edge_traversals);
        rep.max_net_length = std::max(rep.max_net_length, r.net_length());
    });
    return rep;
}

ShortestCheckReport verify_shortest(const LabeledGraph& g, const RoutingScheme& s,
                                    const PairPolicy& policy,
                                    const std::vector<std::vector<int>>* dist)
{
    ShortestCheckReport rep;
    int last_src = 0;
    std::vector<int> local_dist;
    for_each_pair(g.node_count(), policy, [&](int u, int w) {
        const std::vector<int>* d;
        if (dist) {
            d = &(*dist)[u];
        } else {
            if (u != last_src) {
                local_dist = bfs_distances(g, u);
                last_src = u;
            }
            d = &local_dist;
        }
        rep.pairs++;
        int got = -1; // undelivered or errored routes count as violations
        try {
            RouteResult r = route(g, s, u, w, (*d)[w]);
            if (r.delivered)
                got = int(r.path.size()) - 1;
        } catch (const Error&) {
        }
        rep.max_route_length = std::max(rep.max_route_length, got);
        if (got != (*d)[w])
            rep.violations.emplace_back(u, w, got, (*d)[w]);
    });
    rep.passed = rep.violations.empty();
    return rep;
}

FullInfoCheckReport verify_full_info(const LabeledGraph& g, const RoutingScheme& s,
                                     const std::vector<std::vector<int>>* dist)
{
    if (s.kind != SchemeKind::full_info)
        fail(Errc::invalid_argument, "scheme does not carry full routing information");
    if (!s.ports)
        fail(Errc::invalid_argument, "scheme carries no port assignment");
    FullInfoCheckReport rep;
    int n = g.node_count();
    std::vector<std::vector<int>> local;
    if (!dist) {
        local = all_pairs_distances(g);
        dist = &local;
    }
    std::vector<int> expected, got;
    for (int u = 1; u <= n; ++u) {
        const auto& du = (*dist)[u];
        for (int w = 1; w <= n; ++w) {
            if (w == u)
                continue;
            rep.pairs++;
            expected.clear();
            for (int v : g.neighbors(u))
                if ((*dist)[v][w] == du[w] - 1)
                    expected.push_back(v);
            got.clear();
            for (int p : evaluate_full_ports(s, g, u, w))
                got.push_back(s.ports->neighbor_at(u, p));
            std::sort(got.begin(), got.end());
            if (got != expected)
                rep.mismatches.emplace_back(u, w);
        }
    }
    rep.passed = rep.mismatches.empty();
    return rep;
}

std::string format_trace(const RouteResult& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.actions.size(); ++i) {
        out += "hop=" + std::to_string(i);
        out += " node=" + std::to_string(r.path[i]);
        out += " action=" + std::string(action_kind_name(r.actions[i].kind));
        if (r.actions[i].kind != ActionKind::deliver &&
            r.actions[i].kind != ActionKind::probe_next)
            out += ":" + std::to_string(r.actions[i].target);
        const Header& h = r.headers[i];
        if (h.probing)
            out += std::string(" header=") + (h.failed ? "failed" : "probing") + ":" +
                   std::to_string(h.probe_index);
        out += "\n";
    }
    out += "delivered=" + std::string(r.delivered ? "true" : "false");
    out += " traversals=" + std::to_string(r.edge_traversals);
    out += " failed_probes=" + std::to_string(r.failed_probes);
    out += " shortest=" + std::to_string(r.shortest);
    out += " stretch=" + r.stretch.str();
    out += "\n";
    return out;
}

} // namespace routing

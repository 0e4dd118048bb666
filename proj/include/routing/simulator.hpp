#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "routing/graph.hpp"
#include "routing/scheme.hpp"

namespace routing {

// exact ratio, kept reduced
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    std::string str() const; // "p/q"
    friend bool operator==(const Rational&, const Rational&) = default;
};

bool rational_less(const Rational& a, const Rational& b);

struct Message {
    DestRef destination;
    Header header;
};

// One simulated delivery. path is the full walk including bounces;
// stretch compares the net forward length (traversals minus bounced
// probe pairs) against the BFS distance.
struct RouteResult {
    std::vector<int> path;
    std::vector<Action> actions;
    std::vector<Header> headers; // message header after each action
    int edge_traversals = 0;
    int failed_probes = 0;
    bool delivered = false;
    int shortest = 0;
    Rational stretch;

    int net_length() const { return edge_traversals - 2 * failed_probes; }
};

// Executes the scheme hop by hop, enforcing each model's action legality
// (ports only under IA/IB, neighbor labels only under II). shortest_hint
// skips the per-call BFS when the caller already has distances.
RouteResult route(const LabeledGraph& g, const RoutingScheme& s, int src, int dst,
                  int shortest_hint = -1);

struct PairPolicy {
    bool exhaustive = true;
    long long sample_count = 0;
    std::uint64_t seed = 0;

    static PairPolicy all() { return {}; }
    static PairPolicy sample(long long count, std::uint64_t seed)
    {
        return {false, count, seed};
    }
};

struct StretchReport {
    Rational max_stretch{0, 1};
    int max_traversals = 0;
    int max_net_length = 0;
    long long pairs = 0;
    long long undelivered = 0;
};

StretchReport max_stretch(const LabeledGraph& g, const RoutingScheme& s,
                          const PairPolicy& policy = {},
                          const std::vector<std::vector<int>>* dist = nullptr);

struct ShortestCheckReport {
    bool passed = false;
    long long pairs = 0;
    int max_route_length = 0;
    // (src, dst, route length or -1 if undelivered, BFS distance)
    std::vector<std::tuple<int, int, int, int>> violations;
};

ShortestCheckReport verify_shortest(const LabeledGraph& g, const RoutingScheme& s,
                                    const PairPolicy& policy = {},
                                    const std::vector<std::vector<int>>* dist = nullptr);

struct FullInfoCheckReport {
    bool passed = false;
    long long pairs = 0;
    std::vector<std::pair<int, int>> mismatches;
};

// compares the advertised port set against {v in N(u) : d(u,v)=1 and
// d(v,w) = d(u,w) - 1} from the BFS oracle, for every ordered pair
FullInfoCheckReport verify_full_info(const LabeledGraph& g, const RoutingScheme& s,
                                     const std::vector<std::vector<int>>* dist = nullptr);

// one line per hop: node, action, header; machine-parseable
std::string format_trace(const RouteResult& r);

} // namespace routing

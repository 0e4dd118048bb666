#include "routing/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "routing/error.hpp"
#include "routing/rng.hpp"

namespace routing {

void LabeledGraph::build_from_adj(int n)
{
    n_ = n;
    offsets_.assign(n + 2, 0);
    for (int u = 1; u <= n; ++u) {
        const std::uint64_t* row = adj_.data() + std::size_t(u - 1) * row_words_;
        int d = 0;
        for (int w = 0; w < row_words_; ++w)
            d += int(std::popcount(row[w]));
        offsets_[u + 1] = offsets_[u] + d;
    }
    nbrs_.resize(offsets_[n + 1]);
    for (int u = 1; u <= n; ++u) {
        int* out = nbrs_.data() + offsets_[u];
        const std::uint64_t* row = adj_.data() + std::size_t(u - 1) * row_words_;
        for (int w = 0; w < row_words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int b = std::countr_zero(bits);
                *out++ = w * 64 + b + 1;
                bits &= bits - 1;
            }
        }
    }
}

LabeledGraph LabeledGraph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    if (n < 1)
        fail(Errc::invalid_argument, "graph needs at least one node");
    LabeledGraph g;
    g.row_words_ = (n + 63) / 64;
    g.adj_.assign(std::size_t(n) * g.row_words_, 0);
    auto set = [&](int a, int b) {
        std::size_t i = std::size_t(a - 1) * g.row_words_ * 64 + std::size_t(b - 1);
        g.adj_[i >> 6] |= std::uint64_t(1) << (i & 63);
    };
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            fail(Errc::invalid_argument, "edge endpoint out of range");
        if (a == b)
            fail(Errc::invalid_argument, "self-loops are not allowed");
        set(a, b);
        set(b, a);
    }
    g.build_from_adj(n);
    return g;
}

std::size_t edge_bit_count(int n)
{
    return std::size_t(n) * (n - 1) / 2;
}

BitString encode_graph(const LabeledGraph& g)
{
    int n = g.node_count();
    BitString s;
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v <= n; ++v)
            s.push_back(g.adjacent(u, v));
    return s;
}

LabeledGraph decode_graph(const BitString& s, int n)
{
    if (n < 1)
        fail(Errc::invalid_argument, "graph needs at least one node");
    if (s.size() != edge_bit_count(n))
        fail(Errc::length_mismatch,
             "edge string has " + std::to_string(s.size()) + " bits, expected " +
                 std::to_string(edge_bit_count(n)) + " for n=" + std::to_string(n));
    LabeledGraph g;
    g.row_words_ = (n + 63) / 64;
    g.adj_.assign(std::size_t(n) * g.row_words_, 0);
    std::size_t i = 0;
    for (int u = 1; u < n; ++u) {
        for (int v = u + 1; v <= n; ++v, ++i) {
            if (s.bit(i)) {
                std::size_t a = std::size_t(u - 1) * g.row_words_ * 64 + std::size_t(v - 1);
                std::size_t b = std::size_t(v - 1) * g.row_words_ * 64 + std::size_t(u - 1);
                g.adj_[a >> 6] |= std::uint64_t(1) << (a & 63);
                g.adj_[b >> 6] |= std::uint64_t(1) << (b & 63);
            }
        }
    }
    g.build_from_adj(n);
    return g;
}

std::string graph_to_text(const LabeledGraph& g)
{
    std::string out = "n=" + std::to_string(g.node_count()) + "\n";
    out += encode_graph(g).to_hex();
    out += "\n";
    return out;
}

LabeledGraph graph_from_text(std::string_view text)
{
    std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos || text.substr(0, 2) != "n=")
        fail(Errc::parse_error, "graph file must start with an n=<int> line");
    int n = 0;
    try {
        n = std::stoi(std::string(text.substr(2, nl - 2)));
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad node count in graph header");
    }
    std::string_view hex = text.substr(nl + 1);
    while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r'))
        hex.remove_suffix(1);
    return decode_graph(BitString::from_hex(hex, edge_bit_count(n)), n);
}

void write_graph_file(const LabeledGraph& g, const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        fail(Errc::io_error, "cannot open " + path + " for writing");
    f << graph_to_text(g);
    if (!f)
        fail(Errc::io_error, "write failed: " + path);
}

LabeledGraph read_graph_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        fail(Errc::io_error, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return graph_from_text(ss.str());
}

LabeledGraph generate_uniform(int n, std::uint64_t seed)
{
    if (n < 2)
        fail(Errc::invalid_argument, "uniform generation needs n >= 2");
    std::mt19937_64 rng(seed);
    std::size_t bits = edge_bit_count(n);
    BitString s;
    std::size_t full = bits / 64;
    for (std::size_t i = 0; i < full; ++i) {
        std::uint64_t w = rng();
        for (unsigned k = 0; k < 64; ++k)
            s.push_back((w >> k) & 1u);
    }
    if (bits % 64) {
        std::uint64_t w = rng();
        for (unsigned k = 0; k < bits % 64; ++k)
            s.push_back((w >> k) & 1u);
    }
    return decode_graph(s, n);
}

LabeledGraph build_gk(int k)
{
    if (k < 1)
        fail(Errc::invalid_argument, "gk needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(std::size_t(k) * k + k);
    for (int i = k + 1; i <= 2 * k; ++i) {
        edges.emplace_back(i, i + k);
        for (int j = 1; j <= k; ++j)
            edges.emplace_back(i, j);
    }
    return LabeledGraph::from_edges(3 * k, edges);
}

LabeledGraph relabel_nodes(const LabeledGraph& g, std::span<const int> perm)
{
    int n = g.node_count();
    if (int(perm.size()) != n + 1)
        fail(Errc::invalid_argument, "permutation must have n+1 entries (index 0 unused)");
    std::vector<bool> seen(n + 1, false);
    for (int u = 1; u <= n; ++u) {
        if (perm[u] < 1 || perm[u] > n || seen[perm[u]])
            fail(Errc::invalid_argument, "relabeling is not a bijection on 1..n");
        seen[perm[u]] = true;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(std::size_t(g.edge_count()));
    for (int u = 1; u <= n; ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                edges.emplace_back(perm[u], perm[v]);
    return LabeledGraph::from_edges(n, edges);
}

std::vector<int> bfs_distances(const LabeledGraph& g, int src)
{
    int n = g.node_count();
    if (src < 1 || src > n)
        fail(Errc::invalid_argument, "bfs source out of range");
    std::vector<int> dist(n + 1, -1);
    std::vector<int> queue;
    queue.reserve(n);
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const LabeledGraph& g)
{
    std::vector<std::vector<int>> d(g.node_count() + 1);
    for (int u = 1; u <= g.node_count(); ++u)
        d[u] = bfs_distances(g, u);
    return d;
}

int coverage_target(int n, int c)
{
    if (n < 2)
        return 0;
    double raw = (c + 3) * std::log2(double(n));
    return int(std::ceil(raw - 1e-9));
}

CoverageSet coverage_set(const LabeledGraph& g, int u, int c)
{
    CoverageSet cs;
    cs.center = u;
    auto nb = g.neighbors(u);
    int m = std::min<int>(int(nb.size()), coverage_target(g.node_count(), c));
    cs.members.assign(nb.begin(), nb.begin() + m);
    return cs;
}

DegreeCheckReport check_degree_lemma(const LabeledGraph& g, int c, double K)
{
    int n = g.node_count();
    DegreeCheckReport rep;
    rep.threshold = K * std::sqrt(double(c + 1) * n * std::log2(double(n)));
    double center = (n - 1) / 2.0;
    for (int u = 1; u <= n; ++u) {
        double dev = std::abs(g.degree(u) - center);
        rep.max_deviation = std::max(rep.max_deviation, dev);
        if (dev > rep.threshold)
            rep.failing_nodes.push_back(u);
    }
    rep.passed = rep.failing_nodes.empty();
    return rep;
}

bool check_diameter_two(const LabeledGraph& g)
{
    int n = g.node_count();
    if (n < 3)
        return false; // no pair can sit at distance exactly 2
    bool some_pair_at_two = false;
    for (int u = 1; u <= n; ++u) {
        auto row_u = g.adjacency_row(u);
        for (int v = u + 1; v <= n; ++v) {
            if (g.adjacent(u, v))
                continue;
            some_pair_at_two = true;
            auto row_v = g.adjacency_row(v);
            std::uint64_t common = 0;
            for (std::size_t w = 0; w < row_u.size(); ++w)
                common |= row_u[w] & row_v[w];
            if (!common)
                return false; // distance > 2 (or disconnected)
        }
    }
    return some_pair_at_two; // complete graphs have diameter 1
}

CoverageCheckReport check_coverage_lemma(const LabeledGraph& g, int c)
{
    int n = g.node_count();
    int words = int(g.adjacency_row(1).size());
    CoverageCheckReport rep;
    std::vector<std::uint64_t> covered(words);
    for (int u = 1; u <= n; ++u) {
        auto row_u = g.adjacency_row(u);
        for (int w = 0; w < words; ++w)
            covered[w] = row_u[w];
        covered[(u - 1) >> 6] |= std::uint64_t(1) << ((u - 1) & 63);
        CoverageSet cs = coverage_set(g, u, c);
        for (int v : cs.members) {
            auto row_v = g.adjacency_row(v);
            for (int w = 0; w < words; ++w)
                covered[w] |= row_v[w];
        }
        for (int w = 0; w < words; ++w) {
            std::uint64_t missing = ~covered[w];
            if (w == words - 1 && n % 64)
                missing &= (std::uint64_t(1) << (n % 64)) - 1;
            while (missing) {
                int b = std::countr_zero(missing);
                rep.violations.emplace_back(u, w * 64 + b + 1);
                missing &= missing - 1;
            }
        }
    }
    rep.passed = rep.violations.empty();
    return rep;
}

PortAssignment PortAssignment::canonical(const LabeledGraph& g)
{
    PortAssignment pa;
    pa.ports_.resize(g.node_count() + 1);
    for (int u = 1; u <= g.node_count(); ++u) {
        auto nb = g.neighbors(u);
        pa.ports_[u].assign(nb.begin(), nb.end());
    }
    return pa;
}

PortAssignment PortAssignment::random_shuffle(const LabeledGraph& g, std::uint64_t seed)
{
    PortAssignment pa = canonical(g);
    for (int u = 1; u <= g.node_count(); ++u) {
        auto& p = pa.ports_[u];
        std::mt19937_64 rng(mix_seed(seed, std::uint64_t(u)));
        for (std::size_t i = p.size(); i > 1; --i)
            std::swap(p[i - 1], p[bounded_random(rng, i)]);
    }
    return pa;
}

int PortAssignment::neighbor_at(int u, int port) const
{
    const auto& p = ports_[u];
    if (port < 1 || port > int(p.size()))
        fail(Errc::illegal_action,
             "port " + std::to_string(port) + " out of range at node " + std::to_string(u));
    return p[port - 1];
}

int PortAssignment::port_to(int u, int v) const
{
    const auto& p = ports_[u];
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == v)
            return int(i) + 1;
    fail(Errc::invalid_argument,
         "node " + std::to_string(v) + " is not behind any port of " + std::to_string(u));
}

std::vector<int> PortAssignment::rank_permutation(const LabeledGraph& g, int u) const
{
    auto nb = g.neighbors(u);
    const auto& p = ports_[u];
    std::vector<int> pi(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto it = std::lower_bound(nb.begin(), nb.end(), p[i]);
        pi[i] = int(it - nb.begin()) + 1;
    }
    return pi;
}

} // namespace routing

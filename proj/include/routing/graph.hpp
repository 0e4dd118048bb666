#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "routing/bits.hpp"

namespace routing {

// Undirected simple graph on nodes labeled 1..n. Neighbor lists are kept
// ascending; a packed adjacency matrix backs O(1) edge tests and fast row
// unions in the lemma checkers.
class LabeledGraph {
public:
    LabeledGraph() = default;

    static LabeledGraph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int node_count() const { return n_; }
    long long edge_count() const { return (long long)nbrs_.size() / 2; }

    int degree(int u) const { return offsets_[u + 1] - offsets_[u]; }
    std::span<const int> neighbors(int u) const
    {
        return {nbrs_.data() + offsets_[u], nbrs_.data() + offsets_[u + 1]};
    }
    bool adjacent(int u, int v) const
    {
        std::size_t i = std::size_t(u - 1) * row_words_ * 64 + std::size_t(v - 1);
        return (adj_[i >> 6] >> (i & 63)) & 1u;
    }
    // n bits; node v sits at bit v-1
    std::span<const std::uint64_t> adjacency_row(int u) const
    {
        return {adj_.data() + std::size_t(u - 1) * row_words_, std::size_t(row_words_)};
    }

private:
    int n_ = 0;
    int row_words_ = 0;
    std::vector<int> offsets_; // size n_+2, 1-based nodes
    std::vector<int> nbrs_;
    std::vector<std::uint64_t> adj_;

    void build_from_adj(int n); // fills offsets_/nbrs_ from adj_
    friend LabeledGraph decode_graph(const BitString& s, int n);
};

// --- canonical edge-string codec (lexicographic pair order) ---

std::size_t edge_bit_count(int n);
BitString encode_graph(const LabeledGraph& g);
LabeledGraph decode_graph(const BitString& s, int n);

// text format: "n=<int>\n<hex of E(G), final byte zero-padded>\n"
std::string graph_to_text(const LabeledGraph& g);
LabeledGraph graph_from_text(std::string_view text);
void write_graph_file(const LabeledGraph& g, const std::string& path);
LabeledGraph read_graph_file(const std::string& path);

// --- generators ---

// every possible edge present independently with probability 1/2
LabeledGraph generate_uniform(int n, std::uint64_t seed);

// three-layer gadget on 3k nodes: middles v_{k+1}..v_{2k} each join all of
// v_1..v_k and their private top node v_{i+k}
LabeledGraph build_gk(int k);

// perm[old_label] = new_label, bijection on 1..n
LabeledGraph relabel_nodes(const LabeledGraph& g, std::span<const int> perm);

// --- distances ---

// hop distances from src; -1 marks unreachable
std::vector<int> bfs_distances(const LabeledGraph& g, int src);
std::vector<std::vector<int>> all_pairs_distances(const LabeledGraph& g);

// --- random-graph structure checkers ---

// ceil((c+3) * log2 n)
int coverage_target(int n, int c);

struct CoverageSet {
    int center = 0;
    std::vector<int> members; // least-labeled neighbors, ascending
};
CoverageSet coverage_set(const LabeledGraph& g, int u, int c);

struct DegreeCheckReport {
    bool passed = false;
    double threshold = 0;
    double max_deviation = 0;
    std::vector<int> failing_nodes;
};
// every degree within K*sqrt((c+1) * n * log2 n) of (n-1)/2
DegreeCheckReport check_degree_lemma(const LabeledGraph& g, int c, double K = 2.0);

// true iff the largest pairwise distance is exactly 2
bool check_diameter_two(const LabeledGraph& g);

struct CoverageCheckReport {
    bool passed = false;
    std::vector<std::pair<int, int>> violations; // ordered pairs (u,w)
};
// every w is adjacent to u, equal to u, or adjacent to a coverage member of u
CoverageCheckReport check_coverage_lemma(const LabeledGraph& g, int c);

// --- port assignments ---

// Per-node bijection between ports 1..deg(v) and incident edges.
class PortAssignment {
public:
    static PortAssignment canonical(const LabeledGraph& g); // port i = i-th least neighbor
    static PortAssignment random_shuffle(const LabeledGraph& g, std::uint64_t seed);

    int port_count(int u) const { return int(ports_[u].size()); }
    int neighbor_at(int u, int port) const; // port in 1..deg(u)
    int port_to(int u, int v) const;        // inverse lookup
    // rank (1-based position in the ascending neighbor list) served by each port
    std::vector<int> rank_permutation(const LabeledGraph& g, int u) const;

private:
    std::vector<std::vector<int>> ports_; // ports_[u][p-1] = neighbor
};

} // namespace routing

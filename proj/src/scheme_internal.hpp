#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "routing/scheme.hpp"

namespace routing {

struct NodeView {
    std::vector<int> next;         // II stretch-1 tables: non-neighbor rank -> next-hop label
    std::vector<int> next_port;    // IA/IB stretch-1 tables: non-neighbor rank -> port
    std::vector<int> bitmap_nbrs;  // IA/IB: neighbor labels decoded from the stored bitmap
    std::vector<int> port_of_rank; // IA/IB: neighbor rank (1-based) -> port
    std::vector<int> cov;          // II: coverage members, cached free knowledge
    int hub = 0;                   // stretch15 satellite / stretch2 uplink
    bool is_center = false;        // stretch15
    std::size_t dest_maps_pos = 0; // full_info: offset of the first destination bitmap
};

struct DecodedViews {
    std::vector<NodeView> node; // index 1..n
};

inline constexpr unsigned kSchemeTagBits = 8;

// rank of w (0-based) among the ascending non-neighbors of u, all of 1..n
// except u and N(u); w must not be u or a neighbor
int rank_among_nonneighbors(const LabeledGraph& g, int u, int w);
int rank_among_nonneighbors(std::span<const int> sorted_nbrs, int u, int w);

// 0-based position of v in a sorted list, -1 if absent
int rank_in_sorted(std::span<const int> sorted, int v);

// two-table block of the neighbor-known construction for node u:
// unary stage entries over the non-neighbors, then fixed-width explicit
// entries for the deferred ones
BitString build_sp_tables(const LabeledGraph& g, int u, std::span<const int> cov,
                          BuildStats& stats, std::map<std::string, std::uint64_t>& comp);

// inverse of build_sp_tables: 1-based covering-stage index per non-neighbor rank
std::vector<int> decode_sp_tables(BitReader& r, std::size_t a0_count, int cov_size, int n);

} // namespace routing

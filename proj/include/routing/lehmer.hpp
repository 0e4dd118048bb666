#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "routing/bits.hpp"

namespace routing {

// Ranking of permutations of 1..d in the factorial number system. The rank
// is packed as a single integer so a permutation costs exactly
// perm_code_width(d) = ceil(log2 d!) bits.

std::size_t perm_code_width(int d);

BitString encode_permutation(std::span<const int> pi);
void append_permutation(BitString& out, std::span<const int> pi);

std::vector<int> decode_permutation(const BitString& s, int d);
std::vector<int> read_permutation(BitReader& r, int d);

} // namespace routing

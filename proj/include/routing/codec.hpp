#pragma once

#include <cstdint>
#include <utility>

#include "routing/bits.hpp"

namespace routing {

// Correspondence between naturals and binary strings in length-lexicographic
// order: (0,""), (1,"0"), (2,"1"), (3,"00"), (4,"01"), ...
BitString nat_to_string(std::uint64_t n);
std::uint64_t string_to_nat(const BitString& s);

// Plain MSB-first binary, "" for zero; length is ceil(log2(m+1)).
BitString nat_to_binary(std::uint64_t m);
std::uint64_t binary_to_nat(const BitString& s);

struct SdDecoded {
    BitString value;
    BitString rest;
};

// bar code: 1^|x| 0 x, length 2|x|+1
BitString sd_encode_bar(const BitString& x);
SdDecoded sd_decode_bar(const BitString& s);

// prime code: bar(binary(|x|)) x, length |x| + 2*ceil(log2(|x|+1)) + 1
BitString sd_encode_prime(const BitString& x);
SdDecoded sd_decode_prime(const BitString& s);
std::size_t sd_prime_length(std::size_t payload_bits);

// reader-based variants for parsing concatenated streams
BitString read_bar(BitReader& r);
BitString read_prime(BitReader& r);

} // namespace routing

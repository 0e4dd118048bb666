#pragma once

#include <cstdint>
#include <random>

namespace routing {

// splitmix64 finalizer; used to derive independent sub-seeds
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// unbiased uniform draw from [0, n); avoids the implementation-defined
// std::uniform_int_distribution so results are reproducible everywhere
inline std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n)
{
    std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

} // namespace routing

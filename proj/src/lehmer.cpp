#include "routing/lehmer.hpp"

#include <bit>
#include <cstdint>

#include "routing/error.hpp"

namespace routing {

namespace {

// little-endian base-2^32 natural number, just enough for rank arithmetic
struct BigNat {
    std::vector<std::uint32_t> limbs; // empty means zero

    void mul_add(std::uint32_t mul, std::uint32_t add)
    {
        std::uint64_t carry = add;
        for (auto& l : limbs) {
            std::uint64_t v = std::uint64_t(l) * mul + carry;
            l = std::uint32_t(v);
            carry = v >> 32;
        }
        while (carry) {
            limbs.push_back(std::uint32_t(carry));
            carry >>= 32;
        }
    }

    // divides in place, returns the remainder
    std::uint32_t divmod(std::uint32_t div)
    {
        std::uint64_t rem = 0;
        for (std::size_t i = limbs.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs[i];
            limbs[i] = std::uint32_t(cur / div);
            rem = cur % div;
        }
        while (!limbs.empty() && limbs.back() == 0)
            limbs.pop_back();
        return std::uint32_t(rem);
    }

    std::size_t bit_length() const
    {
        if (limbs.empty())
            return 0;
        return (limbs.size() - 1) * 32 + std::bit_width(limbs.back());
    }

    bool bit(std::size_t i) const
    {
        std::size_t limb = i / 32;
        if (limb >= limbs.size())
            return false;
        return (limbs[limb] >> (i % 32)) & 1u;
    }

    void set_bit(std::size_t i)
    {
        std::size_t limb = i / 32;
        if (limb >= limbs.size())
            limbs.resize(limb + 1, 0);
        limbs[limb] |= std::uint32_t(1) << (i % 32);
    }
};

// Lehmer digits: digit i counts later entries smaller than pi[i]; computed
// with a Fenwick tree over values
std::vector<std::uint32_t> lehmer_digits(std::span<const int> pi)
{
    int d = int(pi.size());
    std::vector<int> fen(d + 1, 0);
    auto add = [&](int i) {
        for (; i <= d; i += i & -i)
            fen[i]++;
    };
    auto prefix = [&](int i) {
        int s = 0;
        for (; i > 0; i -= i & -i)
            s += fen[i];
        return s;
    };
    std::vector<std::uint32_t> digits(d);
    for (int i = d - 1; i >= 0; --i) {
        int v = pi[i];
        if (v < 1 || v > d)
            fail(Errc::invalid_argument, "permutation entry out of range");
        digits[i] = std::uint32_t(prefix(v - 1));
        add(v);
    }
    return digits;
}

} // namespace

std::size_t perm_code_width(int d)
{
    BigNat fact;
    fact.limbs = {1};
    for (int i = 2; i <= d; ++i)
        fact.mul_add(std::uint32_t(i), 0);
    // width of the largest rank, d!-1
    for (auto& l : fact.limbs) {
        if (l-- != 0)
            break;
    }
    while (!fact.limbs.empty() && fact.limbs.back() == 0)
        fact.limbs.pop_back();
    return fact.bit_length();
}

void append_permutation(BitString& out, std::span<const int> pi)
{
    int d = int(pi.size());
    auto digits = lehmer_digits(pi);
    BigNat rank;
    for (int i = 0; i < d; ++i)
        rank.mul_add(std::uint32_t(d - i), digits[i]);
    std::size_t width = perm_code_width(d);
    if (rank.bit_length() > width)
        fail(Errc::construction_failure, "permutation rank exceeds code width");
    for (std::size_t k = width; k-- > 0;)
        out.push_back(rank.bit(k));
}

BitString encode_permutation(std::span<const int> pi)
{
    BitString out;
    append_permutation(out, pi);
    return out;
}

std::vector<int> read_permutation(BitReader& r, int d)
{
    std::size_t width = perm_code_width(d);
    BigNat rank;
    for (std::size_t k = 0; k < width; ++k) {
        if (r.read_bit())
            rank.set_bit(width - 1 - k);
    }
    std::vector<std::uint32_t> digits(d);
    for (int i = d - 1; i >= 0; --i)
        digits[i] = rank.divmod(std::uint32_t(d - i));
    if (!rank.limbs.empty())
        fail(Errc::malformed_prefix, "permutation code out of range");
    // invert the Lehmer digits: digit i selects the (digit+1)-th unused value,
    // found by binary lifting over a Fenwick tree of still-available values
    int log = 1;
    while ((1 << log) <= d)
        ++log;
    std::vector<int> fen(d + 1, 0);
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; j += j & -j)
            fen[j]++;
    std::vector<int> pi(d);
    for (int i = 0; i < d; ++i) {
        int want = int(digits[i]) + 1;
        if (want > d - i)
            fail(Errc::malformed_prefix, "permutation digit out of range");
        int pos = 0;
        for (int step = 1 << (log - 1); step > 0; step >>= 1) {
            int next = pos + step;
            if (next <= d && fen[next] < want) {
                pos = next;
                want -= fen[next];
            }
        }
        pi[i] = pos + 1;
        for (int j = pos + 1; j <= d; j += j & -j)
            fen[j]--;
    }
    return pi;
}

std::vector<int> decode_permutation(const BitString& s, int d)
{
    BitReader r(s);
    auto pi = read_permutation(r, d);
    if (!r.done())
        fail(Errc::length_mismatch, "trailing bits after permutation code");
    return pi;
}

} // namespace routing

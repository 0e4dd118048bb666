#include "routing/codec.hpp"

#include <bit>

#include "routing/error.hpp"

namespace routing {

BitString nat_to_string(std::uint64_t n)
{
    // the string for n is n+1 written in binary with the leading 1 removed
    std::uint64_t v = n + 1;
    unsigned len = unsigned(std::bit_width(v)) - 1;
    BitString out;
    out.append_bits(v & ((std::uint64_t(1) << len) - 1), len);
    return out;
}

std::uint64_t string_to_nat(const BitString& s)
{
    if (s.size() >= 64)
        fail(Errc::invalid_argument, "string too long for a 64-bit natural");
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        v = (v << 1) | std::uint64_t(s.bit(i));
    return v - 1;
}

BitString nat_to_binary(std::uint64_t m)
{
    BitString out;
    if (m == 0)
        return out;
    unsigned len = unsigned(std::bit_width(m));
    out.append_bits(m, len);
    return out;
}

std::uint64_t binary_to_nat(const BitString& s)
{
    if (s.size() > 63)
        fail(Errc::invalid_argument, "binary field too long for a 64-bit natural");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        v = (v << 1) | std::uint64_t(s.bit(i));
    return v;
}

BitString sd_encode_bar(const BitString& x)
{
    BitString out;
    out.append_unary(unsigned(x.size()));
    out.append(x);
    return out;
}

BitString read_bar(BitReader& r)
{
    unsigned len = r.read_unary();
    return r.read_sub(len);
}

SdDecoded sd_decode_bar(const BitString& s)
{
    BitReader r(s);
    SdDecoded d;
    d.value = read_bar(r);
    d.rest = r.read_sub(r.remaining());
    return d;
}

BitString sd_encode_prime(const BitString& x)
{
    BitString out = sd_encode_bar(nat_to_binary(x.size()));
    out.append(x);
    return out;
}

BitString read_prime(BitReader& r)
{
    BitString len_field = read_bar(r);
    std::uint64_t len = binary_to_nat(len_field);
    return r.read_sub(len);
}

SdDecoded sd_decode_prime(const BitString& s)
{
    BitReader r(s);
    SdDecoded d;
    d.value = read_prime(r);
    d.rest = r.read_sub(r.remaining());
    return d;
}

std::size_t sd_prime_length(std::size_t payload_bits)
{
    return payload_bits + 2 * ceil_log2(payload_bits + 1) + 1;
}

} // namespace routing

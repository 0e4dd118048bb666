#include <doctest.h>

#include <random>

#include "routing/bits.hpp"
#include "routing/error.hpp"

using namespace routing;

TEST_CASE("bitstring append and read back")
{
    BitString s;
    CHECK(s.empty());
    s.push_back(true);
    s.push_back(false);
    s.append_bits(0b1011, 4);
    CHECK(s.size() == 6);
    CHECK(s.to_string() == "101011");
    CHECK(s.get_bits(2, 4) == 0b1011);
    CHECK(s.bit(0));
    CHECK_FALSE(s.bit(1));

    BitString t = BitString::from_string("01");
    s.append(t);
    CHECK(s.to_string() == "10101101");
}

TEST_CASE("bitstring crosses word boundaries")
{
    std::mt19937_64 rng(7);
    std::string ref;
    BitString s;
    for (int i = 0; i < 1000; ++i) {
        bool b = rng() & 1;
        ref += b ? '1' : '0';
        s.push_back(b);
    }
    CHECK(s.to_string() == ref);
    CHECK(s == BitString::from_string(ref));
    for (int i = 0; i < 100; ++i) {
        unsigned count = unsigned(rng() % 64) + 1;
        std::size_t pos = rng() % (1000 - count);
        std::uint64_t v = s.get_bits(pos, count);
        for (unsigned k = 0; k < count; ++k)
            CHECK(((v >> (count - 1 - k)) & 1) == (ref[pos + k] == '1'));
    }
}

TEST_CASE("hex serialization pads the final byte with zeros")
{
    BitString s = BitString::from_string("10110");
    CHECK(s.to_hex() == "b0");
    CHECK(BitString::from_hex("b0", 5) == s);
    // declared length governs; nonzero padding is rejected
    CHECK_THROWS_AS((void)BitString::from_hex("b1", 5), Error);
    CHECK_THROWS_AS((void)BitString::from_hex("b", 5), Error);

    std::mt19937_64 rng(3);
    for (int len : {0, 1, 7, 8, 9, 63, 64, 65, 200}) {
        BitString r;
        for (int i = 0; i < len; ++i)
            r.push_back(rng() & 1);
        CHECK(BitString::from_hex(r.to_hex(), r.size()) == r);
    }
}

TEST_CASE("prefix test")
{
    BitString a = BitString::from_string("1011");
    CHECK(a.is_prefix_of(BitString::from_string("10110")));
    CHECK(a.is_prefix_of(a));
    CHECK_FALSE(a.is_prefix_of(BitString::from_string("1010")));
    CHECK_FALSE(a.is_prefix_of(BitString::from_string("101")));
    CHECK(BitString().is_prefix_of(a));
}

TEST_CASE("unary runs and the reader")
{
    BitString s;
    s.append_unary(3);
    s.append_unary(0);
    s.append_bits(0b01, 2);
    CHECK(s.to_string() == "1110001");
    BitReader r(s);
    CHECK(r.read_unary() == 3);
    CHECK(r.read_unary() == 0);
    CHECK(r.read_bits(2) == 0b01);
    CHECK(r.done());
    CHECK_THROWS_AS((void)r.read_bit(), Error);
}

TEST_CASE("ceil_log2")
{
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(256) == 8);
    CHECK(ceil_log2(257) == 9);
    CHECK(bit_width_for(0) == 0);
    CHECK(bit_width_for(1) == 1);
    CHECK(bit_width_for(255) == 8);
    CHECK(bit_width_for(256) == 9);
}

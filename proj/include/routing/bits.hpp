#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace routing {

// Growable bit sequence. Bit 0 is the first symbol of the string; in the
// serialized byte/hex form bit 0 is the high bit of byte 0 and the final
// byte is zero-padded. Values are immutable once built by their producer;
// the mutating appenders exist for construction only.
class BitString {
public:
    BitString() = default;

    static BitString zeros(std::size_t count);
    static BitString from_string(std::string_view s01);
    // bit_count of them, taken MSB-first from each hex byte
    static BitString from_hex(std::string_view hex, std::size_t bit_count);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool bit(std::size_t i) const;

    void push_back(bool b);
    void append(const BitString& other);
    // appends `count` bits, the MSB of the count-wide field first
    void append_bits(std::uint64_t value, unsigned count);
    void append_unary(unsigned run_length); // 1^run 0
    // reads `count` bits starting at pos into the low bits of the result,
    // first bit ends up most significant
    std::uint64_t get_bits(std::size_t pos, unsigned count) const;

    std::string to_string() const;
    std::string to_hex() const;

    bool is_prefix_of(const BitString& other) const;

    friend bool operator==(const BitString& a, const BitString& b);
    friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }

private:
    // bit i lives at words_[i>>6], position (i & 63), LSB-first in-word;
    // unused tail bits are kept zero so equality is plain word compare
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

// Sequential reader over a BitString, for parsing concatenated fields.
class BitReader {
public:
    explicit BitReader(const BitString& s) : s_(&s) {}

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return s_->size() - pos_; }
    bool done() const { return pos_ == s_->size(); }

    bool read_bit();
    std::uint64_t read_bits(unsigned count);
    // consumes 1^t 0, returns t; errors if no stop sign before the end
    unsigned read_unary();
    BitString read_sub(std::size_t count);
    void skip(std::size_t count);

private:
    const BitString* s_;
    std::size_t pos_ = 0;
};

// exact ceil(log2(v)) for v >= 1
unsigned ceil_log2(std::uint64_t v);
// bits needed to store values 0..v (= ceil(log2(v+1)))
unsigned bit_width_for(std::uint64_t v);

} // namespace routing

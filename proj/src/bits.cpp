#include "routing/bits.hpp"

#include <bit>

#include "routing/error.hpp"

namespace routing {

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::malformed_prefix: return "malformed_prefix";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::lemma_precondition: return "lemma_precondition";
    case Errc::construction_failure: return "construction_failure";
    case Errc::center_uncovered: return "center_uncovered";
    case Errc::probe_exhausted: return "probe_exhausted";
    case Errc::illegal_action: return "illegal_action";
    case Errc::illegal_model: return "illegal_model";
    case Errc::hop_cap_exceeded: return "hop_cap_exceeded";
    case Errc::invalid_label: return "invalid_label";
    case Errc::inconsistent_function: return "inconsistent_function";
    case Errc::retry_exhausted: return "retry_exhausted";
    case Errc::io_error: return "io_error";
    case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

BitString BitString::zeros(std::size_t count)
{
    BitString s;
    s.size_ = count;
    s.words_.assign((count + 63) / 64, 0);
    return s;
}

BitString BitString::from_string(std::string_view s01)
{
    BitString s;
    s.words_.reserve((s01.size() + 63) / 64);
    for (char c : s01) {
        if (c == '0')
            s.push_back(false);
        else if (c == '1')
            s.push_back(true);
        else
            fail(Errc::parse_error, "bit string may contain only 0 and 1");
    }
    return s;
}

static unsigned hex_digit(char c)
{
    if (c >= '0' && c <= '9') return unsigned(c - '0');
    if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
    fail(Errc::parse_error, std::string("invalid hex digit '") + c + "'");
}

BitString BitString::from_hex(std::string_view hex, std::size_t bit_count)
{
    if (hex.size() * 4 < bit_count)
        fail(Errc::length_mismatch, "hex dump shorter than declared bit count");
    BitString s = zeros(bit_count);
    for (std::size_t i = 0; i < bit_count; ++i) {
        unsigned nibble = hex_digit(hex[i / 4]);
        if ((nibble >> (3 - i % 4)) & 1u)
            s.words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    // trailing padding bits must be zero so the dump round-trips
    for (std::size_t i = bit_count; i < hex.size() * 4; ++i) {
        if ((hex_digit(hex[i / 4]) >> (3 - i % 4)) & 1u)
            fail(Errc::parse_error, "nonzero padding bit in hex dump");
    }
    return s;
}

bool BitString::bit(std::size_t i) const
{
    return (words_[i >> 6] >> (i & 63)) & 1u;
}

void BitString::push_back(bool b)
{
    if ((size_ & 63) == 0)
        words_.push_back(0);
    if (b)
        words_.back() |= std::uint64_t(1) << (size_ & 63);
    ++size_;
}

void BitString::append(const BitString& other)
{
    for (std::size_t i = 0; i < other.size_; ++i)
        push_back(other.bit(i));
}

void BitString::append_bits(std::uint64_t value, unsigned count)
{
    for (unsigned k = count; k-- > 0;)
        push_back((value >> k) & 1u);
}

void BitString::append_unary(unsigned run_length)
{
    for (unsigned i = 0; i < run_length; ++i)
        push_back(true);
    push_back(false);
}

std::uint64_t BitString::get_bits(std::size_t pos, unsigned count) const
{
    std::uint64_t v = 0;
    for (unsigned k = 0; k < count; ++k)
        v = (v << 1) | std::uint64_t(bit(pos + k));
    return v;
}

std::string BitString::to_string() const
{
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (bit(i))
            out[i] = '1';
    return out;
}

std::string BitString::to_hex() const
{
    static const char* digits = "0123456789abcdef";
    std::size_t nbytes = (size_ + 7) / 8;
    std::string out(nbytes * 2, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (!bit(i))
            continue;
        std::size_t nib = i / 4;
        unsigned shift = 3 - i % 4;
        char& c = out[nib];
        unsigned v = hex_digit(c) | (1u << shift);
        c = digits[v];
    }
    return out;
}

bool BitString::is_prefix_of(const BitString& other) const
{
    if (size_ > other.size_)
        return false;
    std::size_t full = size_ / 64;
    for (std::size_t w = 0; w < full; ++w)
        if (words_[w] != other.words_[w])
            return false;
    unsigned tail = size_ & 63;
    if (tail) {
        std::uint64_t mask = (std::uint64_t(1) << tail) - 1;
        if ((words_[full] & mask) != (other.words_[full] & mask))
            return false;
    }
    return true;
}

bool operator==(const BitString& a, const BitString& b)
{
    return a.size_ == b.size_ && a.words_ == b.words_;
}

bool BitReader::read_bit()
{
    if (pos_ >= s_->size())
        fail(Errc::malformed_prefix, "bit stream exhausted");
    return s_->bit(pos_++);
}

std::uint64_t BitReader::read_bits(unsigned count)
{
    if (pos_ + count > s_->size())
        fail(Errc::malformed_prefix, "bit stream exhausted");
    std::uint64_t v = s_->get_bits(pos_, count);
    pos_ += count;
    return v;
}

unsigned BitReader::read_unary()
{
    unsigned run = 0;
    for (;;) {
        if (pos_ >= s_->size())
            fail(Errc::malformed_prefix, "unary code missing stop sign");
        if (!s_->bit(pos_++))
            return run;
        ++run;
    }
}

BitString BitReader::read_sub(std::size_t count)
{
    if (pos_ + count > s_->size())
        fail(Errc::malformed_prefix, "bit stream exhausted");
    BitString out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(s_->bit(pos_ + i));
    pos_ += count;
    return out;
}

void BitReader::skip(std::size_t count)
{
    if (pos_ + count > s_->size())
        fail(Errc::malformed_prefix, "bit stream exhausted");
    pos_ += count;
}

unsigned ceil_log2(std::uint64_t v)
{
    if (v <= 1)
        return 0;
    return unsigned(std::bit_width(v - 1));
}

unsigned bit_width_for(std::uint64_t v)
{
    return unsigned(std::bit_width(v));
}

} // namespace routing

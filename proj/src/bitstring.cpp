#include "qkl/bitstring.hpp"

#include <bit>

namespace qkl {

BitString BitString::from_value(uint64_t value, size_t width) {
    if (width == 0 || width > 64) throw bad_parameter_error("from_value: width must be in [1, 64]");
    if (width < 64 && (value >> width) != 0) throw bad_parameter_error("from_value: value does not fit width");
    BitString b(width);
    b.words_[0] = value;
    return b;
}

BitString BitString::from_bits(const std::string &bits) {
    BitString b(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw bad_parameter_error("from_bits: not a 0/1 string");
        b.set_bit(i, bits[i] == '1');
    }
    return b;
}

BitString BitString::from_bytes(const std::vector<uint8_t> &bytes) {
    BitString b(bytes.size() * 8);
    for (size_t i = 0; i < bytes.size(); ++i) {
        b.words_[i >> 3] |= uint64_t(bytes[i]) << ((i & 7) * 8);
    }
    return b;
}

BitString BitString::random(size_t width, Rng &rng) {
    BitString b(width);
    for (auto &w : b.words_) w = rng.u64();
    b.mask_top();
    return b;
}

uint64_t BitString::to_value() const {
    if (width_ > 64) throw bad_parameter_error("to_value: width exceeds 64");
    return words_.empty() ? 0 : words_[0];
}

std::vector<uint8_t> BitString::to_bytes() const {
    std::vector<uint8_t> out((width_ + 7) / 8, 0);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<uint8_t>(words_[i >> 3] >> ((i & 7) * 8));
    }
    return out;
}

std::string BitString::to_bit_string() const {
    std::string s(width_, '0');
    for (size_t i = 0; i < width_; ++i) s[i] = bit(i) ? '1' : '0';
    return s;
}

std::string BitString::to_hex() const {
    static const char *digits = "0123456789abcdef";
    auto bytes = to_bytes();
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

BitString BitString::operator^(const BitString &other) const {
    if (width_ != other.width_) throw width_mismatch_error("xor: width mismatch");
    BitString out(width_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] ^ other.words_[i];
    return out;
}

int BitString::inner(const BitString &other) const {
    if (width_ != other.width_) throw width_mismatch_error("inner: width mismatch");
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

BitString BitString::concat(const BitString &other) const {
    BitString out(width_ + other.width_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i];
    size_t shift = width_ & 63;
    size_t base = width_ >> 6;
    if (shift == 0) {
        for (size_t i = 0; i < other.words_.size(); ++i) out.words_[base + i] = other.words_[i];
    } else {
        for (size_t i = 0; i < other.words_.size(); ++i) {
            out.words_[base + i] |= other.words_[i] << shift;
            if (base + i + 1 < out.words_.size()) out.words_[base + i + 1] |= other.words_[i] >> (64 - shift);
        }
    }
    out.mask_top();
    return out;
}

BitString BitString::slice(size_t start, size_t len) const {
    if (start + len > width_) throw bad_parameter_error("slice: out of range");
    BitString out(len);
    for (size_t i = 0; i < len; ++i) out.set_bit(i, bit(start + i));
    return out;
}

int BitString::parity() const { return static_cast<int>(popcount() & 1); }

size_t BitString::popcount() const {
    size_t n = 0;
    for (uint64_t w : words_) n += static_cast<size_t>(std::popcount(w));
    return n;
}

bool BitString::is_zero() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

void BitString::mask_top() {
    size_t r = width_ & 63;
    if (r != 0 && !words_.empty()) words_.back() &= (~uint64_t(0)) >> (64 - r);
}

}  // namespace qkl

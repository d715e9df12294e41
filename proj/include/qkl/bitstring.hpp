#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkl/errors.hpp"
#include "qkl/rng.hpp"

namespace qkl {

// Fixed-width bit string, LSB-first. Carries every classical value the library
// moves through quantum registers: identities, serialized keys, certificates.
class BitString {
  public:
    BitString() : width_(0) {}

    explicit BitString(size_t width) : width_(width), words_(word_count(width), 0) {}

    static BitString from_value(uint64_t value, size_t width);
    static BitString from_bits(const std::string &bits);  // e.g. "0110", index 0 first
    static BitString from_bytes(const std::vector<uint8_t> &bytes);
    static BitString random(size_t width, Rng &rng);

    size_t width() const { return width_; }
    bool empty() const { return width_ == 0; }

    int bit(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set_bit(size_t i, int v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    uint64_t to_value() const;  // requires width <= 64
    std::vector<uint8_t> to_bytes() const;
    std::string to_bit_string() const;
    std::string to_hex() const;

    BitString operator^(const BitString &other) const;
    bool operator==(const BitString &other) const { return width_ == other.width_ && words_ == other.words_; }
    bool operator!=(const BitString &other) const { return !(*this == other); }

    // <a, b> mod 2.
    int inner(const BitString &other) const;

    BitString concat(const BitString &other) const;
    BitString slice(size_t start, size_t len) const;

    int parity() const;
    size_t popcount() const;
    bool is_zero() const;

    const std::vector<uint64_t> &words() const { return words_; }

  private:
    static size_t word_count(size_t width) { return (width + 63) / 64; }
    void mask_top();

    size_t width_;
    std::vector<uint64_t> words_;
};

}  // namespace qkl

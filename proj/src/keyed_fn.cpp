#include "qkl/keyed_fn.hpp"

#include "qkl/errors.hpp"

namespace qkl {
namespace keyed {

// Absorb a BitString into one 64-bit chaining value.
static uint64_t absorb(const Key128 &k, uint64_t domain_tag, const BitString &x) {
    uint64_t h = splitmix64(domain_tag ^ k.hi) ^ splitmix64(x.width() * 0x2545f4914f6cdd1dULL);
    for (uint64_t w : x.words()) h = splitmix64(h ^ splitmix64(w ^ k.lo));
    return h;
}

BitString f_bits(const Key128 &k, uint64_t domain_tag, const BitString &x, size_t out_width) {
    uint64_t h = absorb(k, domain_tag, x);
    BitString out(out_width);
    size_t words = (out_width + 63) / 64;
    for (size_t ctr = 0; ctr < words; ++ctr) {
        uint64_t block = splitmix64(h ^ splitmix64(ctr ^ k.hi));
        for (size_t b = 0; b < 64 && ctr * 64 + b < out_width; ++b) {
            out.set_bit(ctr * 64 + b, (block >> b) & 1);
        }
    }
    return out;
}

std::array<uint64_t, 4> f256(const Key128 &k, uint64_t domain_tag, const BitString &x) {
    uint64_t h = absorb(k, domain_tag, x);
    std::array<uint64_t, 4> out;
    for (size_t i = 0; i < 4; ++i) out[i] = splitmix64(h ^ splitmix64(i ^ k.hi ^ 0xa54ff53a5f1d36f1ULL));
    return out;
}

}  // namespace keyed

FeistelPerm::FeistelPerm(Key128 key, size_t width) : key_(key), width_(width) {
    if (width < 2 || width > 64) throw bad_parameter_error("FeistelPerm: width must be in [2, 64]");
    left_bits_ = width / 2;
    right_bits_ = width - left_bits_;
    left_mask_ = (uint64_t(1) << left_bits_) - 1;
    right_mask_ = (right_bits_ == 64) ? ~uint64_t(0) : ((uint64_t(1) << right_bits_) - 1);
}

uint64_t FeistelPerm::round_fn(int r, uint64_t half) const {
    return splitmix64(half ^ splitmix64(key_.lo ^ (key_.hi + uint64_t(r) * 0x9e3779b97f4a7c15ULL)));
}

// Alternating Feistel without half swaps: even rounds mix L keyed by R, odd
// rounds mix R keyed by L. Self-inverse rounds applied in reverse order undo
// the permutation, which works for any (possibly unbalanced) split.
uint64_t FeistelPerm::forward(uint64_t x) const {
    uint64_t l = x & left_mask_;
    uint64_t r = (x >> left_bits_) & right_mask_;
    for (int i = 0; i < kRounds; ++i) {
        if ((i & 1) == 0)
            l ^= round_fn(i, r) & left_mask_;
        else
            r ^= round_fn(i, l) & right_mask_;
    }
    return l | (r << left_bits_);
}

uint64_t FeistelPerm::inverse(uint64_t y) const {
    uint64_t l = y & left_mask_;
    uint64_t r = (y >> left_bits_) & right_mask_;
    for (int i = kRounds - 1; i >= 0; --i) {
        if ((i & 1) == 0)
            l ^= round_fn(i, r) & left_mask_;
        else
            r ^= round_fn(i, l) & right_mask_;
    }
    return l | (r << left_bits_);
}

}  // namespace qkl

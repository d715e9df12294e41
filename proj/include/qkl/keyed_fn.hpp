#pragma once

#include <array>
#include <cstdint>

#include "qkl/bitstring.hpp"
#include "qkl/rng.hpp"

namespace qkl {

// 128-bit key for the pluggable keyed-function provider.
struct Key128 {
    uint64_t lo = 0;
    uint64_t hi = 0;

    bool operator==(const Key128 &o) const { return lo == o.lo && hi == o.hi; }
    static Key128 sample(Rng &rng) { return Key128{rng.u64(), rng.u64()}; }
};

// Keyed-function provider. Every pseudo-random derivation in the library goes
// through these: PRF evaluations, QPRF-keyed challenge tapes, KG randomness,
// message digests. The default is a splitmix64 mixing chain, which at desk
// scale trades cryptographic strength for the throughput the Monte Carlo
// games need (~1e11 calls across the acceptance suite).
namespace keyed {

inline uint64_t mix2(uint64_t a, uint64_t b) { return splitmix64(splitmix64(a ^ 0x9e3779b97f4a7c15ULL) ^ b); }

// Core 64-bit output: F(key, domain_tag, x).
inline uint64_t f64(const Key128 &k, uint64_t domain_tag, uint64_t x) {
    uint64_t h = splitmix64(x ^ k.lo);
    return splitmix64(h ^ splitmix64(domain_tag ^ k.hi));
}

// Counter-mode expansion to an arbitrary output width.
BitString f_bits(const Key128 &k, uint64_t domain_tag, const BitString &x, size_t out_width);

// 256-bit output, used where hash-chain style constructions want a digest.
std::array<uint64_t, 4> f256(const Key128 &k, uint64_t domain_tag, const BitString &x);

}  // namespace keyed

// Keyed Feistel permutation on a w-bit domain (w >= 2). Invertible, so
// pre-image sampling of residue classes is O(1); this is what makes trap-set
// challenge sampling cheap.
class FeistelPerm {
  public:
    FeistelPerm() = default;
    FeistelPerm(Key128 key, size_t width);

    size_t width() const { return width_; }

    uint64_t forward(uint64_t x) const;
    uint64_t inverse(uint64_t y) const;

  private:
    static constexpr int kRounds = 4;
    uint64_t round_fn(int r, uint64_t half) const;

    Key128 key_;
    size_t width_ = 0;
    size_t left_bits_ = 0;
    size_t right_bits_ = 0;
    uint64_t left_mask_ = 0;
    uint64_t right_mask_ = 0;
};

}  // namespace qkl

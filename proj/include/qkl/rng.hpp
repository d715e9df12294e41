#pragma once

#include <cstdint>
#include <vector>

namespace qkl {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic per-stream random source (xoshiro256** seeded via splitmix64).
// Identical (seed, stream) reproduces identical outcome sequences, independent
// of platform and of how many other streams exist.
class Rng {
  public:
    Rng() : Rng(0, 0) {}
    Rng(uint64_t seed, uint64_t stream = 0) : seed_(seed), stream_(stream) {
        uint64_t x = seed ^ 0x6a09e667f3bcc908ULL;
        x = splitmix64(x) ^ splitmix64(stream ^ 0xbb67ae8584caa73bULL);
        for (auto &w : s_) {
            x = splitmix64(x);
            w = x;
        }
        // xoshiro must not start at the all-zero state.
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }

    // Independent child stream; used to give each trial / actor its own source.
    Rng fork(uint64_t substream) const {
        return Rng(seed_, splitmix64(stream_ ^ splitmix64(substream ^ 0x3c6ef372fe94f82bULL)));
    }

    uint64_t u64() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    int bit() { return static_cast<int>(u64() >> 63); }

    // Unbiased integer in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = u64();
            if (r >= threshold) return r % n;
        }
    }

    double real() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return real() < p; }

    template <typename T>
    void shuffle(std::vector<T> &v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t seed_;
    uint64_t stream_;
    uint64_t s_[4];
};

}  // namespace qkl

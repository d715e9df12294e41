#pragma once

#include <cstdint>
#include <optional>

#include "qkl/bitstring.hpp"
#include "qkl/keyed_fn.hpp"
#include "qkl/pirate.hpp"
#include "qkl/rng.hpp"

namespace qkl {

// Toy traceable PRF with identity space {0,1}.
//
// Identity keys deviate from the master evaluation on a hidden trap set:
// the key for identity id evaluates the alternate PRF on T_{1-id}, where
// T_j = { x : P(k_trap, x) mod M = j } for a keyed permutation P. A tracer
// that can sample the trap sets distinguishes which identity powers a
// pirate, because each key is wrong on exactly one of them.
struct TprfParams {
    size_t domain_width = 64;
    size_t range_width = 64;
    uint64_t trap_modulus = 1024;  // power of two, >= 4
};

struct TprfMsk {
    TprfParams params;
    Key128 k_main;
    Key128 k_alt;
    Key128 k_trap;
    FeistelPerm trap_perm;

    bool in_trap(const BitString &x, int j) const;
    // Uniform sample from T_j.
    BitString sample_trap(int j, Rng &rng) const;
};

struct TprfKey {
    uint8_t id = 0;
    TprfParams params;
    Key128 k_main;
    Key128 k_alt;
    Key128 k_trap;
    FeistelPerm trap_perm;

    std::vector<uint8_t> serialize() const;
};

TprfMsk tprf_setup(const TprfParams &params, Rng &rng);

// Deterministic: repeated calls return byte-identical keys.
TprfKey tprf_kg(const TprfMsk &msk, int id);

BitString tprf_eval(const TprfMsk &msk, const BitString &x);
BitString tprf_eval(const TprfKey &key, const BitString &x);

// Weak-PRF challenge: x uniform, y = f(x) if b = 0 else uniform.
std::pair<BitString, BitString> wprf_challenge(const std::function<BitString(const BitString &)> &f,
                                               size_t domain_width, size_t range_width, int b, Rng &rng);

// Trace a pirate by comparing its success on challenges drawn from the two
// trap sets: for each j, estimate p_j over n = ceil(32/eps^2 * ln(1/delta))
// challenges with x uniform in T_j. Accuse argmax j* when p_{j*} clears
// 1/2 + eps/4 and leads by eps/4; otherwise output nullopt (bottom).
std::optional<int> tprf_trace(const TprfMsk &msk, PirateProgram &pirate, double eps, double delta_est, Rng &rng);

// Same, with the challenge fed through a caller-supplied wrapper, which the
// multi-level construction uses to offset y by the other instances.
std::optional<int> tprf_trace_wrapped(
    const TprfMsk &msk,
    const std::function<int(const BitString &, const BitString &)> &wrapped_guess, double eps, double delta_est,
    Rng &rng);

}  // namespace qkl

#pragma once

#include <cstdint>
#include <vector>

#include "qkl/bitstring.hpp"
#include "qkl/rng.hpp"

namespace qkl {

// Boneh-Shaw fingerprinting code state. User s's codeword (before the secret
// column permutation) has 1s in blocks B_1..B_{s-1} and 0s in B_s..B_{N-1},
// each block `block_size` columns wide.
struct Codebook {
    uint32_t n_users = 0;
    uint64_t code_length = 0;
    std::vector<BitString> codewords;  // codewords[id-1], ids are 1-based

    const BitString &codeword(uint32_t id) const;
};

struct FcTracingKey {
    uint32_t n_users = 0;
    uint64_t block_size = 0;
    double eps_fc = 0.0;
    std::vector<uint64_t> permutation;  // permuted_column = permutation[plain_column]

    std::string to_json() const;
    static FcTracingKey from_json(const std::string &text);
};

// Block size for the target tracing-error budget: ceil(8 N^2 ln(4N/eps)).
uint64_t fc_block_size(uint32_t n_users, double eps_fc);

// Sample a fresh code. `block_override` (if nonzero) replaces the formula
// block size; harness configs use it to scale the code down when tracing
// error is not the property under test.
std::pair<Codebook, FcTracingKey> fc_setup(uint32_t n_users, double eps_fc, Rng &rng, uint64_t block_override = 0);

// Rebuild the (deterministic given tk) codebook from a tracing key.
Codebook fc_codebook(const FcTracingKey &tk);

// Feasible-set membership: every column of w agrees with some member of W.
bool feasible(const Codebook &codebook, const std::vector<uint32_t> &coalition, const BitString &w);

// Accuse a user from a feasible word. Throws trace_fail_error when no
// accusation rule fires (adversarially impossible input).
uint32_t fc_trace(const FcTracingKey &tk, const BitString &w);

}  // namespace qkl

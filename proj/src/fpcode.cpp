#include "qkl/fpcode.hpp"

#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "qkl/errors.hpp"

namespace qkl {

const BitString &Codebook::codeword(uint32_t id) const {
    if (id < 1 || id > n_users) throw bad_parameter_error("codeword: id out of range");
    return codewords[id - 1];
}

uint64_t fc_block_size(uint32_t n_users, double eps_fc) {
    if (n_users < 2) throw bad_parameter_error("fc_block_size: need N >= 2");
    if (eps_fc <= 0.0 || eps_fc >= 1.0) throw bad_parameter_error("fc_block_size: eps_fc must be in (0,1)");
    double n = static_cast<double>(n_users);
    return static_cast<uint64_t>(std::ceil(8.0 * n * n * std::log(4.0 * n / eps_fc)));
}

static Codebook build_codebook(uint32_t n_users, uint64_t d, const std::vector<uint64_t> &perm) {
    uint64_t ell = static_cast<uint64_t>(n_users - 1) * d;
    Codebook cb;
    cb.n_users = n_users;
    cb.code_length = ell;
    cb.codewords.reserve(n_users);
    for (uint32_t id = 1; id <= n_users; ++id) {
        BitString w(ell);
        // Plain column c lies in block (c / d) + 1; user id has 1s in blocks < id.
        for (uint64_t c = 0; c < ell; ++c) {
            uint64_t block = c / d + 1;
            if (block < id) w.set_bit(perm[c], 1);
        }
        cb.codewords.push_back(std::move(w));
    }
    return cb;
}

std::pair<Codebook, FcTracingKey> fc_setup(uint32_t n_users, double eps_fc, Rng &rng, uint64_t block_override) {
    uint64_t d = block_override ? block_override : fc_block_size(n_users, eps_fc);
    if (d < 1) throw bad_parameter_error("fc_setup: block size must be >= 1");
    uint64_t ell = static_cast<uint64_t>(n_users - 1) * d;

    FcTracingKey tk;
    tk.n_users = n_users;
    tk.block_size = d;
    tk.eps_fc = eps_fc;
    tk.permutation.resize(ell);
    std::iota(tk.permutation.begin(), tk.permutation.end(), 0);
    rng.shuffle(tk.permutation);

    return {build_codebook(n_users, d, tk.permutation), tk};
}

Codebook fc_codebook(const FcTracingKey &tk) { return build_codebook(tk.n_users, tk.block_size, tk.permutation); }

bool feasible(const Codebook &codebook, const std::vector<uint32_t> &coalition, const BitString &w) {
    if (w.width() != codebook.code_length) throw width_mismatch_error("feasible: word width != code length");
    for (uint64_t c = 0; c < codebook.code_length; ++c) {
        bool matched = false;
        for (uint32_t id : coalition) {
            if (codebook.codeword(id).bit(c) == w.bit(c)) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

uint32_t fc_trace(const FcTracingKey &tk, const BitString &w) {
    uint64_t ell = static_cast<uint64_t>(tk.n_users - 1) * tk.block_size;
    if (w.width() != ell) throw width_mismatch_error("fc_trace: word width != code length");

    // Un-permute and take per-block weights.
    std::vector<uint64_t> block_weight(tk.n_users - 1, 0);
    for (uint64_t c = 0; c < ell; ++c) {
        if (w.bit(tk.permutation[c])) block_weight[c / tk.block_size] += 1;
    }

    uint64_t d = tk.block_size;
    if (block_weight.front() < d) return 1;
    if (block_weight.back() > 0) return tk.n_users;

    double threshold =
        2.0 * std::sqrt(static_cast<double>(d) / 2.0 * std::log(4.0 * static_cast<double>(tk.n_users) / tk.eps_fc));
    for (uint32_t s = 2; s < tk.n_users; ++s) {
        double gap = std::abs(static_cast<double>(block_weight[s - 2]) - static_cast<double>(block_weight[s - 1]));
        if (gap > threshold) return s;
    }
    throw trace_fail_error("fc_trace: no accusation rule fired");
}

std::string FcTracingKey::to_json() const {
    nlohmann::json j;
    j["n_users"] = n_users;
    j["block_size"] = block_size;
    j["eps_fc"] = eps_fc;
    j["permutation"] = permutation;
    return j.dump();
}

FcTracingKey FcTracingKey::from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FcTracingKey tk;
    tk.n_users = j.at("n_users").get<uint32_t>();
    tk.block_size = j.at("block_size").get<uint64_t>();
    tk.eps_fc = j.at("eps_fc").get<double>();
    tk.permutation = j.at("permutation").get<std::vector<uint64_t>>();
    if (tk.permutation.size() != static_cast<size_t>(tk.n_users - 1) * tk.block_size)
        throw bad_parameter_error("FcTracingKey::from_json: permutation length mismatch");
    return tk;
}

}  // namespace qkl

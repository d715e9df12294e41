#include "qkl/tprf.hpp"

#include <bit>
#include <cmath>

#include "qkl/errors.hpp"
#include "qkl/stats.hpp"

namespace qkl {

namespace {
constexpr uint64_t kMainTag = 0x7072665f6d61696eULL;  // "prf_main"
constexpr uint64_t kAltTag = 0x7072665f615f6c74ULL;
}  // namespace

static void check_params(const TprfParams &p) {
    if (p.domain_width < 2 || p.domain_width > 64) throw bad_parameter_error("tprf: domain width must be in [2,64]");
    if (p.range_width < 1) throw bad_parameter_error("tprf: range width must be >= 1");
    if (p.trap_modulus < 4 || !std::has_single_bit(p.trap_modulus))
        throw bad_parameter_error("tprf: trap modulus must be a power of two >= 4");
    if (p.trap_modulus > (uint64_t(1) << (p.domain_width - 1)))
        throw bad_parameter_error("tprf: trap modulus too large for domain");
}

bool TprfMsk::in_trap(const BitString &x, int j) const {
    return (trap_perm.forward(x.to_value()) & (params.trap_modulus - 1)) == static_cast<uint64_t>(j);
}

BitString TprfMsk::sample_trap(int j, Rng &rng) const {
    uint64_t buckets = (uint64_t(1) << params.domain_width) / params.trap_modulus;
    uint64_t image = rng.below(buckets) * params.trap_modulus + static_cast<uint64_t>(j);
    return BitString::from_value(trap_perm.inverse(image), params.domain_width);
}

TprfMsk tprf_setup(const TprfParams &params, Rng &rng) {
    check_params(params);
    TprfMsk msk;
    msk.params = params;
    msk.k_main = Key128::sample(rng);
    msk.k_alt = Key128::sample(rng);
    msk.k_trap = Key128::sample(rng);
    msk.trap_perm = FeistelPerm(msk.k_trap, params.domain_width);
    return msk;
}

TprfKey tprf_kg(const TprfMsk &msk, int id) {
    if (id != 0 && id != 1) throw bad_parameter_error("tprf_kg: identity must be 0 or 1");
    TprfKey key;
    key.id = static_cast<uint8_t>(id);
    key.params = msk.params;
    key.k_main = msk.k_main;
    key.k_alt = msk.k_alt;
    key.k_trap = msk.k_trap;
    key.trap_perm = msk.trap_perm;
    return key;
}

BitString tprf_eval(const TprfMsk &msk, const BitString &x) {
    if (x.width() != msk.params.domain_width) throw width_mismatch_error("tprf_eval: input width");
    return keyed::f_bits(msk.k_main, kMainTag, x, msk.params.range_width);
}

BitString tprf_eval(const TprfKey &key, const BitString &x) {
    if (x.width() != key.params.domain_width) throw width_mismatch_error("tprf_eval: input width");
    uint64_t residue = key.trap_perm.forward(x.to_value()) & (key.params.trap_modulus - 1);
    bool in_opposite_trap = residue == static_cast<uint64_t>(1 - key.id);
    return keyed::f_bits(in_opposite_trap ? key.k_alt : key.k_main, in_opposite_trap ? kAltTag : kMainTag, x,
                         key.params.range_width);
}

std::vector<uint8_t> TprfKey::serialize() const {
    std::vector<uint8_t> out;
    out.reserve(2 + 3 * 16 + 10);
    auto push64 = [&out](uint64_t v) {
        for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
    };
    out.push_back(1);  // layout version
    out.push_back(id);
    out.push_back(static_cast<uint8_t>(params.domain_width));
    out.push_back(static_cast<uint8_t>(params.range_width));
    push64(params.trap_modulus);
    push64(k_main.lo);
    push64(k_main.hi);
    push64(k_alt.lo);
    push64(k_alt.hi);
    push64(k_trap.lo);
    push64(k_trap.hi);
    return out;
}

std::pair<BitString, BitString> wprf_challenge(const std::function<BitString(const BitString &)> &f,
                                               size_t domain_width, size_t range_width, int b, Rng &rng) {
    BitString x = BitString::random(domain_width, rng);
    BitString y = (b & 1) ? BitString::random(range_width, rng) : f(x);
    return {std::move(x), std::move(y)};
}

std::optional<int> tprf_trace_wrapped(const TprfMsk &msk,
                                      const std::function<int(const BitString &, const BitString &)> &wrapped_guess,
                                      double eps, double delta_est, Rng &rng) {
    if (eps <= 0.0) throw bad_parameter_error("tprf_trace: eps must be positive");
    uint64_t n = static_cast<uint64_t>(std::ceil(32.0 / (eps * eps) * std::log(1.0 / delta_est)));
    double p[2];
    for (int j = 0; j < 2; ++j) {
        uint64_t hits = 0;
        for (uint64_t i = 0; i < n; ++i) {
            int b = rng.bit();
            BitString x = msk.sample_trap(j, rng);
            BitString y = b ? BitString::random(msk.params.range_width, rng) : tprf_eval(msk, x);
            if (wrapped_guess(x, y) == b) ++hits;
        }
        p[j] = static_cast<double>(hits) / static_cast<double>(n);
    }
    int best = p[1] > p[0] ? 1 : 0;
    if (p[best] >= 0.5 + eps / 4.0 && p[best] - p[1 - best] >= eps / 4.0) return best;
    return std::nullopt;
}

std::optional<int> tprf_trace(const TprfMsk &msk, PirateProgram &pirate, double eps, double delta_est, Rng &rng) {
    auto result = tprf_trace_wrapped(
        msk, [&pirate](const BitString &x, const BitString &y) { return pirate.guess(x, y); }, eps, delta_est, rng);
    pirate.trace_measured();
    ++pirate.trace_measure_calls;
    return result;
}

}  // namespace qkl

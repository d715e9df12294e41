#pragma once

#include <functional>

#include "qkl/bitstring.hpp"
#include "qkl/rng.hpp"

namespace qkl {

// Exact symbolic form of (|left> + (-1)^phase |right>)/sqrt(2).
//
// Every quantum register the library manipulates holds at most two
// computational-basis terms with a +/-1 relative phase, so this triple is a
// lossless O(width) representation: no statevector, no amplitudes, widths of
// hundreds of bits are free.
class TwoTermState {
  public:
    enum class Status {
        superposed,   // both terms live
        collapsed,    // a computational measurement fixed one branch
        measured_out  // consumed by a Hadamard-basis measurement
    };

    // (|v> + (-1)^b |w>)/sqrt(2); v != w, equal widths.
    static TwoTermState make(const BitString &v, const BitString &w, int phase_bit);

    Status status() const { return status_; }
    bool superposed() const { return status_ == Status::superposed; }
    size_t width() const { return left_.width(); }
    const BitString &left() const { return left_; }
    const BitString &right() const { return right_; }
    int phase() const { return phase_; }
    // Valid once collapsed: 0 selects left, 1 selects right.
    int collapsed_branch() const;
    const BitString &branch_value() const;

    // Unitary relabeling |u> -> |u, f(u)>: appends f(branch) to each branch.
    // Exact as long as f is deterministic with a fixed output width.
    TwoTermState append_coherent(const std::function<BitString(const BitString &)> &f) const;

    // Computational-basis measurement. Born rule on first call (each branch
    // probability exactly 1/2), idempotent afterwards.
    BitString measure_computational(Rng &rng);

    // Hadamard-basis measurement; consumes the state.
    //  superposed: d uniform over { d : <d, left^right> = phase }.
    //  collapsed:  d uniform over all 2^width strings (the mixed-state
    //              marginal) -- this branch is what makes a
    //              measure-then-fake-certificate attacker fail half the time.
    BitString measure_hadamard(Rng &rng);

    // Compute g on the branch labels and measure the output register.
    // If g agrees on both branches the state is returned bit-for-bit
    // unchanged (exact gentle measurement for two-term states); otherwise the
    // state collapses to either branch with probability 1/2.
    BitString gentle_eval(const std::function<BitString(const BitString &)> &g, Rng &rng);

    bool operator==(const TwoTermState &o) const {
        return status_ == o.status_ && phase_ == o.phase_ && branch_ == o.branch_ && left_ == o.left_ &&
               right_ == o.right_;
    }

  private:
    TwoTermState() = default;

    BitString left_;
    BitString right_;
    int phase_ = 0;
    Status status_ = Status::superposed;
    int branch_ = 0;  // meaningful when collapsed
};

// Free-function spellings.
TwoTermState make_two_term(const BitString &v, const BitString &w, int phase_bit);

// Uniform sample from { d : <d, diff> = parity }, diff != 0. The subspace has
// size 2^(width-1): pin one coordinate where diff is 1, draw the rest
// uniformly, solve the pinned coordinate from the parity equation.
BitString sample_parity_subspace(const BitString &diff, int parity, Rng &rng);

}  // namespace qkl

#include "qkl/two_term.hpp"

#include "qkl/errors.hpp"

namespace qkl {

TwoTermState TwoTermState::make(const BitString &v, const BitString &w, int phase_bit) {
    if (v.width() != w.width()) throw width_mismatch_error("make_two_term: branch widths differ");
    if (v.width() == 0) throw bad_parameter_error("make_two_term: width must be >= 1");
    if (v == w) throw degenerate_state_error("make_two_term: equal branch labels");
    TwoTermState s;
    s.left_ = v;
    s.right_ = w;
    s.phase_ = phase_bit & 1;
    s.status_ = Status::superposed;
    return s;
}

int TwoTermState::collapsed_branch() const {
    if (status_ != Status::collapsed) throw state_consumed_error("collapsed_branch: state not collapsed");
    return branch_;
}

const BitString &TwoTermState::branch_value() const {
    if (status_ != Status::collapsed) throw state_consumed_error("branch_value: state not collapsed");
    return branch_ == 0 ? left_ : right_;
}

TwoTermState TwoTermState::append_coherent(const std::function<BitString(const BitString &)> &f) const {
    if (status_ != Status::superposed) throw state_consumed_error("append_coherent: state not superposed");
    BitString fl = f(left_);
    BitString fr = f(right_);
    if (fl.width() != fr.width()) throw width_mismatch_error("append_coherent: f output width varies");
    TwoTermState s;
    s.left_ = left_.concat(fl);
    s.right_ = right_.concat(fr);
    s.phase_ = phase_;
    s.status_ = Status::superposed;
    return s;
}

BitString TwoTermState::measure_computational(Rng &rng) {
    switch (status_) {
        case Status::superposed:
            branch_ = rng.bit();
            status_ = Status::collapsed;
            return branch_ == 0 ? left_ : right_;
        case Status::collapsed:
            return branch_ == 0 ? left_ : right_;
        case Status::measured_out:
        default:
            throw state_consumed_error("measure_computational: register already measured out");
    }
}

BitString TwoTermState::measure_hadamard(Rng &rng) {
    switch (status_) {
        case Status::superposed: {
            BitString d = sample_parity_subspace(left_ ^ right_, phase_, rng);
            status_ = Status::measured_out;
            return d;
        }
        case Status::collapsed: {
            BitString d = BitString::random(width(), rng);
            status_ = Status::measured_out;
            return d;
        }
        case Status::measured_out:
        default:
            throw state_consumed_error("measure_hadamard: register already measured out");
    }
}

BitString TwoTermState::gentle_eval(const std::function<BitString(const BitString &)> &g, Rng &rng) {
    if (status_ == Status::measured_out) throw state_consumed_error("gentle_eval: register already measured out");
    if (status_ == Status::collapsed) return g(branch_ == 0 ? left_ : right_);
    BitString gl = g(left_);
    BitString gr = g(right_);
    if (gl.width() != gr.width()) throw width_mismatch_error("gentle_eval: g output width varies");
    if (gl == gr) return gl;  // output register is unentangled with the branch label
    branch_ = rng.bit();
    status_ = Status::collapsed;
    return branch_ == 0 ? gl : gr;
}

TwoTermState make_two_term(const BitString &v, const BitString &w, int phase_bit) {
    return TwoTermState::make(v, w, phase_bit);
}

BitString sample_parity_subspace(const BitString &diff, int parity, Rng &rng) {
    if (diff.is_zero()) throw degenerate_state_error("sample_parity_subspace: zero difference");
    size_t pin = 0;
    while (diff.bit(pin) == 0) ++pin;
    BitString d = BitString::random(diff.width(), rng);
    d.set_bit(pin, 0);
    // <d, diff> with the pinned coordinate cleared, then solve for it.
    int acc = d.inner(diff);
    d.set_bit(pin, acc ^ (parity & 1));
    return d;
}

}  // namespace qkl

#pragma once

#include "qkl/rng.hpp"

namespace qkl {

enum class Basis { computational, hadamard };

// Single conjugate-coding qubit |x> in basis theta. Measuring in the
// preparation basis reproduces x; measuring in the other basis yields a
// uniform bit and re-prepares the qubit in the measured basis.
class BB84Qubit {
  public:
    BB84Qubit() = default;
    BB84Qubit(int bit, Basis basis) : bit_(bit & 1), basis_(basis) {}

    int bit() const { return bit_; }
    Basis basis() const { return basis_; }
    bool measured() const { return measured_; }

    int measure(Basis basis, Rng &rng) {
        if (basis != basis_) {
            bit_ = rng.bit();
            basis_ = basis;
        }
        measured_ = true;
        return bit_;
    }

  private:
    int bit_ = 0;
    Basis basis_ = Basis::computational;
    bool measured_ = false;
};

inline int bb84_measure(BB84Qubit &qb, Basis basis, Rng &rng) { return qb.measure(basis, rng); }

}  // namespace qkl

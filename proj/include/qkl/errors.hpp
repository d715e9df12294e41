#pragma once

#include <stdexcept>
#include <string>

namespace qkl {

struct width_mismatch_error : std::invalid_argument {
    explicit width_mismatch_error(const std::string &what) : std::invalid_argument(what) {}
};

// Constructing (|v> + (-1)^b |v>)/sqrt(2): either unnormalized or the zero vector.
struct degenerate_state_error : std::invalid_argument {
    explicit degenerate_state_error(const std::string &what) : std::invalid_argument(what) {}
};

// Operation applied to a register that was already consumed by a destructive measurement.
struct state_consumed_error : std::logic_error {
    explicit state_consumed_error(const std::string &what) : std::logic_error(what) {}
};

struct bad_parameter_error : std::invalid_argument {
    explicit bad_parameter_error(const std::string &what) : std::invalid_argument(what) {}
};

// Fingerprinting-code tracing reached no accusation rule.
struct trace_fail_error : std::runtime_error {
    explicit trace_fail_error(const std::string &what) : std::runtime_error(what) {}
};

// Stateful Lamport/Merkle signer ran out of one-time leaves.
struct leaf_exhausted_error : std::runtime_error {
    explicit leaf_exhausted_error(const std::string &what) : std::runtime_error(what) {}
};

struct unknown_index_error : std::invalid_argument {
    explicit unknown_index_error(const std::string &what) : std::invalid_argument(what) {}
};

}  // namespace qkl

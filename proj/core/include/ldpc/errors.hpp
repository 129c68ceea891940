#pragma once

#include <stdexcept>

namespace ldpc {

// A degree distribution violates its invariants (negative mass, unnormalized,
// zero or mismatched socket counts).
struct invalid_distribution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A scalar argument is out of its documented range.
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Decoder input contradicts the code. Impossible under a correctly simulated
// channel; raised so hand-built bad inputs fail loudly instead of silently.
struct inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad CLI/config input; the tool maps this to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ldpc

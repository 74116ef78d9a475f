#pragma once

#include <stdexcept>
#include <string>

namespace hardsoft {

// A mathematical identity the pipeline relies on failed to hold exactly
// (non-cancelling irrational factor, nonzero division remainder, broken
// parity, ...). Distinct from bad input: this means the theory check fired.
struct MathInvariantError : std::runtime_error {
    explicit MathInvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Working precision cannot meet the requested target (escalation cap hit,
// or a residual sits below the accumulated rounding-error bound).
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hardsoft

#pragma once

#include <stdexcept>

namespace ooc {

// Base class for all failures raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimensions, weights, shifts or thresholds outside their valid range.
struct parameter_error : error {
    using error::error;
};

// A code view that violates its structural invariants: bad gap sums,
// duplicate or out-of-range cells, empty codes, unparseable tokens.
struct malformed_code_error : error {
    using error::error;
};

// Two codes that must be distinct share a canonical form, so the pair
// degenerates to a single code.
struct duplicate_code_error : error {
    using error::error;
};

}  // namespace ooc

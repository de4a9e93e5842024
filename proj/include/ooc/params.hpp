#pragma once

#include <string>

#include "ooc/errors.hpp"

namespace ooc {

// Shape of a matrix code: rows x cols cells carrying `weight` ones.
// Rows index wavelengths, columns index time slots. Everything internal is
// 0-based; only display and serialization use 1-based rows.
struct CodeParams {
    int rows = 1;
    int cols = 1;
    int weight = 1;

    constexpr int length() const { return rows * cols; }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline void validate(const CodeParams& p) {
    if (p.rows < 1 || p.cols < 1)
        throw parameter_error("rows and cols must be >= 1, got " + std::to_string(p.rows) +
                              "x" + std::to_string(p.cols));
    if (p.weight < 1 || p.weight > p.length())
        throw parameter_error("weight must be in [1, rows*cols], got " +
                              std::to_string(p.weight) + " for " + std::to_string(p.rows) +
                              "x" + std::to_string(p.cols));
}

}  // namespace ooc

#pragma once

#include <cstdint>
#include <vector>

#include "ooc/errors.hpp"

namespace ooc {

// Conversions between the gap view (circular differences of consecutive
// weighted positions) and the position view of a cyclic binary word.
// Gaps are strictly positive and sum to the word length.

// p1 = 0, p_{k+1} = (p_k + gap_k) mod length; returns the sorted positions.
std::vector<int> positions_from_gaps(const std::vector<int>& gaps, int length);

// Circular differences between consecutive positions, anchored at the
// smallest position. Inverse of positions_from_gaps up to rotation.
std::vector<int> gaps_from_positions(const std::vector<int>& positions, int length);

// The rotation that ends with a maximal gap; when the maximum repeats, the
// lexicographically smallest such rotation.
std::vector<int> canonical_gaps(const std::vector<int>& gaps);

// A cyclic constant-weight binary word of length n, kept in three mutually
// consistent views: gaps, sorted positions, and the bit vector.
class OneDimCode {
public:
    // length is the gap sum; all gaps must be >= 1
    static OneDimCode from_gaps(std::vector<int> gaps);
    // positions must be distinct and within [0, length)
    static OneDimCode from_positions(std::vector<int> positions, int length);

    int length() const { return length_; }
    int weight() const { return static_cast<int>(gaps_.size()); }
    const std::vector<int>& gaps() const { return gaps_; }
    const std::vector<int>& positions() const { return positions_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    bool is_canonical() const;

    friend bool operator==(const OneDimCode&, const OneDimCode&) = default;

private:
    OneDimCode() = default;

    int length_ = 0;
    std::vector<int> gaps_;
    std::vector<int> positions_;
    std::vector<std::uint8_t> bits_;
};

}  // namespace ooc

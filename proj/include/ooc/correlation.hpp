#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ooc/matrix_code.hpp"

namespace ooc {

enum class ProfileKind { Auto, Cross };

// Overlap counts per column shift tau. Auto profiles cover tau in [1, cols-1]
// (empty when cols == 1), cross profiles cover tau in [0, cols-1]. The
// constraint is the maximum value, 0 for an empty profile.
struct CorrelationProfile {
    ProfileKind kind = ProfileKind::Auto;
    std::vector<int> values;
    int constraint = 0;
};

// Number of weighted positions common to both codes. Dimensions must match.
int intersection_count(const MatrixCode& a, const MatrixCode& b);

// Direct shift-and-count over the grids: overlap of a with b shifted right
// by tau columns, sum of a[i][(j+tau) mod cols] * b[i][j] over all cells.
// Independent of the set-intersection path; the raw overload exists so
// arbitrary bit patterns (including all-zero) can be checked.
int grid_overlap(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                 int rows, int cols, int tau);
int grid_overlap(const MatrixCode& a, const MatrixCode& b, int tau);

// Overlap of the code with each of its nonzero column shifts.
CorrelationProfile auto_profile(const MatrixCode& code);

// Overlap of x with every column shift of y, tau = 0 included. The two codes
// must be distinct (different canonical forms) and share dimensions.
CorrelationProfile cross_profile(const MatrixCode& x, const MatrixCode& y);

struct SetConstraints {
    int lambda_a = 0;
    int lambda_c = 0;
};

// Realized constraints of a set: max auto constraint over the codes and max
// cross constraint over unordered pairs (0 for a singleton). The codes must
// be pairwise distinct.
SetConstraints set_constraints(std::span<const MatrixCode> codes);

}  // namespace ooc

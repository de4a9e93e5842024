#include "ooc/correlation.hpp"

#include <algorithm>
#include <string>

namespace ooc {

namespace {

void check_same_shape(const MatrixCode& a, const MatrixCode& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw parameter_error("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
}

}  // namespace

int intersection_count(const MatrixCode& a, const MatrixCode& b) {
    check_same_shape(a, b);
    // both cell lists are sorted column-major
    const auto& lhs = a.cells();
    const auto& rhs = b.cells();
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < lhs.size() && j < rhs.size()) {
        const auto l = std::pair{lhs[i].col, lhs[i].row};
        const auto r = std::pair{rhs[j].col, rhs[j].row};
        if (l == r) {
            ++count;
            ++i;
            ++j;
        } else if (l < r) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

int grid_overlap(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int rows,
                 int cols, int tau) {
    if (rows < 1 || cols < 1) throw parameter_error("rows and cols must be >= 1");
    if (a.size() != static_cast<std::size_t>(rows) * cols || a.size() != b.size())
        throw parameter_error("grid size mismatch");
    tau = ((tau % cols) + cols) % cols;
    // cell (r, c) of b lands on column (c + tau) mod cols after the shift
    int sum = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            sum += a[static_cast<std::size_t>(r) * cols + (c + tau) % cols] *
                   b[static_cast<std::size_t>(r) * cols + c];
    return sum;
}

int grid_overlap(const MatrixCode& a, const MatrixCode& b, int tau) {
    check_same_shape(a, b);
    return grid_overlap(a.grid(), b.grid(), a.rows(), a.cols(), tau);
}

CorrelationProfile auto_profile(const MatrixCode& code) {
    CorrelationProfile profile;
    profile.kind = ProfileKind::Auto;
    for (int tau = 1; tau < code.cols(); ++tau)
        profile.values.push_back(intersection_count(code, code.column_shift(tau)));
    profile.constraint =
        profile.values.empty() ? 0 : *std::max_element(profile.values.begin(), profile.values.end());
    return profile;
}

CorrelationProfile cross_profile(const MatrixCode& x, const MatrixCode& y) {
    check_same_shape(x, y);
    if (x.canonical() == y.canonical())
        throw duplicate_code_error("cross-correlation of a code with itself");
    CorrelationProfile profile;
    profile.kind = ProfileKind::Cross;
    for (int tau = 0; tau < x.cols(); ++tau)
        profile.values.push_back(intersection_count(x, y.column_shift(tau)));
    profile.constraint = *std::max_element(profile.values.begin(), profile.values.end());
    return profile;
}

SetConstraints set_constraints(std::span<const MatrixCode> codes) {
    if (codes.empty()) throw parameter_error("set is empty");
    SetConstraints result;
    for (const MatrixCode& code : codes)
        result.lambda_a = std::max(result.lambda_a, auto_profile(code).constraint);
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j)
            result.lambda_c = std::max(result.lambda_c, cross_profile(codes[i], codes[j]).constraint);
    return result;
}

}  // namespace ooc

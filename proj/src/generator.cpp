#include "ooc/generator.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ooc/correlation.hpp"

namespace ooc {

namespace {

// Emits canonical gap tuples in lexicographic order. The prefix holds
// gaps chosen so far; `remaining` is what the rest must sum to.
void enumerate_rec(std::vector<int>& prefix, int remaining, int slots,
                   const std::function<void(const OneDimCode&)>& sink) {
    if (slots == 1) {
        // final gap absorbs the remainder; canonical tuples end on a maximal gap
        prefix.push_back(remaining);
        if (prefix == canonical_gaps(prefix)) sink(OneDimCode::from_gaps(prefix));
        prefix.pop_back();
        return;
    }
    // leave at least 1 per remaining slot
    for (int gap = 1; gap <= remaining - (slots - 1); ++gap) {
        prefix.push_back(gap);
        enumerate_rec(prefix, remaining - gap, slots - 1, sink);
        prefix.pop_back();
    }
}

}  // namespace

void enumerate_1d(int length, int weight, const std::function<void(const OneDimCode&)>& sink) {
    if (length < 1) throw parameter_error("length must be >= 1, got " + std::to_string(length));
    if (weight < 1 || weight > length)
        throw parameter_error("weight must be in [1, length], got " + std::to_string(weight) +
                              " for length " + std::to_string(length));
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(weight));
    enumerate_rec(prefix, length, weight, sink);
}

std::vector<OneDimCode> enumerate_1d(int length, int weight) {
    std::vector<OneDimCode> codes;
    enumerate_1d(length, weight, [&](const OneDimCode& code) { codes.push_back(code); });
    return codes;
}

std::vector<MatrixCode> lift_and_expand(std::span<const OneDimCode> codes, int rows, int cols) {
    std::vector<MatrixCode> result;
    std::map<CanonicalForm, bool> seen;
    for (const OneDimCode& word : codes) {
        if (word.length() != rows * cols)
            throw parameter_error("word length " + std::to_string(word.length()) +
                                  " != rows*cols = " + std::to_string(rows * cols));
        const MatrixCode base = lift_to_matrix(word, rows);
        for (int k = 0; k < rows; ++k) {
            MatrixCode shifted = base.row_shift(k);
            auto [it, inserted] = seen.try_emplace(shifted.canonical(), true);
            if (inserted) result.push_back(std::move(shifted));
        }
    }
    return result;
}

std::vector<Candidate> filter_by_auto(std::span<const MatrixCode> codes, int lambda_a_max) {
    if (lambda_a_max < 0)
        throw parameter_error("lambda_a threshold must be >= 0, got " +
                              std::to_string(lambda_a_max));
    std::vector<Candidate> kept;
    for (const MatrixCode& code : codes) {
        const int lambda_a = auto_profile(code).constraint;
        if (lambda_a <= lambda_a_max) kept.push_back({code, lambda_a});
    }
    return kept;
}

}  // namespace ooc

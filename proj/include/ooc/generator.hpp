#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ooc/matrix_code.hpp"
#include "ooc/one_dim.hpp"

namespace ooc {

// Streams every canonical gap tuple of the given length and weight in
// lexicographic order: gaps >= 1 summing to length, the last gap maximal,
// one representative per cyclic equivalence class.
void enumerate_1d(int length, int weight, const std::function<void(const OneDimCode&)>& sink);
std::vector<OneDimCode> enumerate_1d(int length, int weight);

// Lifts each word to a rows x cols matrix code, expands it to its `rows`
// row-shifted variants, and drops duplicates by canonical form. Order is
// deterministic: input order, then shift order, first occurrence kept.
std::vector<MatrixCode> lift_and_expand(std::span<const OneDimCode> codes, int rows, int cols);

// A code admitted to set formation, carrying its auto-correlation constraint.
struct Candidate {
    MatrixCode code;
    int lambda_a = 0;
};

// Keeps exactly the codes whose auto-correlation constraint is within the
// threshold; each survivor carries its computed constraint.
std::vector<Candidate> filter_by_auto(std::span<const MatrixCode> codes, int lambda_a_max);

}  // namespace ooc

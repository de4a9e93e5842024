#include "ooc/one_dim.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ooc {

namespace {

void check_gaps(const std::vector<int>& gaps, int length) {
    if (gaps.empty()) throw malformed_code_error("gap sequence is empty");
    for (int g : gaps)
        if (g < 1) throw malformed_code_error("gap " + std::to_string(g) + " is not positive");
    const long long sum = std::accumulate(gaps.begin(), gaps.end(), 0LL);
    if (sum != length)
        throw malformed_code_error("gap sum " + std::to_string(sum) + " != length " +
                                   std::to_string(length));
}

}  // namespace

std::vector<int> positions_from_gaps(const std::vector<int>& gaps, int length) {
    check_gaps(gaps, length);
    std::vector<int> positions;
    positions.reserve(gaps.size());
    int p = 0;
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        positions.push_back(p);
        p = (p + gaps[i]) % length;
    }
    positions.push_back(p);
    std::sort(positions.begin(), positions.end());
    return positions;
}

std::vector<int> gaps_from_positions(const std::vector<int>& positions, int length) {
    if (positions.empty()) throw malformed_code_error("position set is empty");
    std::vector<int> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw malformed_code_error("duplicate position");
    if (sorted.front() < 0 || sorted.back() >= length)
        throw malformed_code_error("position outside [0, " + std::to_string(length) + ")");
    std::vector<int> gaps;
    gaps.reserve(sorted.size());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) gaps.push_back(sorted[i + 1] - sorted[i]);
    gaps.push_back(length - sorted.back() + sorted.front());
    return gaps;
}

std::vector<int> canonical_gaps(const std::vector<int>& gaps) {
    if (gaps.empty()) throw malformed_code_error("gap sequence is empty");
    const int top = *std::max_element(gaps.begin(), gaps.end());
    const std::size_t w = gaps.size();
    std::vector<int> best;
    std::vector<int> rotated(w);
    for (std::size_t s = 0; s < w; ++s) {
        if (gaps[(s + w - 1) % w] != top) continue;  // rotation must end on a maximal gap
        for (std::size_t i = 0; i < w; ++i) rotated[i] = gaps[(s + i) % w];
        if (best.empty() || rotated < best) best = rotated;
    }
    return best;
}

OneDimCode OneDimCode::from_gaps(std::vector<int> gaps) {
    const long long sum = std::accumulate(gaps.begin(), gaps.end(), 0LL);
    if (sum > (1LL << 30)) throw parameter_error("word length " + std::to_string(sum) + " too large");
    check_gaps(gaps, static_cast<int>(sum));
    OneDimCode code;
    code.length_ = static_cast<int>(sum);
    code.positions_ = positions_from_gaps(gaps, code.length_);
    code.gaps_ = std::move(gaps);
    code.bits_.assign(static_cast<std::size_t>(code.length_), 0);
    for (int p : code.positions_) code.bits_[static_cast<std::size_t>(p)] = 1;
    return code;
}

OneDimCode OneDimCode::from_positions(std::vector<int> positions, int length) {
    OneDimCode code;
    code.gaps_ = gaps_from_positions(positions, length);
    code.length_ = length;
    std::sort(positions.begin(), positions.end());
    code.positions_ = std::move(positions);
    code.bits_.assign(static_cast<std::size_t>(length), 0);
    for (int p : code.positions_) code.bits_[static_cast<std::size_t>(p)] = 1;
    return code;
}

bool OneDimCode::is_canonical() const { return gaps_ == canonical_gaps(gaps_); }

}  // namespace ooc

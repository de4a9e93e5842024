#pragma once

// Shared fixtures and independent oracles for the test suite.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ooc/correlation.hpp"
#include "ooc/matrix_code.hpp"
#include "ooc/setsearch.hpp"

namespace testsupport {

// Reference pair of 4x5 weight-7 codes with known correlation profiles:
// code A has auto profile (2,1,1,2), code B has (1,2,2,1), and their cross
// profile is (4,2,2,2,2).
inline ooc::MatrixCode code_a() {
    return ooc::MatrixCode::from_cells(
        4, 5, {{0, 0}, {2, 0}, {1, 1}, {3, 1}, {0, 4}, {2, 4}, {3, 4}});
}

inline ooc::MatrixCode code_b() {
    return ooc::MatrixCode::from_cells(
        4, 5, {{0, 0}, {1, 0}, {3, 1}, {1, 2}, {2, 2}, {0, 4}, {3, 4}});
}

// Uniformly random constant-weight code: `weight` distinct cells.
inline ooc::MatrixCode random_code(std::mt19937& rng, int rows, int cols, int weight) {
    std::vector<int> slots(static_cast<std::size_t>(rows) * cols);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<ooc::Cell> cells;
    cells.reserve(static_cast<std::size_t>(weight));
    for (int i = 0; i < weight; ++i) cells.push_back({slots[i] / cols, slots[i] % cols});
    return ooc::MatrixCode::from_cells(rows, cols, std::move(cells));
}

// `count` pairwise-distinct random codes (distinct canonical forms).
inline std::vector<ooc::MatrixCode> random_pool(std::mt19937& rng, int count, int rows, int cols,
                                                int weight) {
    std::vector<ooc::MatrixCode> pool;
    while (static_cast<int>(pool.size()) < count) {
        ooc::MatrixCode code = random_code(rng, rows, cols, weight);
        const bool seen = std::any_of(pool.begin(), pool.end(),
                                      [&](const ooc::MatrixCode& p) { return p == code; });
        if (!seen) pool.push_back(std::move(code));
    }
    return pool;
}

// Burnside count of cyclic binary necklaces of length n and weight w:
// (1/n) * sum over d | gcd(n, w) of phi(d) * C(n/d, w/d).
inline std::uint64_t necklace_count(int n, int w) {
    const auto binom = [](int a, int b) -> std::uint64_t {
        if (b < 0 || b > a) return 0;
        std::uint64_t r = 1;
        for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / i;
        return r;
    };
    const auto phi = [](int d) {
        int result = d;
        for (int p = 2; p * p <= d; ++p) {
            if (d % p) continue;
            while (d % p == 0) d /= p;
            result -= result / p;
        }
        if (d > 1) result -= result / d;
        return result;
    };
    const int g = std::gcd(n, w);
    std::uint64_t total = 0;
    for (int d = 1; d <= g; ++d)
        if (g % d == 0) total += static_cast<std::uint64_t>(phi(d)) * binom(n / d, w / d);
    return total / static_cast<std::uint64_t>(n);
}

// Exhaustive necklace count for n <= 16: every weight-w bit pattern, deduped
// by its smallest rotation.
inline std::uint64_t bitmask_necklace_count(int n, int w) {
    const auto rotate = [n](unsigned mask, int k) {
        return ((mask >> k) | (mask << (n - k))) & ((1u << n) - 1u);
    };
    std::vector<unsigned> reps;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != w) continue;
        unsigned smallest = mask;
        for (int k = 1; k < n; ++k) smallest = std::min(smallest, rotate(mask, k));
        if (smallest == mask) reps.push_back(mask);
    }
    return reps.size();
}

// Maximal cliques by subset sweep (vertex count <= 20): a subset is a clique
// iff removing its lowest vertex leaves a clique inside that vertex's
// neighborhood; a clique is maximal iff no outside vertex covers it.
inline std::vector<std::vector<int>> brute_force_maximal_cliques(
    const ooc::CompatibilityGraph& graph) {
    const int n = graph.size();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && graph.adjacent(u, v)) adj[u] |= 1u << v;

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1u;
    std::vector<std::uint8_t> is_clique(static_cast<std::size_t>(full) + 1, 0);
    is_clique[0] = 1;
    std::vector<std::vector<int>> result;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int low = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        if (!is_clique[rest] || (adj[low] & rest) != rest) continue;
        is_clique[s] = 1;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(s & (1u << v)) && (adj[v] & s) == s) maximal = false;
        if (!maximal) continue;
        std::vector<int> clique;
        for (int v = 0; v < n; ++v)
            if (s & (1u << v)) clique.push_back(v);
        result.push_back(std::move(clique));
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace testsupport

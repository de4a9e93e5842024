#include "ooc/setsearch.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

namespace ooc {

std::uint64_t johnson_bound(int rows, int cols, int weight, int lambda) {
    validate(CodeParams{rows, cols, weight});
    if (lambda < 0) throw parameter_error("lambda must be >= 0, got " + std::to_string(lambda));
    if (lambda >= weight)
        throw parameter_error("lambda " + std::to_string(lambda) + " must be < weight " +
                              std::to_string(weight));
    using u128 = unsigned __int128;
    const u128 cells = static_cast<u128>(rows) * static_cast<u128>(cols);
    u128 v = 1;
    // innermost factor first: floor((LN - lambda) / (w - lambda)), then outward
    for (int k = lambda; k >= 1; --k) {
        const u128 numer = cells - static_cast<u128>(k);
        const u128 denom = static_cast<u128>(weight - k);
        if (v != 0 && numer > ~static_cast<u128>(0) / v)
            throw parameter_error("johnson bound exceeds supported integer range");
        v = v * numer / denom;
    }
    if (v != 0 && static_cast<u128>(rows) > ~static_cast<u128>(0) / v)
        throw parameter_error("johnson bound exceeds supported integer range");
    v = v * static_cast<u128>(rows) / static_cast<u128>(weight);
    if (v > static_cast<u128>(~static_cast<std::uint64_t>(0)))
        throw parameter_error("johnson bound exceeds supported integer range");
    return static_cast<std::uint64_t>(v);
}

int worker_count() {
    if (const char* env = std::getenv("OOC_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) return static_cast<int>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

CompatibilityGraph build_graph(std::vector<Candidate> codes, int lambda_a_max, int lambda_c_max) {
    if (lambda_a_max < 0 || lambda_c_max < 0)
        throw parameter_error("correlation thresholds must be >= 0");

    std::sort(codes.begin(), codes.end(), [](const Candidate& a, const Candidate& b) {
        return a.code.canonical() < b.code.canonical();
    });
    for (std::size_t i = 0; i + 1 < codes.size(); ++i)
        if (codes[i].code.canonical() == codes[i + 1].code.canonical())
            throw duplicate_code_error("candidate pool contains the same code twice: " +
                                       format_wpr(codes[i].code));
    for (std::size_t i = 1; i < codes.size(); ++i)
        if (!(codes[i].code.params() == codes[0].code.params()))
            throw parameter_error("candidates must share dimensions and weight");
    for (const Candidate& c : codes)
        if (c.lambda_a > lambda_a_max)
            throw parameter_error("candidate with lambda_a " + std::to_string(c.lambda_a) +
                                  " exceeds threshold " + std::to_string(lambda_a_max));

    CompatibilityGraph graph;
    graph.lambda_a_max_ = lambda_a_max;
    graph.lambda_c_max_ = lambda_c_max;
    if (!codes.empty()) graph.params_ = codes[0].code.params();
    graph.vertices_ = std::move(codes);

    const std::size_t n = graph.vertices_.size();
    graph.stride_ = (n + 63) / 64;
    graph.adj_.assign(n * graph.stride_, 0);
    if (n < 2) return graph;

    // pairwise cross constraints, pairs split across workers; each pair's
    // verdict lands in its own slot so the result is order-independent
    const std::size_t pair_count = n * (n - 1) / 2;
    std::vector<std::uint8_t> edge(pair_count, 0);
    const auto pair_index = [n](std::size_t i, std::size_t j) {
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    const auto compute_range = [&](std::size_t begin, std::size_t end) {
        std::size_t k = 0;
        for (std::size_t i = 0; i + 1 < n && k < end; ++i) {
            const std::size_t row_end = k + (n - i - 1);
            if (row_end <= begin) {
                k = row_end;
                continue;
            }
            for (std::size_t j = i + 1; j < n; ++j, ++k) {
                if (k < begin) continue;
                if (k >= end) return;
                const int constraint =
                    cross_profile(graph.vertices_[i].code, graph.vertices_[j].code).constraint;
                edge[k] = constraint <= lambda_c_max ? 1 : 0;
            }
        }
    };

    const int workers = std::min<int>(worker_count(), 1 + static_cast<int>(pair_count / 256));
    if (workers <= 1) {
        compute_range(0, pair_count);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        const std::size_t chunk = (pair_count + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            const std::size_t begin = static_cast<std::size_t>(t) * chunk;
            const std::size_t end = std::min(pair_count, begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(compute_range, begin, end);
        }
        for (std::thread& t : threads) t.join();
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!edge[pair_index(i, j)]) continue;
            graph.adj_[i * graph.stride_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
            graph.adj_[j * graph.stride_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
            ++graph.edges_;
        }
    }
    return graph;
}

namespace {

using Clock = std::chrono::steady_clock;

struct CliqueSearch {
    const CompatibilityGraph& graph;
    std::size_t words;
    std::size_t max_cliques;
    Clock::time_point deadline;
    bool has_deadline;
    std::vector<std::vector<int>> found;
    std::vector<int> current;
    bool aborted = false;

    bool out_of_budget() {
        if (max_cliques != 0 && found.size() >= max_cliques) return true;
        if (has_deadline && Clock::now() >= deadline) return true;
        return false;
    }

    static int first_bit(std::span<const std::uint64_t> set) {
        for (std::size_t w = 0; w < set.size(); ++w)
            if (set[w]) return static_cast<int>(w * 64 + std::countr_zero(set[w]));
        return -1;
    }

    int count_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
        int count = 0;
        for (std::size_t w = 0; w < words; ++w) count += std::popcount(a[w] & b[w]);
        return count;
    }

    void expand(std::vector<std::uint64_t>& p, std::vector<std::uint64_t>& x) {
        if (aborted) return;
        bool p_empty = true, x_empty = true;
        for (std::size_t w = 0; w < words; ++w) {
            p_empty = p_empty && p[w] == 0;
            x_empty = x_empty && x[w] == 0;
        }
        if (p_empty && x_empty) {
            found.push_back(current);
            if (out_of_budget()) aborted = true;
            return;
        }
        if (out_of_budget()) {
            aborted = true;
            return;
        }

        // pivot: vertex of P|X covering the most of P (smallest id on ties)
        int pivot = -1, best_cover = -1;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t both = p[w] | x[w];
            while (both) {
                const int v = static_cast<int>(w * 64 + std::countr_zero(both));
                both &= both - 1;
                const int cover = count_and(p, graph.neighbors(v));
                if (cover > best_cover) {
                    best_cover = cover;
                    pivot = v;
                }
            }
        }

        std::vector<std::uint64_t> candidates(words);
        const auto pivot_adj = graph.neighbors(pivot);
        for (std::size_t w = 0; w < words; ++w) candidates[w] = p[w] & ~pivot_adj[w];

        std::vector<std::uint64_t> next_p(words), next_x(words);
        for (int v = first_bit(candidates); v != -1; v = first_bit(candidates)) {
            candidates[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
            const auto adj = graph.neighbors(v);
            for (std::size_t w = 0; w < words; ++w) {
                next_p[w] = p[w] & adj[w];
                next_x[w] = x[w] & adj[w];
            }
            current.push_back(v);
            std::vector<std::uint64_t> sub_p = next_p, sub_x = next_x;
            expand(sub_p, sub_x);
            current.pop_back();
            if (aborted) return;
            p[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
            x[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
        }
    }
};

}  // namespace

CliqueEnumeration enumerate_maximal_cliques(const CompatibilityGraph& graph,
                                            const CliqueBudget& budget) {
    CliqueEnumeration result;
    const std::size_t n = static_cast<std::size_t>(graph.size());
    if (n == 0) return result;

    CliqueSearch search{graph,
                        graph.stride(),
                        budget.max_cliques,
                        Clock::now() + std::chrono::milliseconds(budget.time_limit_ms),
                        budget.time_limit_ms > 0,
                        {},
                        {},
                        false};
    std::vector<std::uint64_t> p(graph.stride(), 0), x(graph.stride(), 0);
    for (std::size_t v = 0; v < n; ++v) p[v >> 6] |= std::uint64_t{1} << (v & 63);
    search.expand(p, x);

    result.cliques = std::move(search.found);
    result.complete = !search.aborted;
    for (auto& clique : result.cliques) std::sort(clique.begin(), clique.end());
    std::sort(result.cliques.begin(), result.cliques.end());
    return result;
}

SetSearchResult maximum_sets(const CompatibilityGraph& graph, const CliqueEnumeration& cliques) {
    SetSearchResult result;
    result.complete = cliques.complete;
    const int weight = graph.size() > 0 ? graph.params().weight : 1;
    // the bound's collision parameter; overlaps of distinct codes never reach
    // the weight, so thresholds above weight-1 are equivalent to weight-1
    const int lambda = std::min(std::max(graph.lambda_a_max(), graph.lambda_c_max()), weight - 1);
    result.bound = graph.size() > 0
                       ? johnson_bound(graph.params().rows, graph.params().cols, weight, lambda)
                       : 0;

    std::size_t best = 0;
    for (const auto& clique : cliques.cliques) best = std::max(best, clique.size());
    if (best == 0) return result;

    for (const auto& clique : cliques.cliques) {
        if (clique.size() != best) continue;
        std::vector<MatrixCode> members;
        members.reserve(clique.size());
        for (int id : clique) members.push_back(graph.vertex(id).code);
        const SetConstraints realized = set_constraints(members);
        CodeSet set;
        set.ids = clique;
        set.lambda_a = realized.lambda_a;
        set.lambda_c = realized.lambda_c;
        set.bound = result.bound;
        result.sets.push_back(std::move(set));
    }
    return result;
}

VerifyReport verify_set(std::span<const MatrixCode> codes, int lambda_a_max, int lambda_c_max) {
    VerifyReport report;
    const int count = static_cast<int>(codes.size());
    for (int i = 0; i < count; ++i) {
        int constraint = 0;
        for (int tau = 1; tau < codes[i].cols(); ++tau)
            constraint = std::max(constraint, grid_overlap(codes[i], codes[i], tau));
        const bool pass = constraint <= lambda_a_max;
        report.entries.push_back({false, i, -1, constraint, lambda_a_max, pass});
        report.all_pass = report.all_pass && pass;
    }
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            int constraint = 0;
            for (int tau = 0; tau < codes[i].cols(); ++tau)
                constraint = std::max(constraint, grid_overlap(codes[i], codes[j], tau));
            const bool pass = constraint <= lambda_c_max;
            report.entries.push_back({true, i, j, constraint, lambda_c_max, pass});
            report.all_pass = report.all_pass && pass;
        }
    }
    return report;
}

}  // namespace ooc

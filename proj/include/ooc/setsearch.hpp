#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ooc/correlation.hpp"
#include "ooc/generator.hpp"

namespace ooc {

// Upper bound on the size of a code set with the given shape, weight and
// maximum collision parameter lambda: nested floors evaluated innermost
// first in exact integer arithmetic, times rows/weight. lambda must be less
// than weight; lambda = 0 degenerates to floor(rows / weight).
std::uint64_t johnson_bound(int rows, int cols, int weight, int lambda);

// Candidate codes as vertices (sorted by canonical form, ids are indices)
// with an edge wherever the pairwise cross-correlation constraint is within
// the threshold. Every vertex already passed the auto-correlation filter.
class CompatibilityGraph {
public:
    CompatibilityGraph() = default;

    int size() const { return static_cast<int>(vertices_.size()); }
    const Candidate& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
    const std::vector<Candidate>& vertices() const { return vertices_; }
    CodeParams params() const { return params_; }
    int lambda_a_max() const { return lambda_a_max_; }
    int lambda_c_max() const { return lambda_c_max_; }

    bool adjacent(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }
    // Bitset row of vertex u, size() bits in stride() 64-bit words.
    std::span<const std::uint64_t> neighbors(int u) const {
        return {adj_.data() + static_cast<std::size_t>(u) * stride_, stride_};
    }
    std::size_t stride() const { return stride_; }
    std::size_t edge_count() const { return edges_; }

private:
    friend CompatibilityGraph build_graph(std::vector<Candidate> codes, int lambda_a_max,
                                          int lambda_c_max);

    CodeParams params_;
    int lambda_a_max_ = 0;
    int lambda_c_max_ = 0;
    std::vector<Candidate> vertices_;
    std::vector<std::uint64_t> adj_;
    std::size_t stride_ = 0;
    std::size_t edges_ = 0;
};

// Sorts the candidates by canonical form and connects every pair whose cross
// constraint is <= lambda_c_max. Duplicate canonical forms are rejected.
// Pairwise constraints are computed on worker threads (see worker_count()).
CompatibilityGraph build_graph(std::vector<Candidate> codes, int lambda_a_max,
                               int lambda_c_max);

// Limits for clique enumeration; 0 means unlimited.
struct CliqueBudget {
    std::size_t max_cliques = 0;
    std::int64_t time_limit_ms = 0;
};

struct CliqueEnumeration {
    std::vector<std::vector<int>> cliques;  // each sorted; list sorted lexicographically
    bool complete = true;
};

// Exact recursive enumeration of all maximal cliques (pivoting on the vertex
// covering most of the candidate set). Stops early when the budget runs out,
// returning the cliques found so far with complete = false.
CliqueEnumeration enumerate_maximal_cliques(const CompatibilityGraph& graph,
                                            const CliqueBudget& budget = {});

// A verified clique of codes with its realized constraints and the bound it
// is measured against.
struct CodeSet {
    std::vector<int> ids;
    int lambda_a = 0;
    int lambda_c = 0;
    std::uint64_t bound = 0;

    int size() const { return static_cast<int>(ids.size()); }
};

struct SetSearchResult {
    std::vector<CodeSet> sets;
    std::uint64_t bound = 0;
    // False when the clique enumeration was truncated: the sets are then only
    // a lower bound on the maximum.
    bool complete = true;
};

// All cliques of maximum cardinality, re-checked through set_constraints and
// annotated with the Johnson bound for the graph's thresholds (the effective
// collision parameter is capped at weight - 1).
SetSearchResult maximum_sets(const CompatibilityGraph& graph, const CliqueEnumeration& cliques);

struct VerifyEntry {
    bool is_pair = false;
    int first = 0;
    int second = -1;
    int constraint = 0;
    int limit = 0;
    bool pass = true;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    bool all_pass = true;
};

// Recomputes every auto and pairwise cross constraint directly from the
// grids (shift-and-count, not the set-intersection path) and reports
// pass/fail per code and per pair.
VerifyReport verify_set(std::span<const MatrixCode> codes, int lambda_a_max, int lambda_c_max);

// Worker threads used for pairwise computations: the OOC_THREADS environment
// variable when set to a positive integer, otherwise the hardware count.
int worker_count();

}  // namespace ooc

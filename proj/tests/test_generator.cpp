#include <map>
#include <vector>

#include "doctest.h"
#include "ooc/generator.hpp"
#include "support.hpp"

using namespace ooc;

TEST_CASE("enumeration of length 12 weight 3 gap tuples") {
    const std::vector<OneDimCode> codes = enumerate_1d(12, 3);
    REQUIRE(codes.size() == 19);

    const std::vector<std::vector<int>> expected_head{
        {1, 1, 10}, {1, 2, 9}, {1, 3, 8}, {1, 4, 7}, {1, 5, 6}, {2, 1, 9},
    };
    for (std::size_t i = 0; i < expected_head.size(); ++i)
        CHECK(codes[i].gaps() == expected_head[i]);

    CHECK(codes[17].gaps() == std::vector<int>{4, 4, 4});
    CHECK(codes[18].gaps() == std::vector<int>{5, 1, 6});

    for (std::size_t i = 0; i < codes.size(); ++i) {
        CHECK(codes[i].is_canonical());
        CHECK(codes[i].length() == 12);
        CHECK(codes[i].weight() == 3);
        if (i > 0) CHECK(codes[i - 1].gaps() < codes[i].gaps());
    }
}

TEST_CASE("enumeration count matches two independent necklace oracles") {
    for (int n = 1; n <= 14; ++n) {
        for (int w = 1; w <= n; ++w) {
            const std::vector<OneDimCode> codes = enumerate_1d(n, w);
            CHECK(codes.size() == testsupport::necklace_count(n, w));
            CHECK(codes.size() == testsupport::bitmask_necklace_count(n, w));
        }
    }
}

TEST_CASE("enumeration streams in the same order as the vector overload") {
    std::vector<std::vector<int>> streamed;
    enumerate_1d(10, 4, [&](const OneDimCode& code) { streamed.push_back(code.gaps()); });
    const std::vector<OneDimCode> collected = enumerate_1d(10, 4);
    REQUIRE(streamed.size() == collected.size());
    for (std::size_t i = 0; i < streamed.size(); ++i)
        CHECK(streamed[i] == collected[i].gaps());
}

TEST_CASE("enumeration rejects impossible parameters") {
    CHECK_THROWS_AS(enumerate_1d(12, 13), parameter_error);
    CHECK_THROWS_AS(enumerate_1d(12, 0), parameter_error);
    CHECK_THROWS_AS(enumerate_1d(0, 1), parameter_error);
    CHECK(enumerate_1d(1, 1).size() == 1);
    CHECK(enumerate_1d(5, 5).size() == 1);  // all-ones word
}

TEST_CASE("lift and expand produces the deduplicated candidate pool") {
    const std::vector<OneDimCode> words = enumerate_1d(12, 3);
    const std::vector<MatrixCode> pool = lift_and_expand(words, 4, 3);
    CHECK(pool.size() == 48);

    std::map<CanonicalForm, int> seen;
    for (const MatrixCode& code : pool) {
        CHECK(code.rows() == 4);
        CHECK(code.cols() == 3);
        CHECK(code.weight() == 3);
        ++seen[code.canonical()];
    }
    CHECK(seen.size() == pool.size());

    // the first word lifts to rows 1..3 of column 0; its shifts follow it
    CHECK(pool[0].cells() == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(pool[1].cells() == std::vector<Cell>{{1, 0}, {2, 0}, {3, 0}});

    CHECK_THROWS_AS(lift_and_expand(words, 5, 3), parameter_error);
}

TEST_CASE("row-shift expansion keeps every shift of every word") {
    const std::vector<OneDimCode> words = enumerate_1d(12, 3);
    const std::vector<MatrixCode> pool = lift_and_expand(words, 4, 3);
    for (const OneDimCode& word : words) {
        const MatrixCode lifted = lift_to_matrix(word, 4);
        for (int k = 0; k < 4; ++k) {
            const MatrixCode shifted = lifted.row_shift(k);
            const bool present = std::any_of(pool.begin(), pool.end(),
                                             [&](const MatrixCode& p) { return p == shifted; });
            CHECK(present);
        }
    }
}

TEST_CASE("auto-correlation filter keeps codes within the threshold") {
    const std::vector<MatrixCode> pool = lift_and_expand(enumerate_1d(12, 3), 4, 3);
    const std::vector<Candidate> loose = filter_by_auto(pool, 2);
    CHECK(loose.size() == 44);
    const std::vector<Candidate> tight = filter_by_auto(pool, 1);
    CHECK(tight.size() == 44);
    const std::vector<Candidate> zero = filter_by_auto(pool, 0);
    CHECK(zero.size() < 44);

    for (const Candidate& c : loose) {
        CHECK(c.lambda_a <= 2);
        CHECK(c.lambda_a == auto_profile(c.code).constraint);
    }
    CHECK(filter_by_auto(pool, 3).size() == pool.size());  // w = 3 caps the constraint

    CHECK_THROWS_AS(filter_by_auto(pool, -1), parameter_error);
}

TEST_CASE("weight-one enumeration yields the single trivial word") {
    const std::vector<OneDimCode> words = enumerate_1d(9, 1);
    REQUIRE(words.size() == 1);
    CHECK(words[0].gaps() == std::vector<int>{9});
    CHECK(words[0].positions() == std::vector<int>{0});
}

TEST_CASE("rotated gap tuples collapse to one canonical word") {
    const std::vector<OneDimCode> words = enumerate_1d(12, 3);
    int hits = 0;
    for (const OneDimCode& word : words) {
        if (word.gaps() == std::vector<int>{2, 5, 5} ||
            word.gaps() == std::vector<int>{5, 2, 5} ||
            word.gaps() == std::vector<int>{5, 5, 2})
            ++hits;
    }
    CHECK(hits == 1);
}

TEST_CASE("the auto filter is monotone and idempotent") {
    const std::vector<MatrixCode> pool = lift_and_expand(enumerate_1d(12, 3), 4, 3);
    const std::vector<Candidate> loose = filter_by_auto(pool, 2);
    const std::vector<Candidate> tight = filter_by_auto(pool, 1);

    // every tight survivor appears among the loose survivors
    for (const Candidate& t : tight) {
        bool present = false;
        for (const Candidate& l : loose)
            if (l.code == t.code) present = true;
        CHECK(present);
    }

    std::vector<MatrixCode> survivors;
    for (const Candidate& c : loose) survivors.push_back(c.code);
    const std::vector<Candidate> again = filter_by_auto(survivors, 2);
    REQUIRE(again.size() == loose.size());
    for (std::size_t i = 0; i < again.size(); ++i)
        CHECK(again[i].code == loose[i].code);
}

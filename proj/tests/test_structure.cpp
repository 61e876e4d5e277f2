#include "rcds/structure.hpp"

#include "rcds/search.hpp"

#include <doctest.h>

#include "fixtures.hpp"

using namespace rcds;

namespace {

// Exhaustive reference: a zero block exists iff some nonempty proper row
// subset R has at least n - |R| columns that vanish on R.
bool brute_fully_indecomposable(const Pattern& A) {
    const int n = A.n();
    if (n == 1) return A.at(0, 0);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        const int rows = __builtin_popcount(mask);
        int zero_cols = 0;
        for (int j = 0; j < n; ++j) {
            bool hit = false;
            for (int i = 0; i < n && !hit; ++i)
                if ((mask >> i) & 1u) hit = A.at(i, j);
            if (!hit) ++zero_cols;
        }
        if (zero_cols >= n - rows) return false;
    }
    return true;
}

int brute_term_rank(const Pattern& A, int row, unsigned used_cols) {
    if (row == A.rows()) return 0;
    int best = brute_term_rank(A, row + 1, used_cols);
    for (int j = 0; j < A.cols(); ++j)
        if (A.at(row, j) && !((used_cols >> j) & 1u))
            best = std::max(best, 1 + brute_term_rank(A, row + 1, used_cols | (1u << j)));
    return best;
}

Pattern tridiagonal_pattern(int n) {
    Pattern A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) <= 1) A.set(i, j, true);
    return A;
}

} // namespace

TEST_CASE("matching size equals the term rank") {
    CHECK(max_matching(Pattern::identity(3)).size == 3);
    CHECK(max_matching(Pattern(3, 3)).size == 0);
    CHECK(max_matching(Pattern::all_ones(4)).size == 4);

    // Tridiagonal pattern with rows/cols {i, i+1} deleted keeps full term
    // rank on the surviving main diagonal.
    for (int n : {5, 6, 8}) {
        Pattern T = tridiagonal_pattern(n);
        for (int i = 0; i + 1 < n; ++i) {
            Pattern sub(n - 2, n - 2);
            int ai = 0;
            for (int a = 0; a < n; ++a) {
                if (a == i || a == i + 1) continue;
                int bj = 0;
                for (int b = 0; b < n; ++b) {
                    if (b == i || b == i + 1) continue;
                    sub.set(ai, bj, T.at(a, b));
                    ++bj;
                }
                ++ai;
            }
            CHECK(max_matching(sub).size == n - 2);
        }
    }
}

TEST_CASE("support diagonals") {
    auto d = find_support_diagonal(fixtures::two_regular4());
    REQUIRE(d.has_value());
    for (int i = 0; i < 4; ++i) CHECK(fixtures::two_regular4().at(i, (*d)(i)));

    auto id = find_support_diagonal(Pattern::identity(5));
    REQUIRE(id.has_value());
    CHECK(*id == Permutation::identity(5));

    Pattern zero_row = fixtures::pat("11\n00");
    CHECK_FALSE(find_support_diagonal(zero_row).has_value());
}

TEST_CASE("full indecomposability, known instances") {
    CHECK(is_fully_indecomposable(fixtures::arrowhead4()));
    CHECK_FALSE(is_fully_indecomposable(Pattern::identity(2)));
    CHECK(is_fully_indecomposable(tridiagonal_pattern(5)));
    CHECK(brute_fully_indecomposable(tridiagonal_pattern(5)));
    CHECK(is_fully_indecomposable(fixtures::loopy_tree6()));
    CHECK(is_fully_indecomposable(Pattern::all_ones(1)));
    CHECK_FALSE(is_fully_indecomposable(Pattern(1, 1)));
    // a permutation pattern of order >= 2 is partly decomposable
    CHECK_FALSE(is_fully_indecomposable(fixtures::pat("01\n10")));
}

TEST_CASE("full indecomposability agrees with the exhaustive subset check") {
    SplitMix64 rng{2718};
    int positive = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        Pattern A = random_pattern(n, Rational(3, 5), rng);
        const bool fast = is_fully_indecomposable(A);
        CHECK(fast == brute_fully_indecomposable(A));
        positive += fast;
    }
    CHECK(positive > 0);  // the sample must exercise both outcomes
}

TEST_CASE("term rank agrees with brute-force partial diagonals") {
    SplitMix64 rng{31415};
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        Pattern A = random_pattern(n, Rational(2, 5), rng);
        CHECK(max_matching(A).size == brute_term_rank(A, 0, 0));
    }
}

TEST_CASE("fully indecomposable implies a support diagonal exists") {
    SplitMix64 rng{777};
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        Pattern A = random_pattern(n, Rational(1, 2), rng);
        if (is_fully_indecomposable(A)) CHECK(find_support_diagonal(A).has_value());
    }
}

TEST_CASE("non-square inputs are rejected where squareness is required") {
    Pattern rect(2, 3);
    CHECK_THROWS_AS(find_support_diagonal(rect), error);
    CHECK_THROWS_AS(is_fully_indecomposable(rect), error);
    CHECK(max_matching(rect).size == 0);  // matching itself is fine on rectangles
}

#include "rcds/oracle.hpp"

#include "rcds/constructors.hpp"
#include "rcds/numeric.hpp"
#include "rcds/structure.hpp"

#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace rcds;

TEST_CASE("diagonal enumeration") {
    auto diags = enumerate_diagonals(fixtures::arrowhead4());
    CHECK(diags.size() == 4);

    auto all = enumerate_diagonals(Pattern::all_ones(3));
    CHECK(all.size() == 6);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Permutation& a, const Permutation& b) {
        return a.image < b.image;
    }));

    CHECK(enumerate_diagonals(fixtures::pat("11\n00")).empty());
    CHECK_THROWS_AS(enumerate_diagonals(Pattern::all_ones(8), 100), error);
}

TEST_CASE("brute statistics") {
    DiagonalStats st = brute_diagonal_stats(fixtures::loopy_tree8_hat());
    CHECK(st.min == 29);
    CHECK(st.max == 30);
    CHECK_FALSE(st.all_equal);
    CHECK(st.count == 8);

    // the corner cell of the realization is zero, so only three of the
    // four diagonals of the full arrowhead survive on its support
    DiagonalStats eq = brute_diagonal_stats(fixtures::hollow_arrowhead_rcds4());
    CHECK(eq.min == 2);
    CHECK(eq.max == 2);
    CHECK(eq.all_equal);
    CHECK(eq.count == 3);

    CHECK(brute_diagonal_stats(tridiagonal_rcds(5)).all_equal);

    CHECK_THROWS_AS(brute_diagonal_stats(fixtures::mat("1 1\n0 0")), error);
}

TEST_CASE("symmetric-diagonal detection") {
    CHECK(check_symmetric_diagonals(fixtures::loopy_tree6()));
    CHECK_FALSE(check_symmetric_diagonals(Pattern::all_ones(3)));  // 3-cycles break it
    CHECK(check_symmetric_diagonals(Pattern::identity(5)));
    CHECK(check_symmetric_diagonals(fixtures::loopy_tree8_hat().support()));
    CHECK_THROWS_AS(check_symmetric_diagonals(fixtures::rcds_not_cps5()), error);
}

TEST_CASE("positive 2x2 submatrices with full complementary term rank have equal diagonals") {
    // necessary condition for a constant-diagonal-sum matrix, checked on a
    // family member that has plenty of positive 2x2 submatrices
    RatMatrix X = corner_block(3, 2, 6);
    const int n = X.n();
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = i1 + 1; i2 < n; ++i2)
            for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = j1 + 1; j2 < n; ++j2) {
                    if (X.at(i1, j1) == 0 || X.at(i1, j2) == 0 || X.at(i2, j1) == 0 ||
                        X.at(i2, j2) == 0)
                        continue;
                    Pattern comp(n - 2, n - 2);
                    int ai = 0;
                    for (int a = 0; a < n; ++a) {
                        if (a == i1 || a == i2) continue;
                        int bj = 0;
                        for (int b = 0; b < n; ++b) {
                            if (b == j1 || b == j2) continue;
                            comp.set(ai, bj, X.at(a, b) != 0);
                            ++bj;
                        }
                        ++ai;
                    }
                    if (max_matching(comp).size != n - 2) continue;
                    CHECK(X.at(i1, j1) + X.at(i2, j2) == X.at(i1, j2) + X.at(i2, j1));
                }
}

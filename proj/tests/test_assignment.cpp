#include "rcds/assignment.hpp"

#include "rcds/numeric.hpp"
#include "rcds/oracle.hpp"
#include "rcds/search.hpp"

#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"

using namespace rcds;

namespace {

Rational total(const std::vector<Rational>& xs) {
    return std::accumulate(xs.begin(), xs.end(), Rational(0));
}

void check_certificates(const RatMatrix& X, const Pattern& allowed, const ExtremeDiagonals& ext) {
    const int n = X.n();
    // value = diagonal sum of the certified permutation
    Rational vmin(0), vmax(0);
    for (int i = 0; i < n; ++i) {
        CHECK(allowed.at(i, ext.min_cert.perm(i)));
        CHECK(allowed.at(i, ext.max_cert.perm(i)));
        vmin += X.at(i, ext.min_cert.perm(i));
        vmax += X.at(i, ext.max_cert.perm(i));
    }
    CHECK(vmin == ext.min_cert.value);
    CHECK(vmax == ext.max_cert.value);
    // feasibility with equality on the optimal diagonal (complementary slackness)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (allowed.at(i, j)) {
                CHECK(ext.min_cert.potentials_u[static_cast<std::size_t>(i)] +
                          ext.min_cert.potentials_v[static_cast<std::size_t>(j)] <=
                      X.at(i, j));
                CHECK(ext.max_cert.potentials_u[static_cast<std::size_t>(i)] +
                          ext.max_cert.potentials_v[static_cast<std::size_t>(j)] >=
                      X.at(i, j));
            }
    CHECK(total(ext.min_cert.potentials_u) + total(ext.min_cert.potentials_v) == ext.min_cert.value);
    CHECK(total(ext.max_cert.potentials_u) + total(ext.max_cert.potentials_v) == ext.max_cert.value);
}

RatMatrix random_convex_combination(int n, int terms, SplitMix64& rng) {
    RatMatrix X(n, n);
    long wsum = 0;
    std::vector<std::pair<std::vector<int>, long>> parts;
    for (int k = 0; k < terms; ++k) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(img[static_cast<std::size_t>(i)],
                      img[static_cast<std::size_t>(rng.next() % (static_cast<std::uint64_t>(i) + 1))]);
        const long w = 1 + static_cast<long>(rng.next() % 100);
        wsum += w;
        parts.emplace_back(std::move(img), w);
    }
    for (const auto& [img, w] : parts)
        for (int i = 0; i < n; ++i)
            X.at(i, img[static_cast<std::size_t>(i)]) += frac(w, wsum);
    return X;
}

} // namespace

TEST_CASE("extremes of the 8x8 loopy-tree minor matrix") {
    RatMatrix hat = fixtures::loopy_tree8_hat();
    ExtremeDiagonals ext = extreme_diagonal_sums(hat);
    CHECK(ext.min_cert.value == 29);
    CHECK(ext.max_cert.value == 30);
    check_certificates(hat, hat.support(), ext);
}

TEST_CASE("uniform matrix has all diagonal sums equal to 1") {
    RatMatrix J = RatMatrix(5, 5, Rational(1, 5));
    ExtremeDiagonals ext = extreme_diagonal_sums(J);
    CHECK(ext.min_cert.value == 1);
    CHECK(ext.max_cert.value == 1);
}

TEST_CASE("extremes of the 5x5 minor matrix restricted to its pattern") {
    // The minor values live on the pattern's support; two of its diagonal
    // sums are 21 and 23, and those are exactly the extremes.
    RatMatrix M = fixtures::rcds_not_cps5_minors();
    Pattern A = fixtures::rcds_not_cps5();
    ExtremeDiagonals ext = extreme_diagonal_sums(M, A);
    CHECK(ext.min_cert.value == 21);
    CHECK(ext.max_cert.value == 23);
    check_certificates(M, A, ext);

    DiagonalStats st = brute_diagonal_stats(M);  // support(M) loses the zero-minor cells
    CHECK(st.min >= 21);
    CHECK(st.max <= 23);
}

TEST_CASE("no support diagonal is an error") {
    RatMatrix X = fixtures::mat("1 1\n0 0");
    CHECK_THROWS_AS(extreme_diagonal_sums(X), error);
}

TEST_CASE("RCDS matrix decision") {
    CHECK(is_rcds_matrix(fixtures::hollow_arrowhead_rcds4()));
    CHECK(extreme_diagonal_sums(fixtures::hollow_arrowhead_rcds4()).min_cert.value == 2);

    CHECK(is_rcds_matrix(fixtures::loopy_tree6_rcds()));
    CHECK(extreme_diagonal_sums(fixtures::loopy_tree6_rcds()).min_cert.value == Rational(14, 5));

    // normalizing the 8x8 minor matrix by its line sum 8 gives a doubly
    // stochastic matrix whose diagonal sums still differ
    RatMatrix normalized = fixtures::loopy_tree8_hat().scaled(Rational(1, 8));
    REQUIRE(is_doubly_stochastic(normalized));
    CHECK_FALSE(is_rcds_matrix(normalized));

    CHECK_FALSE(is_rcds_matrix(fixtures::mat("1/2 1/2\n1/2 1/4")));  // not DS
    CHECK_FALSE(is_rcds_matrix(fixtures::mat("1 0 1")));             // not square
}

TEST_CASE("diagonal width of the 2x2 exchange family") {
    // [[1-a, a], [a, 1-a]]: width 4a-2 for a >= 1/2, zero at a = 1.
    RatMatrix X = fixtures::mat("1/4 3/4\n3/4 1/4");
    CHECK(diagonal_width(X) == 1);

    RatMatrix P = fixtures::mat("0 1\n1 0");  // a = 1: a single diagonal remains
    CHECK(diagonal_width(P) == 0);

    RatMatrix T = fixtures::mat("3/5 2/5 0\n2/5 1/5 2/5\n0 2/5 3/5");
    CHECK(diagonal_width(T) == 0);
    CHECK(is_rcds_matrix(T));

    CHECK_THROWS_AS(diagonal_width(fixtures::mat("1 1\n1 1")), error);
}

TEST_CASE("extremes match the oracle on random doubly stochastic matrices") {
    SplitMix64 rng{424242};
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 7);  // up to 8
        const int terms = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        RatMatrix X = random_convex_combination(n, terms, rng);
        REQUIRE(is_doubly_stochastic(X));

        ExtremeDiagonals ext = extreme_diagonal_sums(X);
        DiagonalStats st = brute_diagonal_stats(X);
        CHECK(ext.min_cert.value == st.min);
        CHECK(ext.max_cert.value == st.max);
        CHECK(is_rcds_matrix(X) == st.all_equal);
        CHECK(diagonal_width(X) == st.max - st.min);
        check_certificates(X, X.support(), ext);
    }
}

TEST_CASE("weak duality: any feasible potentials bound every diagonal sum") {
    RatMatrix X = fixtures::loopy_tree6_rcds();
    ExtremeDiagonals ext = extreme_diagonal_sums(X);
    // degrade the optimal potentials; they stay feasible
    auto u = ext.min_cert.potentials_u;
    u[0] -= Rational(1, 7);
    Rational bound = total(u) + total(ext.min_cert.potentials_v);
    for (const Permutation& p : enumerate_diagonals(X.support()))
        CHECK(bound <= diagonal_sum(X, p));
}

TEST_CASE("width upper bound from feasible potential pairs") {
    RatMatrix X = fixtures::mat("1/4 3/4\n3/4 1/4");
    ExtremeDiagonals ext = extreme_diagonal_sums(X);

    SUBCASE("optimal pairs give the width exactly") {
        Rational bound = width_upper_bound(X, ext.min_cert.potentials_u, ext.min_cert.potentials_v,
                                           ext.max_cert.potentials_u, ext.max_cert.potentials_v);
        CHECK(bound == diagonal_width(X));
    }

    SUBCASE("crude pairs still bound the width") {
        RatMatrix J = RatMatrix(4, 4, Rational(1, 4));
        std::vector<Rational> zero(4, Rational(0)), rowmax(4, Rational(1, 4));
        Rational bound = width_upper_bound(J, zero, zero, rowmax, zero);
        CHECK(bound == 1);
        CHECK(bound >= diagonal_width(J));
    }

    SUBCASE("infeasible pairs are rejected") {
        std::vector<Rational> big(2, Rational(10)), zero(2, Rational(0));
        CHECK_THROWS_AS(width_upper_bound(X, big, zero, big, big), error);
        CHECK_THROWS_AS(width_upper_bound(X, zero, zero, zero, zero), error);
    }
}

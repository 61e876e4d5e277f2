#include "rcds/potentials.hpp"

#include "rcds/linsolve.hpp"
#include "rcds/numeric.hpp"
#include "rcds/structure.hpp"

#include <numeric>

namespace rcds {

RatMatrix build_signless_laplacian(const Pattern& A) {
    const int n = A.n();
    auto r = A.row_sums();
    auto s = A.col_sums();
    RatMatrix H(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        H.at(i, i) = r[static_cast<std::size_t>(i)];
        H.at(n + i, n + i) = s[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j)) {
                H.at(i, n + j) = 1;
                H.at(n + j, i) = 1;
            }
    return H;
}

Potentials solve_potentials(const Pattern& A) {
    const int n = A.n();
    if (!is_fully_indecomposable(A)) throw error("pattern is not fully indecomposable");

    const auto r = A.row_sums();
    const auto s = A.col_sums();

    // Reduced system  (A^T D_R^-1 A - D_S) v = A^T D_R^-1 e - e.
    // Its coefficient matrix is singular with null vector e, so the gauge
    // v[n-1] = 0 plus dropping the last (dependent) equation pins a unique
    // solution of the (n-1) x (n-1) principal block.
    RatMatrix M(n, n);
    std::vector<Rational> b(static_cast<std::size_t>(n), Rational(0));
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            Rational acc(0);
            for (int k = 0; k < n; ++k)
                if (A.at(k, p) && A.at(k, q)) acc += Rational(1, r[static_cast<std::size_t>(k)]);
            if (p == q) acc -= s[static_cast<std::size_t>(p)];
            M.at(p, q) = acc;
        }
        Rational rhs(0);
        for (int k = 0; k < n; ++k)
            if (A.at(k, p)) rhs += Rational(1, r[static_cast<std::size_t>(k)]);
        b[static_cast<std::size_t>(p)] = rhs - 1;
    }

    // The right-hand side is orthogonal to e whenever the line sums were
    // counted consistently; anything else means corrupted input.
    if (std::accumulate(b.begin(), b.end(), Rational(0)) != 0)
        throw error("internal: reduced system rhs not orthogonal to ones");

    Potentials out;
    out.alpha = 1;
    out.v.assign(static_cast<std::size_t>(n), Rational(0));
    if (n > 1) {
        RatMatrix Mr(n - 1, n - 1);
        std::vector<Rational> br(static_cast<std::size_t>(n) - 1);
        for (int i = 0; i < n - 1; ++i) {
            for (int j = 0; j < n - 1; ++j) Mr.at(i, j) = M.at(i, j);
            br[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)];
        }
        auto vr = solve_linear(Mr, br);
        for (int i = 0; i < n - 1; ++i) out.v[static_cast<std::size_t>(i)] = vr[static_cast<std::size_t>(i)];
    }

    out.u.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        Rational acc(1);
        for (int j = 0; j < n; ++j)
            if (A.at(i, j)) acc -= out.v[static_cast<std::size_t>(j)];
        out.u[static_cast<std::size_t>(i)] = acc / r[static_cast<std::size_t>(i)];
    }

    // Exact residual check of H(u,v) = e, both equation families.
    for (int i = 0; i < n; ++i) {
        Rational acc = out.u[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            if (A.at(i, j)) acc += out.v[static_cast<std::size_t>(j)];
        if (acc != 1) throw error("internal: row equations not satisfied");
    }
    for (int j = 0; j < n; ++j) {
        Rational acc = out.v[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i)
            if (A.at(i, j)) acc += out.u[static_cast<std::size_t>(i)];
        if (acc != 1) throw error("internal: column equations not satisfied");
    }
    return out;
}

RcdsDecision decide_rcds_pattern(const Pattern& A) {
    const int n = A.n();
    RcdsDecision d;
    d.potentials = solve_potentials(A);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j) &&
                d.potentials.u[static_cast<std::size_t>(i)] + d.potentials.v[static_cast<std::size_t>(j)] <= 0)
                d.violating_positions.emplace_back(i, j);

    d.is_rcds_pattern = d.violating_positions.empty();
    if (!d.is_rcds_pattern) return d;

    RatMatrix X(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j))
                X.at(i, j) = d.potentials.u[static_cast<std::size_t>(i)] +
                             d.potentials.v[static_cast<std::size_t>(j)];
    if (!is_doubly_stochastic(X) || !(X.support() == A))
        throw error("internal: realization is not doubly stochastic with pattern A");

    Rational sum = std::accumulate(d.potentials.u.begin(), d.potentials.u.end(), Rational(0)) +
                   std::accumulate(d.potentials.v.begin(), d.potentials.v.end(), Rational(0));
    d.realization = std::move(X);
    d.constant_sum = std::move(sum);
    return d;
}

std::pair<std::vector<Rational>, RatMatrix> symmetrize_rcds(const Pattern& A) {
    if (!A.is_symmetric()) throw error("pattern is not symmetric");
    const int n = A.n();
    RcdsDecision d = decide_rcds_pattern(A);
    if (!d.is_rcds_pattern) throw error("pattern is not an RCDS pattern");

    std::vector<Rational> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] =
            (d.potentials.u[static_cast<std::size_t>(i)] + d.potentials.v[static_cast<std::size_t>(i)]) / 2;

    RatMatrix X(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j))
                X.at(i, j) = w[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(j)];

    // The realization with a given pattern is unique, so the symmetric form
    // must coincide with the solver's realization.
    if (!(X == *d.realization)) throw error("internal: symmetric realization mismatch");
    return {std::move(w), std::move(X)};
}

} // namespace rcds

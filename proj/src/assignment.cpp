#include "rcds/assignment.hpp"

#include "rcds/numeric.hpp"

#include <numeric>
#include <optional>

namespace rcds {

namespace {

// Shortest-augmenting-path Hungarian method over exact rationals.
// Cells outside `allowed` are excluded from the cost structure entirely;
// no big-M surrogate is sound with unbounded rationals.
//
// Arrays are 1-based with column 0 acting as the virtual start column.
DiagonalCertificate solve_min(const RatMatrix& X, const Pattern& allowed, bool negate) {
    const int n = X.n();
    if (allowed.rows() != n || allowed.cols() != n)
        throw error("allowed pattern does not match matrix order");

    auto cost = [&](int i, int j) {  // 1-based
        Rational c = X.at(i - 1, j - 1);
        return negate ? Rational(-c) : c;
    };
    auto ok = [&](int i, int j) { return allowed.at(i - 1, j - 1); };

    std::vector<Rational> u(static_cast<std::size_t>(n) + 1, Rational(0));
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::optional<Rational>> minv(static_cast<std::size_t>(n) + 1);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = -1;
            std::optional<Rational> delta;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                auto& mj = minv[static_cast<std::size_t>(j)];
                if (ok(i0, j)) {
                    Rational cur = cost(i0, j) - u[static_cast<std::size_t>(i0)] -
                                   v[static_cast<std::size_t>(j)];
                    if (!mj || cur < *mj) {
                        mj = std::move(cur);
                        way[static_cast<std::size_t>(j)] = j0;
                    }
                }
                if (mj && (!delta || *mj < *delta)) {
                    delta = *mj;
                    j1 = j;
                }
            }
            if (!delta) throw error("support admits no diagonal");
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += *delta;
                    v[static_cast<std::size_t>(j)] -= *delta;
                } else if (minv[static_cast<std::size_t>(j)]) {
                    *minv[static_cast<std::size_t>(j)] -= *delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j) image[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;

    DiagonalCertificate cert;
    cert.perm = Permutation(image);
    cert.potentials_u.assign(u.begin() + 1, u.end());
    cert.potentials_v.assign(v.begin() + 1, v.end());

    Rational value(0), dual(0);
    for (int i = 0; i < n; ++i) value += negate ? -X.at(i, cert.perm(i)) : X.at(i, cert.perm(i));
    for (int i = 0; i < n; ++i)
        dual += cert.potentials_u[static_cast<std::size_t>(i)] +
                cert.potentials_v[static_cast<std::size_t>(i)];

    // Complementary slackness must hold exactly; anything else is a solver bug.
    if (value != dual) throw error("internal: assignment duality gap");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (ok(i, j) && u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(j)] > cost(i, j))
                throw error("internal: infeasible assignment potentials");

    if (negate) {
        cert.value = -value;
        for (auto& x : cert.potentials_u) x = -x;
        for (auto& x : cert.potentials_v) x = -x;
    } else {
        cert.value = value;
    }
    return cert;
}

} // namespace

ExtremeDiagonals extreme_diagonal_sums(const RatMatrix& X, const Pattern& allowed) {
    return ExtremeDiagonals{solve_min(X, allowed, false), solve_min(X, allowed, true)};
}

ExtremeDiagonals extreme_diagonal_sums(const RatMatrix& X) {
    return extreme_diagonal_sums(X, X.support());
}

bool is_rcds_matrix(const RatMatrix& X) {
    if (!X.is_square()) return false;
    if (!is_doubly_stochastic(X)) return false;
    // A doubly stochastic matrix always carries at least one support diagonal.
    ExtremeDiagonals ext = extreme_diagonal_sums(X);
    return ext.min_cert.value == ext.max_cert.value;
}

Rational diagonal_width(const RatMatrix& X) {
    if (!is_doubly_stochastic(X)) throw error("diagonal width requires a doubly stochastic matrix");
    ExtremeDiagonals ext = extreme_diagonal_sums(X);
    Rational width = ext.max_cert.value - ext.min_cert.value;

    auto total = [](const std::vector<Rational>& xs) {
        return std::accumulate(xs.begin(), xs.end(), Rational(0));
    };
    Rational theta_hi = total(ext.max_cert.potentials_u) + total(ext.max_cert.potentials_v);
    Rational theta_lo = total(ext.min_cert.potentials_u) + total(ext.min_cert.potentials_v);
    if (theta_hi - theta_lo != width) throw error("internal: width duality mismatch");
    return width;
}

Rational width_upper_bound(const RatMatrix& X,
                           const std::vector<Rational>& u, const std::vector<Rational>& v,
                           const std::vector<Rational>& u_hi, const std::vector<Rational>& v_hi) {
    const int n = X.n();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n ||
        static_cast<int>(u_hi.size()) != n || static_cast<int>(v_hi.size()) != n)
        throw error("potential vector length does not match matrix order");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (X.at(i, j) == 0) continue;
            if (u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(j)] > X.at(i, j))
                throw error("lower potentials infeasible");
            if (u_hi[static_cast<std::size_t>(i)] + v_hi[static_cast<std::size_t>(j)] < X.at(i, j))
                throw error("upper potentials infeasible");
        }
    Rational bound(0);
    for (int i = 0; i < n; ++i)
        bound += u_hi[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i)] +
                 v_hi[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)];
    return bound;
}

} // namespace rcds

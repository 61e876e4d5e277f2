#include "rcds/numeric.hpp"

namespace rcds {

bool is_doubly_stochastic(const RatMatrix& X) {
    const int n = X.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (X.at(i, j) < 0) return false;
    for (int i = 0; i < n; ++i)
        if (X.row_sum(i) != 1) return false;
    for (int j = 0; j < n; ++j)
        if (X.col_sum(j) != 1) return false;
    return true;
}

Rational diagonal_sum(const RatMatrix& X, const Permutation& p) {
    if (p.size() != X.n()) throw error("permutation length does not match matrix order");
    Rational s(0);
    for (int i = 0; i < p.size(); ++i) s += X.at(i, p(i));
    return s;
}

namespace {

bool lines_within(const RatMatrix& X, const Rational& tol) {
    for (int i = 0; i < X.rows(); ++i) {
        Rational d = X.row_sum(i) - 1;
        if (abs(d) > tol) return false;
    }
    for (int j = 0; j < X.cols(); ++j) {
        Rational d = X.col_sum(j) - 1;
        if (abs(d) > tol) return false;
    }
    return true;
}

} // namespace

RatMatrix sinkhorn_balance(const RatMatrix& X, const Rational& tolerance,
                           unsigned max_iters) {
    const int n = X.n();
    if (tolerance < 0) throw error("negative tolerance");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (X.at(i, j) < 0) throw error("negative entry in balance input");
    for (int i = 0; i < n; ++i)
        if (X.row_sum(i) == 0) throw error("zero row in balance input");
    for (int j = 0; j < n; ++j)
        if (X.col_sum(j) == 0) throw error("zero column in balance input");

    RatMatrix Y = X;
    if (lines_within(Y, tolerance)) return Y;  // fixed point, no sweeps needed

    for (unsigned it = 0; it < max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
            Rational s = Y.row_sum(i);
            for (int j = 0; j < n; ++j)
                if (Y.at(i, j) != 0) Y.at(i, j) /= s;
        }
        for (int j = 0; j < n; ++j) {
            Rational s = Y.col_sum(j);
            for (int i = 0; i < n; ++i)
                if (Y.at(i, j) != 0) Y.at(i, j) /= s;
        }
        if (lines_within(Y, tolerance)) return Y;
    }
    throw error("balance did not converge within the iteration budget");
}

} // namespace rcds

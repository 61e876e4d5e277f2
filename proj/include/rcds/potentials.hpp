#ifndef RCDS_POTENTIALS_HPP
#define RCDS_POTENTIALS_HPP

#include "rcds/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rcds {

/// Row/column potentials solving H(u,v) = e with row and column line sums
/// of Y(u,v) all equal to alpha (= 1 for the solved system). Normalized by
/// the gauge v[n-1] = 0; the general solution adds a constant to u and
/// subtracts it from v.
struct Potentials {
    std::vector<Rational> u;
    std::vector<Rational> v;
    Rational alpha;
};

struct RcdsDecision {
    bool is_rcds_pattern = false;
    Potentials potentials;
    std::optional<RatMatrix> realization;       // present iff is_rcds_pattern
    std::optional<Rational> constant_sum;       // sum(u) + sum(v) when present
    std::vector<std::pair<int, int>> violating_positions;  // support cells with u_i+v_j <= 0
};

/// H = [[D_R, A], [A^T, D_S]], the signless Laplacian of the bipartite
/// graph with biadjacency A.
RatMatrix build_signless_laplacian(const Pattern& A);

/// Exact solution of H(u,v) = e for fully indecomposable A, found through
/// the reduced system (A^T D_R^-1 A - D_S) v = A^T D_R^-1 e - e with the
/// gauge v[n-1] = 0 and one dependent equation dropped. The residual is
/// verified to be exactly zero. Throws when A is not fully indecomposable.
Potentials solve_potentials(const Pattern& A);

/// Decides whether A is the pattern of a doubly stochastic matrix whose
/// support diagonals all share one sum: positive exactly when u_i + v_j > 0
/// on every support cell, in which case the (unique) realization is
/// X = Y(u,v) restricted to A.
RcdsDecision decide_rcds_pattern(const Pattern& A);

/// For symmetric A, a single weight vector w = (u+v)/2 with X[i][j] = w_i + w_j
/// on the support; X is the symmetric realization. Throws when A is not
/// symmetric or not an RCDS pattern.
std::pair<std::vector<Rational>, RatMatrix> symmetrize_rcds(const Pattern& A);

} // namespace rcds

#endif

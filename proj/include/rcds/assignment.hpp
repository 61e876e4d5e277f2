#ifndef RCDS_ASSIGNMENT_HPP
#define RCDS_ASSIGNMENT_HPP

#include "rcds/matrix.hpp"

#include <vector>

namespace rcds {

/// An optimal diagonal together with exact dual potentials.
/// For the minimum certificate: u_i + v_j <= x_ij on every allowed cell,
/// with equality on the diagonal, and sum(u) + sum(v) = value. The maximum
/// certificate satisfies the mirrored inequalities.
struct DiagonalCertificate {
    Permutation perm;
    Rational value;
    std::vector<Rational> potentials_u;
    std::vector<Rational> potentials_v;
};

struct ExtremeDiagonals {
    DiagonalCertificate min_cert;
    DiagonalCertificate max_cert;
};

/// Exact min and max diagonal sum over permutations supported on `allowed`.
/// Throws when `allowed` admits no diagonal.
ExtremeDiagonals extreme_diagonal_sums(const RatMatrix& X, const Pattern& allowed);

/// Same, restricted to the support of X itself.
ExtremeDiagonals extreme_diagonal_sums(const RatMatrix& X);

/// True iff X is doubly stochastic and all support-diagonal sums coincide.
/// Non-square and non-doubly-stochastic inputs simply return false.
bool is_rcds_matrix(const RatMatrix& X);

/// Maximum minus minimum support-diagonal sum of a doubly stochastic matrix.
/// Also recomputed from the dual certificates; the two routes must agree
/// exactly. Throws when X is not doubly stochastic.
Rational diagonal_width(const RatMatrix& X);

/// Given potentials with u_i + v_j <= x_ij <= u'_i + v'_j on the support,
/// returns sum(u'-u) + sum(v'-v), an upper bound on the diagonal width.
/// Throws when either pair is infeasible.
Rational width_upper_bound(const RatMatrix& X,
                           const std::vector<Rational>& u, const std::vector<Rational>& v,
                           const std::vector<Rational>& u_hi, const std::vector<Rational>& v_hi);

} // namespace rcds

#endif

#ifndef RCDS_NUMERIC_HPP
#define RCDS_NUMERIC_HPP

#include "rcds/matrix.hpp"

namespace rcds {

/// Exact check: every entry >= 0 and every line sum equals 1.
/// Throws on non-square input.
bool is_doubly_stochastic(const RatMatrix& X);

/// Sum of X[i][p(i)]; throws on dimension mismatch.
Rational diagonal_sum(const RatMatrix& X, const Permutation& p);

/// Alternate row/column normalization until every line sum is within
/// `tolerance` of 1 (tolerance compared exactly as a rational). Only
/// positive entries are scaled, so the support never changes.
/// Throws on a zero line or when max_iters sweeps do not suffice.
RatMatrix sinkhorn_balance(const RatMatrix& X, const Rational& tolerance,
                           unsigned max_iters);

} // namespace rcds

#endif

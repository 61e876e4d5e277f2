#ifndef RCDS_LINSOLVE_HPP
#define RCDS_LINSOLVE_HPP

#include "rcds/matrix.hpp"

#include <vector>

namespace rcds {

/// Solves M x = b exactly for square nonsingular M. Rows are scaled to
/// integers, eliminated fraction-free (Bareiss), and back-substituted in
/// rationals. Throws on singular M or mismatched dimensions.
std::vector<Rational> solve_linear(const RatMatrix& M, const std::vector<Rational>& b);

/// Exact rank via rational Gaussian elimination.
int matrix_rank(const RatMatrix& M);

} // namespace rcds

#endif

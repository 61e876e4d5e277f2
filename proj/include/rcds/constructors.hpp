#ifndef RCDS_CONSTRUCTORS_HPP
#define RCDS_CONSTRUCTORS_HPP

#include "rcds/matrix.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace rcds {

// Construction families of doubly stochastic matrices with constant
// restricted diagonal sums. Each returns the matrix itself; checking the
// constant-sum property is the assignment/oracle modules' job.

/// (1/n) J_n.
RatMatrix uniform(int n);

/// (1/k) A for a k-regular pattern A; constant diagonal sum n/k.
RatMatrix regular_rcds(const Pattern& A, int k);

/// Tridiagonal matrix X(x) whose superdiagonal solves
/// x[i-1] + 4 x[i] + x[i+1] = 2 (x[0] = x[n-1] = 0 outside the range),
/// solved exactly by forward elimination and back-substitution. The pivots
/// satisfy h1 = 4, h2 = 15/4 and 37/10 < h_i < 15/4 from i = 3 on, and the
/// entries satisfy 1/5 < x_i < 1/2 for n >= 3 (x_1 = 1/2 when n = 2);
/// both facts are asserted during construction.
RatMatrix tridiagonal_rcds(int n);

/// Star-with-loops matrix V_n with x_i = 2/(n+2); feasible only for n <= 4,
/// nullopt from n = 5 on (the (1,1) entry would be negative).
std::optional<RatMatrix> star_rcds(int n);

/// The four-block corner matrix X^(r,s,n), 0 < s < r < n: value 1/r on the
/// r x s block, (r-s)/(r(n-s)) right of it, 1/(n-s) on the lower-right block,
/// and an (n-r) x s zero block.
RatMatrix corner_block(int r, int s, int n);

/// Staircase of constant blocks X_1, ..., X_m: block-row t holds X_{2t-1}
/// and X_{2t}; an odd block count means the final off-diagonal block is void.
struct ZigZagSpec {
    std::vector<std::pair<int, int>> block_dims;  // (rows, cols) per block
    std::vector<Rational> constants;              // c(X_i) per block
    bool last_block_void = false;
};

/// Assembles the zig-zag matrix and validates the staircase dimension
/// conditions and unit line sums. Throws on any violation.
RatMatrix zigzag(const ZigZagSpec& spec);

/// 2x2 block construction: values k4, k3, k2, k1 on the supports of four
/// k_i-regular order-p patterns, scaled by 1/(k1 k4 + k2 k3); requires
/// k1 + k4 = k2 + k3. Default sub-patterns are circulants.
RatMatrix two_by_two_block(int k1, int k2, int k3, int k4, int p);
RatMatrix two_by_two_block(int k1, int k2, int k3, int k4, int p,
                           const std::array<Pattern, 4>& sub_patterns);

/// V = (1/(tp)) [ tI_k tI_k ... tI_k ; A ] with n = kp and A a (0,1)-matrix
/// with constant row sums tp and column sums t(p-1), realized by gale_ryser.
RatMatrix class1_rcds(int k, int t, int p);

/// A (0,1)-matrix with row sums R and column sums S when one exists
/// (S majorized by the conjugate of R), nullopt otherwise.
/// Throws when sum(R) != sum(S).
std::optional<Pattern> gale_ryser(const std::vector<int>& R, const std::vector<int>& S);

/// (1/(n-1)) (J_n - I_n); equals the normalized sum of all permutation
/// matrices avoiding the main diagonal.
RatMatrix derangement_rcds(int n);

/// Sum of k distinct cyclic-shift permutation matrices of order p.
Pattern circulant_pattern(int p, int k);

} // namespace rcds

#endif

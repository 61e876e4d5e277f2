#ifndef RCDS_PERMANENT_HPP
#define RCDS_PERMANENT_HPP

#include "rcds/matrix.hpp"

#include <optional>
#include <vector>

namespace rcds {

/// Number of support diagonals of A, as an exact big integer.
/// Dense patterns up to order 20 go through Ryser inclusion-exclusion;
/// everything else through memoized minor expansion. Orders above 63 are
/// rejected.
Int permanent(const Pattern& A);

/// Permanental minors per A(i|j) on the support cells (the count of support
/// diagonals through each cell), plus the permanent itself. Cells off the
/// support carry no value: per A(i|j) of a 0-cell can legitimately be
/// nonzero, so the integer 0 must not stand in for "absent".
struct PermanentReport {
    int n = 0;
    Int permanent;
    std::vector<std::optional<Int>> minors;  // row-major, engaged on support
    std::optional<Int> gamma;                // constant diagonal sum of the minors, if any

    const std::optional<Int>& minor(int i, int j) const {
        return minors[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)];
    }

    /// The minor matrix divided by the permanent, zero off the support;
    /// doubly stochastic whenever A has total support.
    RatMatrix normalized() const;
};

/// Minor computation parallelized over support cells (one permanent call per
/// cell, per-thread memo caches). Row and column expansion identities are
/// verified against the permanent on every call.
PermanentReport hat_matrix(const Pattern& A);

/// Single-threaded reference with one shared memo cache; same output.
PermanentReport hat_matrix_serial(const Pattern& A);

/// Whether every support diagonal of the minor matrix has the same sum;
/// the common value gamma accompanies a positive answer.
std::pair<bool, std::optional<Int>> is_cps(const Pattern& A);

/// Biadjacency matrix of the Gray graph: the cubic bipartite incidence
/// graph of the 27 points and 27 axis-parallel lines of a 3x3x3 grid,
/// labeled so the first row has ones in columns 1, 2 and 7.
Pattern gray_graph_pattern();

} // namespace rcds

#endif

#ifndef RCDS_ORACLE_HPP
#define RCDS_ORACLE_HPP

#include "rcds/matrix.hpp"

#include <cstdint>
#include <vector>

namespace rcds {

// Brute-force ground truth for small orders. These routines exist so the
// polynomial algorithms can be checked against exhaustive enumeration; they
// are not meant for production-sized inputs.

inline constexpr std::uint64_t kDefaultDiagonalLimit = 1'000'000;

/// All permutations whose support lies inside A, in lexicographic order of
/// the image vector. Throws once more than `limit` diagonals are seen.
std::vector<Permutation> enumerate_diagonals(const Pattern& A,
                                             std::uint64_t limit = kDefaultDiagonalLimit);

struct DiagonalStats {
    Rational min, max;
    bool all_equal = false;
    std::uint64_t count = 0;
};

/// Exact statistics over every support-diagonal sum of X.
/// Throws when the support admits no diagonal or the limit is exceeded.
DiagonalStats brute_diagonal_stats(const RatMatrix& X,
                                   std::uint64_t limit = kDefaultDiagonalLimit);

/// True iff every support permutation of the symmetric pattern A is an
/// involution. Throws when A is not symmetric.
bool check_symmetric_diagonals(const Pattern& A,
                               std::uint64_t limit = kDefaultDiagonalLimit);

} // namespace rcds

#endif

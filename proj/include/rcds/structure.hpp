#ifndef RCDS_STRUCTURE_HPP
#define RCDS_STRUCTURE_HPP

#include "rcds/matrix.hpp"

#include <optional>
#include <vector>

namespace rcds {

struct Matching {
    int size = 0;
    std::vector<int> row_match;  // column matched to each row, -1 if none
};

/// Maximum bipartite matching through the 1-entries; `size` is the term rank.
Matching max_matching(const Pattern& A);

/// A permutation p with A[i][p(i)] = 1 for all i, if one exists.
std::optional<Permutation> find_support_diagonal(const Pattern& A);

/// True iff no row/column permutations expose a p x (n-p) zero block.
/// Found by placing a support diagonal on the main diagonal and testing
/// strong connectivity of the induced digraph. For n = 1 the answer is
/// the single entry.
bool is_fully_indecomposable(const Pattern& A);

} // namespace rcds

#endif

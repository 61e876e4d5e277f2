#include "rcds/oracle.hpp"

#include <functional>

namespace rcds {

namespace {

// Depth-first walk over support diagonals, columns tried in ascending order
// so completed images arrive lexicographically.
template <typename Callback>
void walk_diagonals(const Pattern& A, std::uint64_t limit, Callback&& cb) {
    const int n = A.n();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::uint64_t seen = 0;

    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (++seen > limit) throw error("diagonal enumeration limit exceeded");
            cb(image);
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (!A.at(i, j) || used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = 1;
            image[static_cast<std::size_t>(i)] = j;
            rec(i + 1);
            used[static_cast<std::size_t>(j)] = 0;
        }
    };
    rec(0);
}

} // namespace

std::vector<Permutation> enumerate_diagonals(const Pattern& A, std::uint64_t limit) {
    std::vector<Permutation> out;
    walk_diagonals(A, limit, [&](const std::vector<int>& image) {
        Permutation p;
        p.image = image;
        out.push_back(std::move(p));
    });
    return out;
}

DiagonalStats brute_diagonal_stats(const RatMatrix& X, std::uint64_t limit) {
    const int n = X.n();
    const Pattern A = X.support();
    DiagonalStats stats;
    walk_diagonals(A, limit, [&](const std::vector<int>& image) {
        Rational s(0);
        for (int i = 0; i < n; ++i) s += X.at(i, image[static_cast<std::size_t>(i)]);
        if (stats.count == 0) {
            stats.min = stats.max = s;
        } else {
            if (s < stats.min) stats.min = s;
            if (s > stats.max) stats.max = s;
        }
        ++stats.count;
    });
    if (stats.count == 0) throw error("support admits no diagonal");
    stats.all_equal = stats.min == stats.max;
    return stats;
}

bool check_symmetric_diagonals(const Pattern& A, std::uint64_t limit) {
    if (!A.is_symmetric()) throw error("pattern is not symmetric");
    bool all = true;
    walk_diagonals(A, limit, [&](const std::vector<int>& image) {
        if (!all) return;
        for (int i = 0; i < static_cast<int>(image.size()); ++i)
            if (image[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] != i) {
                all = false;
                return;
            }
    });
    return all;
}

} // namespace rcds

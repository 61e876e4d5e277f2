#include "rcds/permanent.hpp"

#include "rcds/assignment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <unordered_map>

namespace rcds {

namespace {

struct MaskPair {
    std::uint64_t rows, cols;
    bool operator==(const MaskPair&) const = default;
};

struct MaskPairHash {
    std::size_t operator()(const MaskPair& k) const {
        std::uint64_t h = k.rows * 0x9E3779B97F4A7C15ULL ^ k.cols;
        h ^= h >> 33;
        h *= 0xFF51AFD7ED558CCDULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

// Laplace expansion over remaining (rows, cols) submatrices. Rows are
// consumed in a fixed frontier-minimizing order, so equal submatrices
// reached from different minors hit the same cache entry.
class PermanentCache {
public:
    explicit PermanentCache(const Pattern& A) : n_(A.n()) {
        if (n_ > 63) throw error("permanent supported up to order 63");
        row_mask_.resize(static_cast<std::size_t>(n_));
        col_mask_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (A.at(i, j)) {
                    row_mask_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                    col_mask_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
                }

        // Greedy row order keeping the column frontier narrow.
        std::vector<char> taken(static_cast<std::size_t>(n_), 0);
        std::uint64_t seen = 0;
        for (int step = 0; step < n_; ++step) {
            int best = -1, best_new = n_ + 1;
            for (int i = 0; i < n_; ++i) {
                if (taken[static_cast<std::size_t>(i)]) continue;
                int fresh = popcount(row_mask_[static_cast<std::size_t>(i)] & ~seen);
                if (fresh < best_new) {
                    best_new = fresh;
                    best = i;
                }
            }
            taken[static_cast<std::size_t>(best)] = 1;
            seen |= row_mask_[static_cast<std::size_t>(best)];
            order_.push_back(best);
        }

        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    std::uint64_t full_mask() const { return full_; }

    /// Permanent of the submatrix on `rows` x `cols` (bitmasks over 0..n-1).
    Int count(std::uint64_t rows, std::uint64_t cols) {
        if (popcount(rows) != popcount(cols))
            throw error("internal: unbalanced submatrix");
        if (rows == 0) return 1;
        // A column with no remaining support kills every extension.
        for (std::uint64_t c = cols; c;) {
            const int j = countr_zero(c);
            c &= c - 1;
            if ((col_mask_[static_cast<std::size_t>(j)] & rows) == 0) return 0;
        }
        const MaskPair key{rows, cols};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // Expand the first remaining row in the fixed order.
        int expand = -1;
        for (int i : order_)
            if (rows & (std::uint64_t{1} << i)) {
                expand = i;
                break;
            }
        Int total = 0;
        const std::uint64_t rest = rows & ~(std::uint64_t{1} << expand);
        for (std::uint64_t c = row_mask_[static_cast<std::size_t>(expand)] & cols; c;) {
            const int j = countr_zero(c);
            c &= c - 1;
            total += count(rest, cols & ~(std::uint64_t{1} << j));
        }
        memo_.emplace(key, total);
        return total;
    }

private:
    static int popcount(std::uint64_t x) { return __builtin_popcountll(x); }
    static int countr_zero(std::uint64_t x) { return __builtin_ctzll(x); }

    int n_;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> row_mask_, col_mask_;
    std::vector<int> order_;
    std::unordered_map<MaskPair, Int, MaskPairHash> memo_;
};

// Ryser inclusion-exclusion with Gray-code subset updates. Row sums of a
// 0/1 matrix stay below 64, so the products fit __int128 up to order 20.
Int ryser_permanent(const Pattern& A) {
    const int n = A.n();
    std::vector<std::uint64_t> row_mask(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j)) row_mask[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;

    std::vector<std::int64_t> row_sum(static_cast<std::size_t>(n), 0);
    __int128 total = 0;
    std::uint64_t prev = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t g = 1; g < count; ++g) {
        const std::uint64_t gray = g ^ (g >> 1);
        const std::uint64_t changed = gray ^ prev;
        const int j = __builtin_ctzll(changed);
        const std::int64_t delta = (gray & changed) ? 1 : -1;
        for (int i = 0; i < n; ++i)
            if (row_mask[static_cast<std::size_t>(i)] & (std::uint64_t{1} << j))
                row_sum[static_cast<std::size_t>(i)] += delta;
        prev = gray;

        __int128 prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[static_cast<std::size_t>(i)];
        if (__builtin_popcountll(gray) % 2 == n % 2)
            total += prod;
        else
            total -= prod;
    }

    const bool negative = total < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-total)
                                     : static_cast<unsigned __int128>(total);
    Int result = Int(static_cast<std::uint64_t>(mag >> 64));
    result <<= 64;
    result += Int(static_cast<std::uint64_t>(mag));
    return negative ? Int(-result) : result;
}

bool ryser_suited(const Pattern& A) {
    const int n = A.n();
    return n <= 20 && 2 * A.count_ones() > n * n;
}

PermanentReport hat_matrix_impl(const Pattern& A, bool parallel) {
    const int n = A.n();
    PermanentReport rep;
    rep.n = n;
    rep.permanent = permanent(A);
    if (rep.permanent == 0) throw error("support admits no diagonal");
    rep.minors.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), std::nullopt);

    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j)) cells.emplace_back(i, j);

    const bool dense = ryser_suited(A);
    std::atomic<bool> failed{false};

    if (parallel) {
#pragma omp parallel
        {
            // One cache per thread; minors reached from different cells still
            // share submatrix counts within a thread.
            PermanentCache cache(A);
            const std::uint64_t full = cache.full_mask();
#pragma omp for schedule(dynamic)
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (failed) continue;
                const auto [i, j] = cells[c];
                try {
                    Int value;
                    if (dense) {
                        Pattern sub(n - 1, n - 1);
                        for (int a = 0, ai = 0; a < n; ++a) {
                            if (a == i) continue;
                            for (int b = 0, bj = 0; b < n; ++b) {
                                if (b == j) continue;
                                sub.set(ai, bj, A.at(a, b));
                                ++bj;
                            }
                            ++ai;
                        }
                        value = ryser_permanent(sub);
                    } else {
                        value = cache.count(full & ~(std::uint64_t{1} << i),
                                            full & ~(std::uint64_t{1} << j));
                    }
                    rep.minors[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                               static_cast<std::size_t>(j)] = std::move(value);
                } catch (...) {
                    failed = true;
                }
            }
        }
        if (failed) throw error("minor computation failed");
    } else {
        PermanentCache cache(A);
        const std::uint64_t full = cache.full_mask();
        for (const auto& [i, j] : cells) {
            Int value;
            if (dense) {
                Pattern sub(n - 1, n - 1);
                for (int a = 0, ai = 0; a < n; ++a) {
                    if (a == i) continue;
                    for (int b = 0, bj = 0; b < n; ++b) {
                        if (b == j) continue;
                        sub.set(ai, bj, A.at(a, b));
                        ++bj;
                    }
                    ++ai;
                }
                value = ryser_permanent(sub);
            } else {
                value = cache.count(full & ~(std::uint64_t{1} << i),
                                    full & ~(std::uint64_t{1} << j));
            }
            rep.minors[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)] = std::move(value);
        }
    }

    // Row and column expansion identities pin the minors to the permanent.
    for (int i = 0; i < n; ++i) {
        Int row_total = 0, col_total = 0;
        for (int j = 0; j < n; ++j) {
            if (A.at(i, j)) row_total += *rep.minor(i, j);
            if (A.at(j, i)) col_total += *rep.minor(j, i);
        }
        if (row_total != rep.permanent || col_total != rep.permanent)
            throw error("internal: minor expansion identity violated");
    }
    return rep;
}

} // namespace

Int permanent(const Pattern& A) {
    const int n = A.n();
    if (n == 0) return 1;
    if (ryser_suited(A)) return ryser_permanent(A);
    PermanentCache cache(A);
    const std::uint64_t full = cache.full_mask();
    return cache.count(full, full);
}

RatMatrix PermanentReport::normalized() const {
    RatMatrix X(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& m = minor(i, j);
            if (m) X.at(i, j) = Rational(*m) / Rational(permanent);
        }
    return X;
}

PermanentReport hat_matrix(const Pattern& A) { return hat_matrix_impl(A, true); }

PermanentReport hat_matrix_serial(const Pattern& A) { return hat_matrix_impl(A, false); }

std::pair<bool, std::optional<Int>> is_cps(const Pattern& A) {
    const int n = A.n();
    PermanentReport rep = hat_matrix(A);

    // Extremes of the minor matrix over the diagonals of A itself. A support
    // cell whose minor is zero lies on no diagonal, so including it with
    // weight zero cannot disturb the extremes.
    RatMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j)) M.at(i, j) = Rational(*rep.minor(i, j));

    ExtremeDiagonals ext = extreme_diagonal_sums(M, A);
    if (ext.min_cert.value != ext.max_cert.value) return {false, std::nullopt};

    const Rational& g = ext.min_cert.value;
    if (g.get_den() != 1) throw error("internal: integral diagonal sums expected");
    return {true, Int(g.get_num())};
}

Pattern gray_graph_pattern() {
    // 27 x 27, cubic, fully indecomposable; permanent 10752, each support
    // cell on exactly 3584 diagonals.
    static constexpr std::array<std::array<int, 3>, 27> kOnes{{
        {0, 1, 6},   {1, 2, 14},  {2, 3, 7},   {3, 4, 10},  {4, 5, 17},  {5, 7, 9},
        {6, 7, 13},  {6, 8, 20},  {8, 9, 12},  {9, 10, 16}, {10, 11, 23},{11, 12, 15},
        {12, 13, 19},{13, 14, 26},{14, 15, 18},{15, 16, 22},{2, 16, 17}, {17, 18, 21},
        {18, 19, 25},{5, 19, 20}, {20, 21, 24},{1, 21, 22}, {8, 22, 23}, {0, 23, 24},
        {4, 24, 25}, {11, 25, 26},{0, 3, 26},
    }};
    Pattern A(27, 27);
    for (int i = 0; i < 27; ++i)
        for (int j : kOnes[static_cast<std::size_t>(i)]) A.set(i, j, true);
    return A;
}

} // namespace rcds

#include "rcds/constructors.hpp"

#include <algorithm>
#include <numeric>

namespace rcds {

RatMatrix uniform(int n) {
    if (n < 1) throw error("order must be positive");
    return RatMatrix(n, n, Rational(1, n));
}

RatMatrix regular_rcds(const Pattern& A, int k) {
    const int n = A.n();
    if (k < 1 || !A.is_regular(k)) throw error("pattern is not k-regular");
    RatMatrix X(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j)) X.at(i, j) = Rational(1, k);
    return X;
}

RatMatrix tridiagonal_rcds(int n) {
    if (n < 2) throw error("tridiagonal family needs order >= 2");
    const int m = n - 1;  // superdiagonal unknowns x_1 .. x_{n-1}

    // Forward elimination of the m x m system with 4 on the diagonal and 1
    // on the off-diagonals, right-hand side all 2. h_i are the pivots.
    std::vector<Rational> h(static_cast<std::size_t>(m));
    std::vector<Rational> rhs(static_cast<std::size_t>(m), Rational(2));
    h[0] = 4;
    for (int i = 1; i < m; ++i) {
        h[static_cast<std::size_t>(i)] = Rational(4) - 1 / h[static_cast<std::size_t>(i - 1)];
        rhs[static_cast<std::size_t>(i)] =
            Rational(2) - rhs[static_cast<std::size_t>(i - 1)] / h[static_cast<std::size_t>(i - 1)];
    }

    // Pivot bounds: h1 = 4, h2 = 15/4 exactly, then strictly inside (37/10, 15/4).
    if (h[0] != 4) throw error("internal: first pivot is not 4");
    if (m >= 2 && h[1] != Rational(15, 4)) throw error("internal: second pivot is not 15/4");
    for (int i = 2; i < m; ++i)
        if (!(h[static_cast<std::size_t>(i)] > Rational(37, 10) &&
              h[static_cast<std::size_t>(i)] < Rational(15, 4)))
            throw error("internal: pivot out of range");

    std::vector<Rational> x(static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 0; --i) {
        Rational acc = rhs[static_cast<std::size_t>(i)];
        if (i + 1 < m) acc -= x[static_cast<std::size_t>(i + 1)];
        x[static_cast<std::size_t>(i)] = acc / h[static_cast<std::size_t>(i)];
    }

    // Entry bounds: strictly inside (1/5, 1/2) except the n = 2 case, where
    // the single unknown is exactly 1/2.
    for (int i = 0; i < m; ++i) {
        const Rational& xi = x[static_cast<std::size_t>(i)];
        if (n == 2 ? xi != Rational(1, 2)
                   : !(xi > Rational(1, 5) && xi < Rational(1, 2)))
            throw error("internal: superdiagonal entry out of range");
    }

    RatMatrix X(n, n);
    for (int i = 0; i < n; ++i) {
        Rational diag(1);
        if (i > 0) diag -= x[static_cast<std::size_t>(i - 1)];
        if (i < m) diag -= x[static_cast<std::size_t>(i)];
        X.at(i, i) = diag;
        if (i < m) {
            X.at(i, i + 1) = x[static_cast<std::size_t>(i)];
            X.at(i + 1, i) = x[static_cast<std::size_t>(i)];
        }
    }
    return X;
}

std::optional<RatMatrix> star_rcds(int n) {
    if (n < 2) throw error("star family needs order >= 2");
    const Rational xi = frac(2, n + 2);
    const Rational hub = Rational(1) - Rational(n - 1) * xi;
    if (hub < 0) return std::nullopt;  // not doubly stochastic from n = 5 on
    RatMatrix X(n, n);
    X.at(0, 0) = hub;
    for (int i = 1; i < n; ++i) {
        X.at(0, i) = xi;
        X.at(i, 0) = xi;
        X.at(i, i) = Rational(1) - xi;
    }
    return X;
}

RatMatrix corner_block(int r, int s, int n) {
    if (!(0 < s && s < r && r < n)) throw error("corner block needs 0 < s < r < n");
    RatMatrix X(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < r && j < s)
                X.at(i, j) = Rational(1, r);
            else if (i < r)
                X.at(i, j) = frac(r - s, static_cast<long>(r) * (n - s));
            else if (j >= s)
                X.at(i, j) = Rational(1, n - s);
        }
    return X;
}

RatMatrix zigzag(const ZigZagSpec& spec) {
    const int m = static_cast<int>(spec.block_dims.size());
    if (m < 2) throw error("zig-zag needs at least two blocks");
    if (static_cast<int>(spec.constants.size()) != m)
        throw error("one constant per block required");
    if (spec.last_block_void != (m % 2 == 1))
        throw error("void final block implies an odd block count and vice versa");
    for (const auto& [br, bc] : spec.block_dims)
        if (br < 1 || bc < 1) throw error("empty zig-zag block");
    for (const auto& c : spec.constants)
        if (c <= 0) throw error("zig-zag constants must be positive");

    const int row_blocks = (m + 1) / 2;
    // Blocks 2t-1 and 2t share a block row; blocks 2t and 2t+1 share a
    // block column.
    for (int t = 0; 2 * t + 1 < m; t += 1)
        if (spec.block_dims[static_cast<std::size_t>(2 * t)].first !=
            spec.block_dims[static_cast<std::size_t>(2 * t + 1)].first)
            throw error("blocks in one block row must have equal heights");
    for (int t = 1; 2 * t < m; ++t)
        if (spec.block_dims[static_cast<std::size_t>(2 * t - 1)].second !=
            spec.block_dims[static_cast<std::size_t>(2 * t)].second)
            throw error("blocks in one block column must have equal widths");

    std::vector<int> R(static_cast<std::size_t>(row_blocks));      // block-row heights
    std::vector<int> S;                                            // block-column widths
    for (int t = 0; t < row_blocks; ++t)
        R[static_cast<std::size_t>(t)] = spec.block_dims[static_cast<std::size_t>(2 * t)].first;
    S.push_back(spec.block_dims[0].second);
    for (int i = 1; i < m; i += 2) S.push_back(spec.block_dims[static_cast<std::size_t>(i)].second);

    const int n = std::accumulate(R.begin(), R.end(), 0);
    if (n != std::accumulate(S.begin(), S.end(), 0))
        throw error("zig-zag blocks do not assemble a square matrix");

    // Staircase dimension condition: partial row counts must strictly
    // outgrow the columns seen so far and stay strictly under the next
    // column block. The final block row closes with the squareness identity.
    int rsum = 0, ssum = 0;
    for (int t = 0; t < row_blocks; ++t) {
        ssum += S[static_cast<std::size_t>(t)];
        rsum += R[static_cast<std::size_t>(t)];
        const bool last = t == row_blocks - 1;
        if (!(ssum < rsum) && !(last && spec.last_block_void && ssum == rsum))
            throw error("zig-zag dimension condition violated");
        if (!last && !(rsum < ssum + S[static_cast<std::size_t>(t + 1)]))
            throw error("zig-zag dimension condition violated");
    }

    RatMatrix X(n, n);
    int row0 = 0, col0 = 0;
    for (int b = 0; b < m; ++b) {
        const auto [br, bc] = spec.block_dims[static_cast<std::size_t>(b)];
        for (int i = 0; i < br; ++i)
            for (int j = 0; j < bc; ++j)
                X.at(row0 + i, col0 + j) = spec.constants[static_cast<std::size_t>(b)];
        if (b % 2 == 0)
            col0 += bc;  // step right to the off-diagonal block
        else
            row0 += br;  // step down to the next block row
    }

    for (int i = 0; i < n; ++i)
        if (X.row_sum(i) != 1) throw error("zig-zag row sums are not 1");
    for (int j = 0; j < n; ++j)
        if (X.col_sum(j) != 1) throw error("zig-zag column sums are not 1");
    return X;
}

Pattern circulant_pattern(int p, int k) {
    if (p < 1 || k < 1 || k > p) throw error("circulant needs 1 <= k <= p");
    Pattern A(p, p);
    for (int i = 0; i < p; ++i)
        for (int t = 0; t < k; ++t) A.set(i, (i + t) % p, true);
    return A;
}

RatMatrix two_by_two_block(int k1, int k2, int k3, int k4, int p,
                           const std::array<Pattern, 4>& sub) {
    if (p < 1) throw error("block order must be positive");
    const std::array<int, 4> k{k1, k2, k3, k4};
    for (int v : k)
        if (v < 1 || v > p) throw error("each k_i must satisfy 1 <= k_i <= p");
    if (k1 + k4 != k2 + k3) throw error("balance condition k1 + k4 = k2 + k3 violated");
    for (int i = 0; i < 4; ++i)
        if (!sub[static_cast<std::size_t>(i)].is_regular(k[static_cast<std::size_t>(i)]) ||
            sub[static_cast<std::size_t>(i)].rows() != p)
            throw error("sub-pattern is not k_i-regular of order p");

    const std::array<int, 4> value{k4, k3, k2, k1};  // block values, row-major
    const Rational scale(1, k1 * k4 + k2 * k3);
    RatMatrix X(2 * p, 2 * p);
    for (int b = 0; b < 4; ++b) {
        const int roff = (b / 2) * p, coff = (b % 2) * p;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (sub[static_cast<std::size_t>(b)].at(i, j))
                    X.at(roff + i, coff + j) = value[static_cast<std::size_t>(b)] * scale;
    }
    return X;
}

RatMatrix two_by_two_block(int k1, int k2, int k3, int k4, int p) {
    const std::array<Pattern, 4> sub{circulant_pattern(p, k1), circulant_pattern(p, k2),
                                     circulant_pattern(p, k3), circulant_pattern(p, k4)};
    return two_by_two_block(k1, k2, k3, k4, p, sub);
}

std::optional<Pattern> gale_ryser(const std::vector<int>& R, const std::vector<int>& S) {
    const int m = static_cast<int>(R.size()), n = static_cast<int>(S.size());
    for (int v : R) {
        if (v < 0) throw error("negative row sum");
        if (v > n) return std::nullopt;
    }
    for (int v : S) {
        if (v < 0) throw error("negative column sum");
        if (v > m) return std::nullopt;
    }
    if (std::accumulate(R.begin(), R.end(), 0L) != std::accumulate(S.begin(), S.end(), 0L))
        throw error("row and column sums have different totals");

    // Greedy column filling: hardest column first, served by the rows with
    // the largest remaining demand (ties by index). Succeeds exactly when
    // the degree sequences are realizable.
    std::vector<int> demand = R;
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) {
        return S[static_cast<std::size_t>(a)] > S[static_cast<std::size_t>(b)];
    });

    Pattern A(m, n);
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int j : cols) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return demand[static_cast<std::size_t>(a)] > demand[static_cast<std::size_t>(b)];
        });
        const int need = S[static_cast<std::size_t>(j)];
        for (int t = 0; t < need; ++t) {
            const int i = order[static_cast<std::size_t>(t)];
            if (demand[static_cast<std::size_t>(i)] <= 0) return std::nullopt;
            A.set(i, j, true);
            --demand[static_cast<std::size_t>(i)];
        }
    }
    return A;
}

RatMatrix class1_rcds(int k, int t, int p) {
    if (k < 1 || p < 1 || t < 1 || t > k) throw error("class1 needs 1 <= t <= k and p >= 1");
    const int n = k * p;

    RatMatrix V(n, n);
    const Rational top = frac(t, static_cast<long>(t) * p);  // = 1/p
    for (int b = 0; b < p; ++b)
        for (int i = 0; i < k; ++i) V.at(i, b * k + i) = top;

    if (n > k) {
        std::vector<int> R(static_cast<std::size_t>(n - k), t * p);
        std::vector<int> S(static_cast<std::size_t>(n), t * (p - 1));
        auto A = gale_ryser(R, S);
        if (!A) throw error("internal: class1 degree sequences are always realizable");
        for (int i = 0; i < n - k; ++i)
            for (int j = 0; j < n; ++j)
                if (A->at(i, j)) V.at(k + i, j) = Rational(1, t * p);
    }
    return V;
}

RatMatrix derangement_rcds(int n) {
    if (n < 2) throw error("derangement family needs order >= 2");
    RatMatrix X(n, n, Rational(1, n - 1));
    for (int i = 0; i < n; ++i) X.at(i, i) = 0;
    return X;
}

} // namespace rcds

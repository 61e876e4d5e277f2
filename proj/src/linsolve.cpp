#include "rcds/linsolve.hpp"

namespace rcds {

std::vector<Rational> solve_linear(const RatMatrix& M, const std::vector<Rational>& b) {
    const int n = M.n();
    if (static_cast<int>(b.size()) != n) throw error("right-hand side length mismatch");

    // Augmented integer matrix: each row is multiplied by the lcm of its
    // denominators so Bareiss divisions stay exact.
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M.at(i, j).get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[static_cast<std::size_t>(i)].get_den_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rational scaled = M.at(i, j) * Rational(l);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = scaled.get_num();
        }
        Rational scaled = b[static_cast<std::size_t>(i)] * Rational(l);
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = scaled.get_num();
    }

    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                pivot = i;
                break;
            }
        if (pivot == -1) throw error("singular linear system");
        if (pivot != k) std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);

        const Int pk = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            const Int aik = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            for (int j = k; j <= n; ++j) {
                Int t = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pk -
                        aik * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                // divisibility by the previous pivot is the Bareiss identity
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(t);
            }
        }
        prev = pk;
    }

    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Rational acc(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)]);
        for (int j = i + 1; j < n; ++j)
            acc -= Rational(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                   x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] =
            acc / Rational(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    }
    return x;
}

int matrix_rank(const RatMatrix& M) {
    int rows = M.rows(), cols = M.cols();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows),
                                         std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = M.at(i, j);

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot == -1) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        for (int i = rank + 1; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] == 0) continue;
            Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] /
                         a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            for (int j = col; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

} // namespace rcds

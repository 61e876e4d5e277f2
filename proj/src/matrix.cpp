#include "rcds/matrix.hpp"

#include <algorithm>

namespace rcds {

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : image) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw error("permutation image is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    Permutation p;
    p.image = std::move(img);
    return p;
}

bool Permutation::is_involution() const {
    for (int i = 0; i < size(); ++i)
        if (image[static_cast<std::size_t>((*this)(i))] != i) return false;
    return true;
}

Pattern::Pattern(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw error("negative pattern dimension");
    bits_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

Pattern Pattern::all_ones(int n) {
    Pattern p(n, n);
    std::fill(p.bits_.begin(), p.bits_.end(), 1);
    return p;
}

Pattern Pattern::identity(int n) {
    Pattern p(n, n);
    for (int i = 0; i < n; ++i) p.set(i, i, true);
    return p;
}

int Pattern::n() const {
    if (!is_square()) throw error("pattern is not square");
    return rows_;
}

std::vector<int> Pattern::row_sums() const {
    std::vector<int> r(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j)) ++r[static_cast<std::size_t>(i)];
    return r;
}

std::vector<int> Pattern::col_sums() const {
    std::vector<int> c(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j)) ++c[static_cast<std::size_t>(j)];
    return c;
}

int Pattern::count_ones() const {
    int k = 0;
    for (auto b : bits_) k += b;
    return k;
}

bool Pattern::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Pattern Pattern::transposed() const {
    Pattern t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j)) t.set(j, i, true);
    return t;
}

bool Pattern::is_regular(int k) const {
    if (!is_square()) return false;
    auto rs = row_sums(), cs = col_sums();
    return std::all_of(rs.begin(), rs.end(), [k](int x) { return x == k; }) &&
           std::all_of(cs.begin(), cs.end(), [k](int x) { return x == k; });
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RatMatrix::RatMatrix(int rows, int cols, const Rational& fill) : RatMatrix(rows, cols) {
    std::fill(a_.begin(), a_.end(), fill);
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) throw error("ragged initializer");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

int RatMatrix::n() const {
    if (!is_square()) throw error("matrix is not square");
    return rows_;
}

Rational RatMatrix::row_sum(int i) const {
    Rational s(0);
    for (int j = 0; j < cols_; ++j) s += at(i, j);
    return s;
}

Rational RatMatrix::col_sum(int j) const {
    Rational s(0);
    for (int i = 0; i < rows_; ++i) s += at(i, j);
    return s;
}

Pattern RatMatrix::support() const {
    Pattern p(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) p.set(i, j, true);
    return p;
}

RatMatrix RatMatrix::scaled(const Rational& factor) const {
    RatMatrix r = *this;
    for (auto& x : r.a_) x *= factor;
    return r;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

} // namespace rcds

#ifndef RCDS_MATRIX_HPP
#define RCDS_MATRIX_HPP

#include "rcds/error.hpp"
#include "rcds/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rcds {

/// A permutation of {0,...,n-1}; image[i] is the column assigned to row i.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }

    static Permutation identity(int n);
    bool is_involution() const;

    bool operator==(const Permutation&) const = default;
};

/// Zero/nonzero structure of a matrix, stored as a dense boolean grid.
class Pattern {
public:
    Pattern() = default;
    Pattern(int rows, int cols);

    static Pattern all_ones(int n);
    static Pattern identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int n() const;  // order; throws if not square

    bool at(int i, int j) const { return bits_[idx(i, j)] != 0; }
    void set(int i, int j, bool v) { bits_[idx(i, j)] = v ? 1 : 0; }

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    int count_ones() const;
    bool is_symmetric() const;
    Pattern transposed() const;

    /// True when every row and every column has exactly k ones.
    bool is_regular(int k) const;

    bool operator==(const Pattern&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    RatMatrix(int rows, int cols, const Rational& fill);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> init);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int n() const;  // order; throws if not square

    const Rational& at(int i, int j) const { return a_[idx(i, j)]; }
    Rational& at(int i, int j) { return a_[idx(i, j)]; }

    Rational row_sum(int i) const;
    Rational col_sum(int j) const;

    /// Positions holding a nonzero entry.
    Pattern support() const;

    RatMatrix scaled(const Rational& factor) const;
    RatMatrix transposed() const;

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

} // namespace rcds

#endif

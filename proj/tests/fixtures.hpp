#ifndef RCDS_TESTS_FIXTURES_HPP
#define RCDS_TESTS_FIXTURES_HPP

#include "rcds/io.hpp"
#include "rcds/matrix.hpp"

#include <array>

namespace fixtures {

using rcds::MatrixFormat;
using rcds::Pattern;
using rcds::RatMatrix;

inline RatMatrix mat(const char* text) { return rcds::parse_matrix(text, MatrixFormat::plain); }
inline Pattern pat(const char* text) { return rcds::parse_pattern(text); }

// 4x4 arrowhead: full first row and column plus the diagonal. Not an RCDS
// pattern; the (0,0) potential sum lands exactly on zero.
inline Pattern arrowhead4() {
    return pat("1111\n"
               "1100\n"
               "1010\n"
               "1001");
}

// Arrowhead with the corner removed; the unique realization has sum 2.
inline Pattern hollow_arrowhead4() {
    return pat("0111\n"
               "1100\n"
               "1010\n"
               "1001");
}

inline RatMatrix hollow_arrowhead_rcds4() {
    return mat("0   1/3 1/3 1/3\n"
               "1/3 2/3 0   0\n"
               "1/3 0   2/3 0\n"
               "1/3 0   0   2/3");
}

// 6-vertex loopy tree (star of paths with loops at the four leaves);
// realization entries are fifths and the constant sum is 14/5. Its minor
// matrix has all support diagonals summing to 14.
inline Pattern loopy_tree6() {
    return pat("011100\n"
               "100011\n"
               "101000\n"
               "100100\n"
               "010010\n"
               "010001");
}

inline RatMatrix loopy_tree6_rcds() {
    return mat("0   1/5 2/5 2/5 0   0\n"
               "1/5 0   0   0   2/5 2/5\n"
               "2/5 0   3/5 0   0   0\n"
               "2/5 0   0   3/5 0   0\n"
               "0   2/5 0   0   3/5 0\n"
               "0   2/5 0   0   0   3/5");
}

// 5x5 RCDS pattern whose permutation support is NOT compatible: the minor
// matrix has diagonal sums 21 and 23.
inline Pattern rcds_not_cps5() {
    return pat("10011\n"
               "01110\n"
               "10011\n"
               "11100\n"
               "10110");
}

inline RatMatrix rcds_not_cps5_realization() {
    return mat("1/4  0    0    1/4  1/2\n"
               "0    1/2  3/10 1/5  0\n"
               "1/4  0    0    1/4  1/2\n"
               "1/5  1/2  3/10 0    0\n"
               "3/10 0    2/5  3/10 0");
}

// Its minor matrix on the support (row-major values; sentinel cells omitted).
inline RatMatrix rcds_not_cps5_minors() {
    return mat("3 0 0 3 6\n"
               "0 6 4 2 0\n"
               "3 0 0 3 6\n"
               "2 6 4 0 0\n"
               "4 0 4 4 0");
}

// 8-vertex loopy tree whose minor matrix (equivalently the sum of its 8
// support permutation matrices) has diagonal sums 29 and 30.
inline RatMatrix loopy_tree8_hat() {
    return mat("0 2 4 2 0 0 0 0\n"
               "2 0 0 0 3 3 0 0\n"
               "4 0 4 0 0 0 0 0\n"
               "2 0 0 0 0 0 3 3\n"
               "0 3 0 0 5 0 0 0\n"
               "0 3 0 0 0 5 0 0\n"
               "0 0 0 3 0 0 5 0\n"
               "0 0 0 3 0 0 0 5");
}

// Two 7x7 matrices coming from simplex faces; constant sums 13/4 and 31/9.
inline RatMatrix simplex_face7_a() {
    return mat("1/4 0   0   1/4 1/2 0   0\n"
               "0   0   0   0   1/2 1/2 0\n"
               "0   0   0   0   0   1/2 1/2\n"
               "1/4 0   0   1/4 0   0   1/2\n"
               "1/2 1/2 0   0   0   0   0\n"
               "0   1/2 1/2 0   0   0   0\n"
               "0   0   1/2 1/2 0   0   0");
}

inline RatMatrix simplex_face7_b() {
    return mat("0   0   0   0   1/3 1/3 1/3\n"
               "0   1/9 1/9 1/9 2/3 0   0\n"
               "0   1/9 1/9 1/9 0   2/3 0\n"
               "0   1/9 1/9 1/9 0   0   2/3\n"
               "1/3 2/3 0   0   0   0   0\n"
               "1/3 0   2/3 0   0   0   0\n"
               "1/3 0   0   2/3 0   0   0");
}

// k-regular example: 4x4 with two ones per line.
inline Pattern two_regular4() {
    return pat("1100\n"
               "1010\n"
               "0101\n"
               "0011");
}

// Star-with-loops pattern of order n: full first row/column plus loops.
inline Pattern star_pattern(int n) {
    Pattern A(n, n);
    for (int i = 0; i < n; ++i) {
        A.set(0, i, true);
        A.set(i, 0, true);
        A.set(i, i, true);
    }
    return A;
}

// Four 5x5 RCDS patterns found by seeded random search.
inline Pattern found_rcds5_a() {
    return pat("11011\n"
               "10111\n"
               "00111\n"
               "01100\n"
               "11001");
}

inline Pattern found_rcds5_b() {
    return pat("00110\n"
               "10111\n"
               "01011\n"
               "01001\n"
               "10010");
}

inline Pattern found_rcds5_c() {
    return pat("11001\n"
               "11000\n"
               "00111\n"
               "11100\n"
               "00011");
}

inline Pattern found_rcds5_d() {
    return pat("00110\n"
               "11001\n"
               "00101\n"
               "10111\n"
               "11100");
}

// Corner-block instance X^(3,2,6).
inline RatMatrix corner_3_2_6() {
    return mat("1/3 1/3 1/12 1/12 1/12 1/12\n"
               "1/3 1/3 1/12 1/12 1/12 1/12\n"
               "1/3 1/3 1/12 1/12 1/12 1/12\n"
               "0   0   1/4  1/4  1/4  1/4\n"
               "0   0   1/4  1/4  1/4  1/4\n"
               "0   0   1/4  1/4  1/4  1/4");
}

// 6x6 zig-zag with three 2-row block rows.
inline RatMatrix zigzag6() {
    return mat("1/2 1/4 1/4 0   0   0\n"
               "1/2 1/4 1/4 0   0   0\n"
               "0   1/4 1/4 1/4 1/4 0\n"
               "0   1/4 1/4 1/4 1/4 0\n"
               "0   0   0   1/4 1/4 1/2\n"
               "0   0   0   1/4 1/4 1/2");
}

// 10x10 two-by-two block instance with k = (1,2,3,4), p = 5.
inline RatMatrix block2x2_example() {
    return mat("0    0    0    4/10 0    0    3/10 3/10 0    0\n"
               "0    0    0    0    4/10 0    3/10 0    0    3/10\n"
               "0    4/10 0    0    0    3/10 0    0    3/10 0\n"
               "0    0    4/10 0    0    0    0    0    3/10 3/10\n"
               "4/10 0    0    0    0    3/10 0    3/10 0    0\n"
               "0    2/10 2/10 2/10 0    1/10 1/10 0    1/10 1/10\n"
               "2/10 2/10 0    0    2/10 0    1/10 1/10 1/10 1/10\n"
               "2/10 0    2/10 0    2/10 1/10 1/10 1/10 0    1/10\n"
               "0    0    2/10 2/10 2/10 1/10 0    1/10 1/10 1/10\n"
               "2/10 2/10 0    2/10 0    1/10 1/10 1/10 1/10 0");
}

inline std::array<Pattern, 4> block2x2_sub_patterns() {
    return {pat("00010\n00001\n01000\n00100\n10000"),
            pat("01100\n01001\n10010\n00011\n10100"),
            pat("01110\n11001\n10101\n00111\n11010"),
            pat("11011\n01111\n11101\n10111\n11110")};
}

} // namespace fixtures

#endif

#ifndef RCDS_RATIONAL_HPP
#define RCDS_RATIONAL_HPP

#include "rcds/error.hpp"

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace rcds {

// Every scalar in the library is an exact rational. GMP keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// the decision procedures rely on.
using Rational = mpq_class;
using Int = mpz_class;

/// Canonical num/den construction. mpq_class's two-argument constructor
/// stores the pair verbatim, and GMP comparisons assume lowest terms, so
/// every computed pair must pass through here.
inline Rational frac(long num, long den) {
    if (den == 0) throw error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational frac(const Int& num, const Int& den) {
    if (den == 0) throw error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "a/b", "-3", or a finite decimal like "0.25" (converted exactly
/// to 1/4). Throws rcds::error on anything else, including "1/0".
Rational parse_rational(std::string_view token);

/// Lowest-terms text form: "2/3", or just "2" when the denominator is 1.
std::string to_string(const Rational& q);

} // namespace rcds

#endif

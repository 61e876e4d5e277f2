#ifndef RCDS_SEARCH_HPP
#define RCDS_SEARCH_HPP

#include "rcds/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rcds {

/// splitmix64: fully specified so seeded runs reproduce across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

struct SearchConfig {
    int n = 0;
    Rational density;          // strictly between 0 and 1
    int trials = 0;            // >= 1
    std::uint64_t seed = 0;
};

/// i.i.d. Bernoulli(density) entries in row-major order; each draw accepts
/// when (output >> 11) / 2^53 < density, compared exactly.
Pattern random_pattern(int n, const Rational& density, SplitMix64& rng);

struct Discovery {
    int trial = -1;
    Pattern pattern;        // support of the emitted matrix
    RatMatrix matrix;
    Rational constant_sum;
};

/// Potential-solver step of one search trial: solve H(u,v) = e on A and
/// keep the result when no support cell goes negative. Cells with
/// u_i + v_j = 0 simply drop out of the support, which is how a trial can
/// emit a matrix supported on a proper sub-pattern of A. Returns nothing
/// when A is not square, not fully indecomposable, or some support cell is
/// strictly negative.
std::optional<Discovery> try_pattern(const Pattern& A);

/// Runs config.trials independent trials; trial t draws its pattern from a
/// splitmix64 stream seeded with seed ^ t, so the output is identical no
/// matter how the trials are scheduled. Parallelized over trials.
std::vector<Discovery> discover(const SearchConfig& config);

/// Single-threaded reference implementation; same output list.
std::vector<Discovery> discover_serial(const SearchConfig& config);

} // namespace rcds

#endif

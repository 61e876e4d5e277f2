#include "rcds/search.hpp"

#include "rcds/numeric.hpp"
#include "rcds/potentials.hpp"
#include "rcds/structure.hpp"

#include <atomic>
#include <numeric>

namespace rcds {

namespace {

void validate(const SearchConfig& c) {
    if (c.n < 1) throw error("search order must be positive");
    if (!(c.density > 0 && c.density < 1)) throw error("density must lie strictly in (0,1)");
    if (c.trials < 1) throw error("at least one trial required");
}

std::optional<Discovery> run_trial(const SearchConfig& c, int trial) {
    SplitMix64 rng{c.seed ^ static_cast<std::uint64_t>(trial)};
    Pattern A = random_pattern(c.n, c.density, rng);
    if (!is_fully_indecomposable(A)) return std::nullopt;

    std::optional<Discovery> d = try_pattern(A);
    if (d) d->trial = trial;
    return d;
}

} // namespace

Pattern random_pattern(int n, const Rational& density, SplitMix64& rng) {
    if (n < 1) throw error("pattern order must be positive");
    // exact comparison (out >> 11) / 2^53 < density
    const Int num = density.get_num(), den = density.get_den();
    const Int threshold = num << 53;
    Pattern A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::uint64_t draw = rng.next() >> 11;
            if (Int(draw) * den < threshold) A.set(i, j, true);
        }
    return A;
}

std::optional<Discovery> try_pattern(const Pattern& A) {
    if (!A.is_square() || !is_fully_indecomposable(A)) return std::nullopt;
    Potentials pot = solve_potentials(A);

    const int n = A.n();
    RatMatrix X(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!A.at(i, j)) continue;
            Rational y = pot.u[static_cast<std::size_t>(i)] + pot.v[static_cast<std::size_t>(j)];
            if (y < 0) return std::nullopt;  // no clipping: a negative cell kills the trial
            X.at(i, j) = std::move(y);
        }

    if (!is_doubly_stochastic(X)) return std::nullopt;

    Discovery d;
    d.pattern = X.support();
    d.constant_sum = std::accumulate(pot.u.begin(), pot.u.end(), Rational(0)) +
                     std::accumulate(pot.v.begin(), pot.v.end(), Rational(0));
    d.matrix = std::move(X);
    return d;
}

std::vector<Discovery> discover(const SearchConfig& config) {
    validate(config);
    std::vector<std::optional<Discovery>> slots(static_cast<std::size_t>(config.trials));
    std::atomic<bool> failed{false};

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < config.trials; ++t) {
        try {
            slots[static_cast<std::size_t>(t)] = run_trial(config, t);
        } catch (...) {
            failed = true;
        }
    }
    if (failed) throw error("search trial failed");

    std::vector<Discovery> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

std::vector<Discovery> discover_serial(const SearchConfig& config) {
    validate(config);
    std::vector<Discovery> out;
    for (int t = 0; t < config.trials; ++t)
        if (auto d = run_trial(config, t)) out.push_back(std::move(*d));
    return out;
}

} // namespace rcds

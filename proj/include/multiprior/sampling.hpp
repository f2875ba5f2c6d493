#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "multiprior/core.hpp"
#include "multiprior/credal.hpp"
#include "multiprior/criteria.hpp"
#include "multiprior/rational.hpp"

namespace multiprior {

// Deterministic sampling utilities. Each trial derives its own generator
// from (master seed, trial index), so reports are reproducible regardless
// of how trials are scheduled.

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(mix_seed(seed, trial));
}

// Rational with |value| <= bound and denominator <= max_den.
inline Rational sample_rational(std::mt19937_64& rng, long bound = 10, long max_den = 12) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-bound * den, bound * den);
    return rat(num_dist(rng), den);
}

inline Rational sample_rational_in_01(std::mt19937_64& rng, long max_den = 12) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(0, den);
    return rat(num_dist(rng), den);
}

inline Rational sample_rational_in_open_01(std::mt19937_64& rng, long max_den = 12) {
    std::uniform_int_distribution<long> den_dist(2, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(1, den - 1);
    return rat(num_dist(rng), den);
}

// Entries share a sampled denominator <= max_den, so the composition stays
// within the denominator budget.
inline ProbabilityVector sample_probability_vector(std::mt19937_64& rng, std::size_t n,
                                                   long max_den = 12) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::vector<long> raw(n, 0);
    long remaining = den;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::uniform_int_distribution<long> part(0, remaining);
        raw[i] = part(rng);
        remaining -= raw[i];
    }
    raw[n - 1] = remaining;
    // shuffle so the tail state is not biased toward the leftover mass
    std::shuffle(raw.begin(), raw.end(), rng);
    RatVec mass(n);
    for (std::size_t i = 0; i < n; ++i) mass[i] = rat(raw[i], den);
    return ProbabilityVector(std::move(mass));
}

inline CredalSet sample_credal_set(std::mt19937_64& rng, std::size_t n, std::size_t max_gens = 5,
                                   long max_den = 12) {
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    const std::size_t g = count(rng);
    std::vector<ProbabilityVector> gens;
    gens.reserve(g);
    for (std::size_t i = 0; i < g; ++i) gens.push_back(sample_probability_vector(rng, n, max_den));
    return CredalSet(std::move(gens));
}

// Utility profile over n states.
inline UtilityProfile sample_profile(std::mt19937_64& rng, std::size_t n, long bound = 10,
                                     long max_den = 12) {
    UtilityProfile p(n);
    for (auto& v : p) v = sample_rational(rng, bound, max_den);
    return p;
}

inline Act sample_act(std::mt19937_64& rng, const AffineUtility& u, std::size_t n,
                      long bound = 10, long max_den = 12) {
    return act_from_utility_levels(u, sample_profile(rng, n, bound, max_den));
}

// Hope-and-prepare spec with intersecting sets: when the sampled pair is
// disjoint, one of the worst-case generators is shared into the best-case
// set, which keeps all entries within the denominator budget.
inline HopeAndPrepare sample_hp_spec(std::mt19937_64& rng, const AffineUtility& u, std::size_t n,
                                     std::size_t max_gens = 5, long max_den = 12) {
    CredalSet worst = sample_credal_set(rng, n, max_gens, max_den);
    CredalSet best = sample_credal_set(rng, n, max_gens, max_den);
    if (!intersects(worst, best)) {
        std::uniform_int_distribution<std::size_t> pick(0, worst.size() - 1);
        auto gens = best.generators;
        gens.push_back(worst.generators[pick(rng)]);
        best = CredalSet(std::move(gens));
    }
    return HopeAndPrepare(u, std::move(worst), std::move(best));
}

}  // namespace multiprior

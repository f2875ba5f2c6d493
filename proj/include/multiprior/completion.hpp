#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "multiprior/comparative.hpp"
#include "multiprior/core.hpp"
#include "multiprior/criteria.hpp"
#include "multiprior/rational.hpp"
#include "multiprior/sampling.hpp"

namespace multiprior {

// Complete extension weighing the worst case by alpha and the best case by
// 1 - alpha on the hope-and-prepare sets.
inline AlphaMeu complete_with_alpha(const HopeAndPrepare& hp, const Rational& alpha) {
    if (alpha < 0 || alpha > 1)
        throw std::invalid_argument("complete_with_alpha: alpha outside [0,1]");
    return AlphaMeu(hp.u, hp.worst_case, hp.best_case, alpha);
}

// Checks on sampled pairs that every strict hope-and-prepare ranking is
// preserved by the candidate complete criterion; returns the violating
// pairs (empty when the candidate extends hp on the whole sample).
inline std::vector<ActPair> verify_extension(const AlphaMeu& ext, const HopeAndPrepare& hp,
                                             std::uint64_t trials = 1000, std::uint64_t seed = 1,
                                             std::size_t max_witnesses = 1) {
    return extension_gap_search(PreferenceSpec{hp}, PreferenceSpec{ext}, trials, seed,
                                max_witnesses);
}

struct AlphaRecovery {
    bool unique = false;  // false: hp is complete, every alpha represents it
    Rational alpha;       // meaningful only when unique
};

// Recovers alpha from evaluations of an unknown constant-linear extension on
// probe acts. Any probe whose worst and best cases separate pins alpha via
//   value = alpha * worst + (1 - alpha) * best;
// all separated probes must agree, and the result must stay in [0,1], else
// the input was not an extension of hp at all.
inline AlphaRecovery recover_alpha(const HopeAndPrepare& hp,
                                   const std::vector<std::pair<Act, Rational>>& probe_values) {
    if (probe_values.empty()) throw std::invalid_argument("recover_alpha: no probes");
    std::optional<Rational> alpha;
    for (const auto& [act, value] : probe_values) {
        const UtilityProfile p = apply_utility(hp.u, act);
        const Rational lo = min_expected(hp.worst_case, p);
        const Rational hi = max_expected(hp.best_case, p);
        if (lo == hi) {
            if (value != lo)
                throw std::invalid_argument(
                    "recover_alpha: probe value disagrees with the degenerate range");
            continue;
        }
        const Rational candidate = (value - hi) / (lo - hi);
        if (candidate < 0 || candidate > 1)
            throw std::invalid_argument("recover_alpha: probe violates monotonicity");
        if (alpha && *alpha != candidate)
            throw std::invalid_argument("recover_alpha: probes are not a consistent extension");
        alpha = candidate;
    }
    if (!alpha) return AlphaRecovery{false, Rational(0)};
    return AlphaRecovery{true, *alpha};
}

// Probe family for recovery: sampled profiles plus their normalizations
// (worst case pinned to -1, best case to 0), which are the probes that make
// the recovered ratio independent of the act.
inline std::vector<Act> default_recovery_probes(const HopeAndPrepare& hp, std::size_t count = 20,
                                                std::uint64_t seed = 1) {
    const std::size_t n = hp.worst_case.states();
    std::vector<Act> probes;
    probes.reserve(2 * count);
    for (std::uint64_t t = 0; t < count; ++t) {
        auto rng = trial_rng(seed, t);
        UtilityProfile phi = sample_profile(rng, n);
        const Rational lo = min_expected(hp.worst_case, phi);
        const Rational hi = max_expected(hp.best_case, phi);
        probes.push_back(act_from_utility_levels(hp.u, phi));
        if (lo < hi) {
            UtilityProfile scaled(n);
            for (std::size_t s = 0; s < n; ++s) scaled[s] = (phi[s] - hi) / (hi - lo);
            probes.push_back(act_from_utility_levels(hp.u, scaled));
        }
    }
    return probes;
}

// Raw alpha-weighted combiner with no range check on alpha, so the
// monotonicity consequences of alpha outside [0,1] can be exercised.
inline Rational combined_value(const AffineUtility& u, const CredalSet& worst,
                               const CredalSet& best, const Rational& alpha, const Act& f) {
    const UtilityProfile p = apply_utility(u, f);
    return alpha * min_expected(worst, p) + (1 - alpha) * max_expected(best, p);
}

// Searches for a pair where the combiner fails to respect joint min/max
// dominance (first act strictly better in both the worst and the best
// case, which statewise dominance implies). For alpha in [0,1] no such
// pair exists; for alpha < 0 the constructive probe (a constant just above
// a separated act's best case) is guaranteed to violate.
inline std::optional<ActPair> find_monotonicity_violation(const AffineUtility& u,
                                                          const CredalSet& worst,
                                                          const CredalSet& best,
                                                          const Rational& alpha,
                                                          std::uint64_t trials = 1000,
                                                          std::uint64_t seed = 1) {
    const std::size_t n = worst.states();
    const auto dominates_jointly = [&](const Act& f, const Act& g) {
        const UtilityProfile pf = apply_utility(u, f);
        const UtilityProfile pg = apply_utility(u, g);
        return min_expected(worst, pf) > min_expected(worst, pg) &&
               max_expected(best, pf) > max_expected(best, pg);
    };
    const auto violation = [&](const Act& f, const Act& g) {
        return dominates_jointly(f, g) &&
               !(combined_value(u, worst, best, alpha, f) >
                 combined_value(u, worst, best, alpha, g));
    };
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, t);
        const UtilityProfile phi = sample_profile(rng, n);
        const Act g = act_from_utility_levels(u, phi);
        const Rational lo = min_expected(worst, phi);
        const Rational hi = max_expected(best, phi);
        if (lo < hi) {
            // constant sitting just above the act's best case dominates
            // jointly, but an alpha < 0 combiner overshoots the act past it
            const Rational eps =
                alpha < 0 ? Rational(-alpha * (hi - lo) / 2) : Rational((hi - lo) / 4);
            const Act f = act_from_utility_levels(u, UtilityProfile(n, hi + eps));
            if (violation(f, g)) return ActPair{f, g};
        }
        if (lo < hi && alpha > 1) {
            // mirror image: alpha > 1 undershoots past a constant below
            const Rational eps = (alpha - 1) * (hi - lo) / 2;
            const Act below = act_from_utility_levels(u, UtilityProfile(n, lo - eps));
            if (violation(g, below)) return ActPair{g, below};
        }
        // statewise-dominating bump
        UtilityProfile bumped = phi;
        for (auto& v : bumped) v += rat(1, 3);
        const Act fb = act_from_utility_levels(u, bumped);
        if (violation(fb, g)) return ActPair{fb, g};
    }
    return std::nullopt;
}

}  // namespace multiprior

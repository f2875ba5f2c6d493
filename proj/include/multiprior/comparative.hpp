#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "multiprior/core.hpp"
#include "multiprior/credal.hpp"
#include "multiprior/criteria.hpp"
#include "multiprior/rational.hpp"
#include "multiprior/sampling.hpp"

namespace multiprior {

enum class SearchOutcome { Pass, Violated, Inconclusive };

inline const char* to_string(SearchOutcome s) {
    switch (s) {
        case SearchOutcome::Pass: return "pass";
        case SearchOutcome::Violated: return "violated";
        case SearchOutcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct ActPair {
    Act first, second;
};

// Verdict of a conservatism/attitude comparison. `certified` is the exact
// set-containment characterization and is authoritative; the semantic search
// cross-validates it on sampled act pairs and, when the certificate fails,
// must produce a violating pair (Inconclusive when the budget runs out,
// which the suite treats as a defect, never as a pass).
struct ConservatismVerdict {
    bool certified = false;
    SearchOutcome semantic = SearchOutcome::Inconclusive;
    std::vector<ActPair> witnesses;
};

inline bool is_concordant(const HopeAndPrepare& spec) {
    return same_hull(spec.worst_case, spec.best_case);
}

namespace detail {

inline void require_shared_utility(const AffineUtility& a, const AffineUtility& b) {
    if (!same_preference_scale(a, b))
        throw std::invalid_argument("comparison requires a shared utility on outcomes");
}

inline bool ranks_first(const PreferenceSpec& spec, const Act& f, const Act& g) {
    return compare(spec, f, g) == Comparison::FirstStrict;
}

// Profile from a separation certificate, flipped so that the hull side ends
// up strictly ABOVE the level and the point side strictly below it.
struct LevelledProfile {
    UtilityProfile profile;  // hull: profile . p >= level + 1/2, point: <= level - 1/2
    Rational level;
};

inline LevelledProfile hull_above_point(const SeparatingAffine& sep) {
    UtilityProfile psi(sep.weights.size());
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = -sep.weights[i];
    return LevelledProfile{std::move(psi), -sep.threshold - rat(1, 2)};
}

inline LevelledProfile hull_below_point(const SeparatingAffine& sep) {
    return LevelledProfile{sep.weights, sep.threshold + rat(1, 2)};
}

}  // namespace detail

// Searches for act pairs ranked strictly by `base` but not by `candidate`,
// i.e. counterexamples to "candidate extends base". Deterministic indicator
// profiles are probed before random pairs so canonical witnesses are found
// first and reproducibly.
inline std::vector<ActPair> extension_gap_search(const PreferenceSpec& base,
                                                 const PreferenceSpec& candidate,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 std::size_t max_witnesses = 1) {
    detail::require_shared_utility(utility_of(base), utility_of(candidate));
    const std::size_t n = states_of(base);
    const AffineUtility& u = utility_of(base);
    std::vector<ActPair> found;
    const auto consider = [&](const Act& f, const Act& g) {
        if (found.size() >= max_witnesses) return;
        if (detail::ranks_first(base, f, g) && !detail::ranks_first(candidate, f, g))
            found.push_back(ActPair{f, g});
    };
    for (std::size_t i = 0; i < n && found.size() < max_witnesses; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            UtilityProfile ei(n, Rational(0)), ej(n, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            consider(act_from_utility_levels(u, ei), act_from_utility_levels(u, ej));
        }
    for (std::uint64_t t = 0; t < trials && found.size() < max_witnesses; ++t) {
        auto rng = trial_rng(seed, t);
        consider(sample_act(rng, u, n), sample_act(rng, u, n));
    }
    return found;
}

namespace detail {

// Assembles a ConservatismVerdict: constructive witnesses are attempted when
// the certificate fails, every candidate is verified by evaluating both
// relations, and random sampling cross-validates either way.
template <typename Construct, typename RandomTrial>
ConservatismVerdict run_conservatism_check(bool certified, Construct&& construct,
                                           RandomTrial&& random_trial, std::uint64_t trials) {
    ConservatismVerdict verdict;
    verdict.certified = certified;
    if (!certified) {
        auto witness = construct();
        if (witness) verdict.witnesses.push_back(std::move(*witness));
    }
    for (std::uint64_t t = 0; t < trials && verdict.witnesses.empty(); ++t) {
        auto witness = random_trial(t);
        if (witness) verdict.witnesses.push_back(std::move(*witness));
    }
    if (!verdict.witnesses.empty())
        verdict.semantic = SearchOutcome::Violated;
    else
        verdict.semantic = certified ? SearchOutcome::Pass : SearchOutcome::Inconclusive;
    return verdict;
}

}  // namespace detail

// Is the Bewley relation more conservative than (extended by) the
// hope-and-prepare one? Exactly when C_hp and D_hp both sit inside the
// Bewley set. A failing certificate is witnessed constructively: a
// generator escaping the Bewley set yields, through separation, an act and
// a constant ranked by Bewley but not by hope-and-prepare.
inline ConservatismVerdict bewley_more_conservative_than_hp(const Bewley& bw,
                                                            const HopeAndPrepare& hp,
                                                            std::uint64_t trials = 256,
                                                            std::uint64_t seed = 1) {
    detail::require_shared_utility(bw.u, hp.u);
    if (bw.scenarios.states() != hp.worst_case.states())
        throw std::invalid_argument("state count mismatch");
    const bool certified = is_subset(hull_union({hp.worst_case, hp.best_case}), bw.scenarios);
    const std::size_t n = bw.scenarios.states();
    const PreferenceSpec base{bw}, cand{hp};

    const auto construct = [&]() -> std::optional<ActPair> {
        // worst-case generator outside the Bewley set: Bewley ranks the
        // separating act above a constant, hp's min side refuses
        for (const auto& p : hp.worst_case.generators)
            if (auto sep = separate_from_credal(bw.scenarios, p)) {
                const auto lp = detail::hull_above_point(*sep);
                const Act f = act_from_utility_levels(bw.u, lp.profile);
                const Act x = act_from_utility_levels(bw.u, UtilityProfile(n, lp.level));
                if (detail::ranks_first(base, f, x) && !detail::ranks_first(cand, f, x))
                    return ActPair{f, x};
            }
        // best-case generator outside: the constant beats the act for
        // Bewley, hp's max side refuses
        for (const auto& p : hp.best_case.generators)
            if (auto sep = separate_from_credal(bw.scenarios, p)) {
                const auto lp = detail::hull_below_point(*sep);
                const Act f = act_from_utility_levels(bw.u, lp.profile);
                const Act x = act_from_utility_levels(bw.u, UtilityProfile(n, lp.level));
                if (detail::ranks_first(base, x, f) && !detail::ranks_first(cand, x, f))
                    return ActPair{x, f};
            }
        return std::nullopt;
    };
    const auto random_trial = [&](std::uint64_t t) -> std::optional<ActPair> {
        auto rng = trial_rng(seed, t);
        const Act f = sample_act(rng, bw.u, n);
        const Act g = sample_act(rng, bw.u, n);
        if (detail::ranks_first(base, f, g) && !detail::ranks_first(cand, f, g))
            return ActPair{f, g};
        return std::nullopt;
    };
    return detail::run_conservatism_check(certified, construct, random_trial, trials);
}

// Twofold vs hope-and-prepare: conservative exactly when both sets are
// contained componentwise.
inline ConservatismVerdict twofold_more_conservative_than_hp(const Twofold& tf,
                                                             const HopeAndPrepare& hp,
                                                             std::uint64_t trials = 256,
                                                             std::uint64_t seed = 1) {
    detail::require_shared_utility(tf.u, hp.u);
    if (tf.worst_case.states() != hp.worst_case.states())
        throw std::invalid_argument("state count mismatch");
    const bool certified =
        is_subset(hp.worst_case, tf.worst_case) && is_subset(hp.best_case, tf.best_case);
    const std::size_t n = tf.worst_case.states();
    const PreferenceSpec base{tf}, cand{hp};

    const auto construct = [&]() -> std::optional<ActPair> {
        for (const auto& p : hp.worst_case.generators)
            if (auto sep = separate_from_credal(tf.worst_case, p)) {
                const auto lp = detail::hull_above_point(*sep);
                const Act f = act_from_utility_levels(tf.u, lp.profile);
                const Act x = act_from_utility_levels(tf.u, UtilityProfile(n, lp.level));
                if (detail::ranks_first(base, f, x) && !detail::ranks_first(cand, f, x))
                    return ActPair{f, x};
            }
        for (const auto& p : hp.best_case.generators)
            if (auto sep = separate_from_credal(tf.best_case, p)) {
                const auto lp = detail::hull_below_point(*sep);
                const Act f = act_from_utility_levels(tf.u, lp.profile);
                const Act x = act_from_utility_levels(tf.u, UtilityProfile(n, lp.level));
                if (detail::ranks_first(base, x, f) && !detail::ranks_first(cand, x, f))
                    return ActPair{x, f};
            }
        return std::nullopt;
    };
    const auto random_trial = [&](std::uint64_t t) -> std::optional<ActPair> {
        auto rng = trial_rng(seed, t);
        const Act f = sample_act(rng, tf.u, n);
        const Act g = sample_act(rng, tf.u, n);
        if (detail::ranks_first(base, f, g) && !detail::ranks_first(cand, f, g))
            return ActPair{f, g};
        return std::nullopt;
    };
    return detail::run_conservatism_check(certified, construct, random_trial, trials);
}

namespace detail {

// Attitude comparisons quantify over (act, constant) pairs only. `averse`
// selects the direction: act above constant (worst-case sets) or constant
// above act (best-case sets).
inline ConservatismVerdict attitude_check(const HopeAndPrepare& more, const HopeAndPrepare& less,
                                          bool averse, std::uint64_t trials, std::uint64_t seed) {
    require_shared_utility(more.u, less.u);
    if (more.worst_case.states() != less.worst_case.states())
        throw std::invalid_argument("state count mismatch");
    const std::size_t n = more.worst_case.states();
    const CredalSet& inner = averse ? less.worst_case : less.best_case;
    const CredalSet& outer = averse ? more.worst_case : more.best_case;
    const bool certified = is_subset(inner, outer);
    const PreferenceSpec spec1{more}, spec2{less};

    const auto violates = [&](const Act& f, const Act& x) -> bool {
        if (averse)
            return ranks_first(spec1, f, x) && !ranks_first(spec2, f, x);
        return ranks_first(spec1, x, f) && !ranks_first(spec2, x, f);
    };
    const auto construct = [&]() -> std::optional<ActPair> {
        for (const auto& p : inner.generators)
            if (auto sep = separate_from_credal(outer, p)) {
                const auto lp = averse ? hull_above_point(*sep) : hull_below_point(*sep);
                const Act f = act_from_utility_levels(more.u, lp.profile);
                const Act x = act_from_utility_levels(more.u, UtilityProfile(n, lp.level));
                if (violates(f, x)) return averse ? ActPair{f, x} : ActPair{x, f};
            }
        return std::nullopt;
    };
    const auto random_trial = [&](std::uint64_t t) -> std::optional<ActPair> {
        auto rng = trial_rng(seed, t);
        const Act f = sample_act(rng, more.u, n);
        const ConstantFence fence = constant_fence(spec1, f);
        const std::vector<Rational> levels{fence.lo, fence.hi, (fence.lo + fence.hi) / 2,
                                           fence.lo - sample_rational_in_open_01(rng),
                                           fence.hi + sample_rational_in_open_01(rng)};
        for (const auto& level : levels) {
            const Act x = act_from_utility_levels(more.u, UtilityProfile(n, level));
            if (violates(f, x)) return averse ? ActPair{f, x} : ActPair{x, f};
        }
        return std::nullopt;
    };
    return run_conservatism_check(certified, construct, random_trial, trials);
}

}  // namespace detail

// hp1 more ambiguity averse than hp2: hp1 ranking an act above a constant
// forces hp2 to as well; holds exactly when hp2's worst-case set sits
// inside hp1's.
inline ConservatismVerdict more_ambiguity_averse(const HopeAndPrepare& hp1,
                                                 const HopeAndPrepare& hp2,
                                                 std::uint64_t trials = 256,
                                                 std::uint64_t seed = 1) {
    return detail::attitude_check(hp1, hp2, true, trials, seed);
}

// hp1 more ambiguity loving than hp2: hp1 ranking a constant above an act
// forces hp2 to as well; holds exactly when hp2's best-case set sits inside
// hp1's.
inline ConservatismVerdict more_ambiguity_loving(const HopeAndPrepare& hp1,
                                                 const HopeAndPrepare& hp2,
                                                 std::uint64_t trials = 256,
                                                 std::uint64_t seed = 1) {
    return detail::attitude_check(hp1, hp2, false, trials, seed);
}

}  // namespace multiprior

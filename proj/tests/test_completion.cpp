#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiprior/axioms.hpp"
#include "multiprior/completion.hpp"
#include "multiprior/sampling.hpp"

using namespace multiprior;

namespace {

ProbabilityVector pv(std::initializer_list<Rational> mass) { return ProbabilityVector(mass); }

CredalSet cs(std::initializer_list<ProbabilityVector> gens) {
    return CredalSet(std::vector<ProbabilityVector>(gens));
}

const AffineUtility identity({rat(1)}, rat(0));
const CredalSet experts = cs({pv({rat(1, 3), rat(2, 3)}), pv({rat(1, 2), rat(1, 2)})});

std::vector<std::pair<Act, Rational>> evaluate_probes(const AlphaMeu& ext,
                                                      const std::vector<Act>& probes) {
    std::vector<std::pair<Act, Rational>> values;
    values.reserve(probes.size());
    for (const auto& f : probes) values.emplace_back(f, alpha_meu_value(ext, f));
    return values;
}

}  // namespace

TEST_CASE("complete_with_alpha endpoints") {
    const HopeAndPrepare hp(identity, experts, experts);
    const Act f = act_from_utility_levels(identity, {rat(4), rat(-2)});
    CHECK(alpha_meu_value(complete_with_alpha(hp, rat(1)), f) == min_eu(identity, experts, f));
    CHECK(alpha_meu_value(complete_with_alpha(hp, rat(0)), f) == max_eu(identity, experts, f));
    CHECK_THROWS_AS(complete_with_alpha(hp, rat(7, 5)), std::invalid_argument);
    // concordant spec: the standard criterion on one set
    const AlphaMeu std_meu = complete_with_alpha(hp, rat(1, 3));
    CHECK(same_hull(std_meu.worst_case, std_meu.best_case));
}

TEST_CASE("verify_extension finds no witness for genuine completions") {
    const HopeAndPrepare hp(identity, experts, experts);
    const AlphaMeu ext = complete_with_alpha(hp, rat(1, 2));
    CHECK(verify_extension(ext, hp, 2000, 9).empty());
}

TEST_CASE("verify_extension flags a foreign criterion") {
    const HopeAndPrepare hp(identity, experts, experts);
    // same utility, but sets disjoint from the hp ones
    const CredalSet corner = cs({pv({rat(0), rat(1)})});
    const AlphaMeu foreign(identity, corner, corner, rat(1, 2));
    const auto witnesses = verify_extension(foreign, hp, 2000, 9);
    REQUIRE_FALSE(witnesses.empty());
    const auto& [f, g] = witnesses.front();
    CHECK(hp_compare(hp, f, g) == Comparison::FirstStrict);
    CHECK(alpha_meu_compare(foreign, f, g) != Comparison::FirstStrict);
}

TEST_CASE("recover_alpha from a single probe") {
    // probe with range [0,1] evaluated at 1/4 pins alpha = 3/4
    const CredalSet simplex = full_simplex(2);
    const HopeAndPrepare hp(identity, simplex, simplex);
    const Act probe = act_from_utility_levels(identity, {rat(0), rat(1)});
    const auto recovery = recover_alpha(hp, {{probe, rat(1, 4)}});
    CHECK(recovery.unique);
    CHECK(recovery.alpha == rat(3, 4));
}

TEST_CASE("recover_alpha round trip is exact") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto rng = trial_rng(314, trial);
        std::uniform_int_distribution<std::size_t> n_dist(2, 4);
        const std::size_t n = n_dist(rng);
        const HopeAndPrepare hp = sample_hp_spec(rng, identity, n);
        const Rational alpha = sample_rational_in_01(rng);
        const AlphaMeu ext = complete_with_alpha(hp, alpha);
        const auto probes = default_recovery_probes(hp, 20, trial);
        const auto recovery = recover_alpha(hp, evaluate_probes(ext, probes));
        if (recovery.unique) {
            CHECK(recovery.alpha == alpha);
        } else {
            // only complete specs escape uniqueness: every probe degenerate
            for (const auto& probe : probes)
                CHECK(min_eu(identity, hp.worst_case, probe) ==
                      max_eu(identity, hp.best_case, probe));
        }
    }
}

TEST_CASE("recover_alpha reports NonUnique for complete specs") {
    const CredalSet point = cs({pv({rat(1, 2), rat(1, 2)})});
    const HopeAndPrepare hp(identity, point, point);
    const AlphaMeu ext = complete_with_alpha(hp, rat(2, 5));
    const auto probes = default_recovery_probes(hp, 10, 1);
    const auto recovery = recover_alpha(hp, evaluate_probes(ext, probes));
    CHECK_FALSE(recovery.unique);
}

TEST_CASE("recover_alpha rejects inconsistent or non-monotone inputs") {
    const CredalSet simplex = full_simplex(2);
    const HopeAndPrepare hp(identity, simplex, simplex);
    const Act a = act_from_utility_levels(identity, {rat(0), rat(1)});
    const Act b = act_from_utility_levels(identity, {rat(1), rat(0)});
    // two probes pinning different alphas
    CHECK_THROWS_AS(recover_alpha(hp, {{a, rat(1, 4)}, {b, rat(1, 2)}}), std::invalid_argument);
    // value outside the [min,max] band means alpha outside [0,1]
    CHECK_THROWS_AS(recover_alpha(hp, {{a, rat(3, 2)}}), std::invalid_argument);
    // degenerate probe must sit exactly at its value
    const Act c = constant_act(Outcome({rat(5)}), 2);
    CHECK_THROWS_AS(recover_alpha(hp, {{c, rat(4)}}), std::invalid_argument);
    CHECK_THROWS_AS(recover_alpha(hp, {}), std::invalid_argument);
}

TEST_CASE("alpha recovery is independent of probe rescaling") {
    const HopeAndPrepare hp(identity, experts, experts);
    const AlphaMeu ext = complete_with_alpha(hp, rat(2, 5));
    const Act probe = act_from_utility_levels(identity, {rat(6), rat(-6)});
    std::vector<std::pair<Act, Rational>> values;
    const std::vector<std::pair<Rational, Rational>> transforms{
        {rat(1), rat(0)}, {rat(3), rat(5)}, {rat(1, 7), rat(-2)}};
    for (const auto& [a, b] : transforms) {
        UtilityProfile scaled = apply_utility(identity, probe);
        for (auto& v : scaled) v = a * v + b;
        const Act act = act_from_utility_levels(identity, scaled);
        values.emplace_back(act, alpha_meu_value(ext, act));
    }
    const auto recovery = recover_alpha(hp, values);
    CHECK(recovery.unique);
    CHECK(recovery.alpha == rat(2, 5));
}

TEST_CASE("joint-dominance monotonicity: alpha in [0,1] passes") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        auto rng = trial_rng(272, trial);
        std::uniform_int_distribution<std::size_t> n_dist(2, 4);
        const std::size_t n = n_dist(rng);
        const HopeAndPrepare hp = sample_hp_spec(rng, identity, n);
        const Rational alpha = sample_rational_in_01(rng);
        CHECK_FALSE(find_monotonicity_violation(identity, hp.worst_case, hp.best_case, alpha, 50,
                                                trial)
                        .has_value());
    }
}

TEST_CASE("joint-dominance monotonicity: negative alpha is caught") {
    const auto violation =
        find_monotonicity_violation(identity, experts, experts, rat(-1, 10), 1000, 4);
    REQUIRE(violation.has_value());
    const auto& [f, g] = *violation;
    const UtilityProfile pf = apply_utility(identity, f);
    const UtilityProfile pg = apply_utility(identity, g);
    CHECK(min_expected(experts, pf) > min_expected(experts, pg));
    CHECK(max_expected(experts, pf) > max_expected(experts, pg));
    CHECK_FALSE(combined_value(identity, experts, experts, rat(-1, 10), f) >
                combined_value(identity, experts, experts, rat(-1, 10), g));

    // and across random incomplete specs
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        auto rng = trial_rng(273, trial);
        const HopeAndPrepare hp = sample_hp_spec(rng, identity, 3);
        bool incomplete = false;
        for (std::uint64_t probe = 0; probe < 50 && !incomplete; ++probe) {
            const UtilityProfile phi = sample_profile(rng, 3);
            incomplete = min_expected(hp.worst_case, phi) < max_expected(hp.best_case, phi);
        }
        if (!incomplete) continue;
        CHECK(find_monotonicity_violation(identity, hp.worst_case, hp.best_case, rat(-1, 10),
                                          1000, trial)
                  .has_value());
    }
}

TEST_CASE("completions satisfy weak-order totality on samples") {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto rng = trial_rng(274, trial);
        const HopeAndPrepare hp = sample_hp_spec(rng, identity, 3);
        const AlphaMeu ext = complete_with_alpha(hp, sample_rational_in_01(rng));
        const Act f = sample_act(rng, identity, 3);
        const Act g = sample_act(rng, identity, 3);
        CHECK(alpha_meu_compare(ext, f, g) != Comparison::Incomparable);
    }
}

TEST_CASE("completions keep certainty independence and monotonicity") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        auto rng = trial_rng(275, trial);
        const HopeAndPrepare hp = sample_hp_spec(rng, identity, 3);
        const PreferenceSpec ext{complete_with_alpha(hp, sample_rational_in_01(rng))};
        CHECK(check_axiom(ext, 3, 100, trial).verdict == AxiomVerdict::Pass);
        CHECK(check_axiom(ext, 5, 100, trial).verdict == AxiomVerdict::Pass);
    }
}

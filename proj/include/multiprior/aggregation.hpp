#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "multiprior/comparative.hpp"
#include "multiprior/core.hpp"
#include "multiprior/credal.hpp"
#include "multiprior/criteria.hpp"
#include "multiprior/sampling.hpp"

namespace multiprior {

// Panel of Bewley experts sharing the utility on outcomes; opinions differ
// only through the credal sets.
struct ExpertPanel {
    AffineUtility u;
    std::vector<CredalSet> experts;

    ExpertPanel(AffineUtility util, std::vector<CredalSet> sets)
        : u(std::move(util)), experts(std::move(sets)) {
        if (experts.empty()) throw std::invalid_argument("panel must have an expert");
        for (const auto& k : experts)
            if (k.states() != experts.front().states())
                throw std::invalid_argument("experts must share a state space");
    }

    std::size_t states() const { return experts.front().states(); }

    Bewley expert_spec(std::size_t i) const { return Bewley{u, experts.at(i)}; }
};

enum class PlannerMode { Bewley, ConcordantHp };

// Planner set = convex hull of the experts' union; the mode only selects
// which criterion the planner runs on that same set.
inline PreferenceSpec aggregate(const ExpertPanel& panel, PlannerMode mode) {
    CredalSet pooled = hull_union(panel.experts);
    if (mode == PlannerMode::Bewley) return Bewley{panel.u, std::move(pooled)};
    return HopeAndPrepare(panel.u, pooled, pooled);
}

namespace detail {

// The audited planner must be a Bewley or concordant hope-and-prepare
// criterion over the panel's utility; returns its credal set.
inline const CredalSet& planner_set(const ExpertPanel& panel, const PreferenceSpec& planner) {
    if (const auto* bw = std::get_if<Bewley>(&planner)) {
        require_shared_utility(panel.u, bw->u);
        if (bw->scenarios.states() != panel.states())
            throw std::invalid_argument("planner state count mismatch");
        return bw->scenarios;
    }
    if (const auto* hp = std::get_if<HopeAndPrepare>(&planner)) {
        require_shared_utility(panel.u, hp->u);
        if (hp->worst_case.states() != panel.states())
            throw std::invalid_argument("planner state count mismatch");
        if (!same_hull(hp->worst_case, hp->best_case))
            throw std::invalid_argument("planner hope-and-prepare criterion must be concordant");
        return hp->worst_case;
    }
    throw std::invalid_argument("planner must be a Bewley or concordant hope-and-prepare spec");
}

}  // namespace detail

struct ParetoAudit {
    bool certified = false;  // planner set inside the union hull
    SearchOutcome outcome = SearchOutcome::Inconclusive;
    std::vector<ActPair> witnesses;  // pairs all experts rank, planner does not
};

// Unanimity audit: whenever every expert ranks f above g, the planner must
// too. Holds exactly when the planner set is contained in the union hull; a
// planner generator escaping the hull yields a constructive witness.
inline ParetoAudit audit_pareto(const ExpertPanel& panel, const PreferenceSpec& planner,
                                std::uint64_t trials = 1000, std::uint64_t seed = 1) {
    const CredalSet& pset = detail::planner_set(panel, planner);
    const CredalSet hull = hull_union(panel.experts);
    const std::size_t n = panel.states();
    ParetoAudit audit;
    audit.certified = is_subset(pset, hull);

    const auto unanimous = [&](const Act& f, const Act& g) {
        for (std::size_t i = 0; i < panel.experts.size(); ++i)
            if (bewley_compare(panel.expert_spec(i), f, g) != Comparison::FirstStrict)
                return false;
        return true;
    };
    const auto violates = [&](const Act& f, const Act& g) {
        return unanimous(f, g) && compare(planner, f, g) != Comparison::FirstStrict;
    };

    if (!audit.certified) {
        for (const auto& p : pset.generators) {
            auto sep = separate_from_credal(hull, p);
            if (!sep) continue;
            // hull strictly above the level, escaping generator below: all
            // experts rank the separating act above the constant, the
            // planner's worst case dips under
            const auto lp = detail::hull_above_point(*sep);
            const Act f = act_from_utility_levels(panel.u, lp.profile);
            const Act x = act_from_utility_levels(panel.u, UtilityProfile(n, lp.level));
            if (violates(f, x)) {
                audit.witnesses.push_back(ActPair{f, x});
                break;
            }
        }
    }
    for (std::uint64_t t = 0; t < trials && audit.witnesses.empty(); ++t) {
        auto rng = trial_rng(seed, t);
        UtilityProfile base = sample_profile(rng, n);
        UtilityProfile bumped = base;
        for (auto& v : bumped) v += sample_rational_in_open_01(rng);
        const Act g = act_from_utility_levels(panel.u, base);
        const Act f = act_from_utility_levels(panel.u, bumped);  // statewise above g
        if (violates(f, g)) audit.witnesses.push_back(ActPair{f, g});
        const Act h = sample_act(rng, panel.u, n);
        if (audit.witnesses.empty() && violates(h, g)) audit.witnesses.push_back(ActPair{h, g});
    }
    if (!audit.witnesses.empty())
        audit.outcome = SearchOutcome::Violated;
    else
        audit.outcome = audit.certified ? SearchOutcome::Pass : SearchOutcome::Inconclusive;
    return audit;
}

struct CautionWitness {
    Act act;
    Act constant;
    std::size_t expert;  // the expert that is stuck while the planner is not
};

struct CautionAudit {
    bool certified = false;  // union hull inside the planner set
    SearchOutcome outcome = SearchOutcome::Inconclusive;
    std::vector<CautionWitness> witnesses;
};

// Incomparability audit: an act an expert cannot rank against a constant
// must stay unranked for the planner. Holds exactly when the union hull is
// contained in the planner set; an expert generator escaping the planner
// set yields a constructive witness through separation, probed at the
// expert's own range boundary.
inline CautionAudit audit_caution(const ExpertPanel& panel, const PreferenceSpec& planner,
                                  std::uint64_t trials = 1000, std::uint64_t seed = 1) {
    const CredalSet& pset = detail::planner_set(panel, planner);
    const std::size_t n = panel.states();
    CautionAudit audit;
    audit.certified = is_subset(hull_union(panel.experts), pset);

    const auto violates = [&](std::size_t expert, const Act& f, const Act& x) {
        return bewley_compare(panel.expert_spec(expert), f, x) == Comparison::Incomparable &&
               compare(planner, f, x) != Comparison::Incomparable;
    };

    if (!audit.certified) {
        for (std::size_t i = 0; i < panel.experts.size() && audit.witnesses.empty(); ++i) {
            for (const auto& p : panel.experts[i].generators) {
                auto sep = separate_from_credal(pset, p);
                if (!sep) continue;
                const UtilityProfile phi = sep->weights;
                const Act f = act_from_utility_levels(panel.u, phi);
                // the expert's attainable maximum exceeds the planner's
                // whole range, so that level is incomparable for the expert
                // yet strictly below the act for no one else
                const Rational level = max_expected(panel.experts[i], phi);
                const Act x = act_from_utility_levels(panel.u, UtilityProfile(n, level));
                if (violates(i, f, x)) {
                    audit.witnesses.push_back(CautionWitness{f, x, i});
                    break;
                }
            }
        }
    }
    for (std::uint64_t t = 0; t < trials && audit.witnesses.empty(); ++t) {
        auto rng = trial_rng(seed, t);
        const Act f = sample_act(rng, panel.u, n);
        const UtilityProfile phi = apply_utility(panel.u, f);
        for (std::size_t i = 0; i < panel.experts.size() && audit.witnesses.empty(); ++i) {
            // the discriminating constants sit at the expert's range
            // endpoints (incomparability is exactly that closed interval)
            const Rational lo = min_expected(panel.experts[i], phi);
            const Rational hi = max_expected(panel.experts[i], phi);
            const Rational mid = (lo + hi) / 2;
            for (const Rational& level : {lo, hi, mid}) {
                const Act x = act_from_utility_levels(panel.u, UtilityProfile(n, level));
                if (violates(i, f, x)) {
                    audit.witnesses.push_back(CautionWitness{f, x, i});
                    break;
                }
            }
        }
    }
    if (!audit.witnesses.empty())
        audit.outcome = SearchOutcome::Violated;
    else
        audit.outcome = audit.certified ? SearchOutcome::Pass : SearchOutcome::Inconclusive;
    return audit;
}

}  // namespace multiprior

#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multiprior/rational.hpp"

namespace multiprior {

// Finite set of states of the world, identified by unique labels.
struct StateSpace {
    std::vector<std::string> labels;

    explicit StateSpace(std::vector<std::string> names) : labels(std::move(names)) {
        if (labels.empty()) throw std::invalid_argument("state space must have at least one state");
        std::set<std::string_view> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw std::invalid_argument("duplicate state label '" + l + "'");
    }

    std::size_t size() const { return labels.size(); }

    std::size_t index(std::string_view label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        throw std::invalid_argument("unknown state label '" + std::string(label) + "'");
    }

    bool operator==(const StateSpace&) const = default;
};

// A consumption point in Q^d. Mixtures of outcomes stay rational, so the
// outcome space is closed under the act mixtures below.
struct Outcome {
    RatVec coords;

    explicit Outcome(RatVec c) : coords(std::move(c)) {
        if (coords.empty()) throw std::invalid_argument("outcome must have dimension >= 1");
    }

    std::size_t dimension() const { return coords.size(); }
    bool operator==(const Outcome&) const = default;
};

// Non-constant affine functional on outcomes: value(x) = weights . x + offset.
struct AffineUtility {
    RatVec weights;
    Rational offset;

    AffineUtility(RatVec w, Rational b) : weights(std::move(w)), offset(std::move(b)) {
        if (weights.empty()) throw std::invalid_argument("utility must have dimension >= 1");
        if (std::all_of(weights.begin(), weights.end(), [](const Rational& r) { return r == 0; }))
            throw std::invalid_argument("utility weights must not all be zero");
    }

    std::size_t dimension() const { return weights.size(); }

    Rational operator()(const Outcome& x) const {
        if (x.dimension() != dimension())
            throw std::invalid_argument("utility/outcome dimension mismatch");
        return dot(weights, x.coords) + offset;
    }

    bool operator==(const AffineUtility&) const = default;
};

// Two utilities represent the same preference over outcomes iff one is a
// positive affine transformation of the other; the canonical form drops the
// offset and scales weights by |first nonzero weight| (sign preserved, since
// only positive rescalings are allowed).
inline bool same_preference_scale(const AffineUtility& a, const AffineUtility& b) {
    if (a.dimension() != b.dimension()) return false;
    auto canonical = [](const AffineUtility& u) {
        RatVec w = u.weights;
        Rational lead = 0;
        for (const auto& x : w)
            if (x != 0) { lead = abs(x); break; }
        for (auto& x : w) x /= lead;
        return w;
    };
    return canonical(a) == canonical(b);
}

// An act assigns an outcome to each state; the vector is indexed in the
// order of the owning StateSpace's labels.
struct Act {
    std::vector<Outcome> outcomes;

    explicit Act(std::vector<Outcome> per_state) : outcomes(std::move(per_state)) {
        if (outcomes.empty()) throw std::invalid_argument("act must cover at least one state");
        for (const auto& o : outcomes)
            if (o.dimension() != outcomes.front().dimension())
                throw std::invalid_argument("act outcomes must share a dimension");
    }

    std::size_t states() const { return outcomes.size(); }
    std::size_t dimension() const { return outcomes.front().dimension(); }
    bool operator==(const Act&) const = default;
};

// Utility act: values[s] = u(f(s)).
using UtilityProfile = RatVec;

inline Act constant_act(const Outcome& x, std::size_t n_states) {
    if (n_states == 0) throw std::invalid_argument("constant act over empty state space");
    return Act(std::vector<Outcome>(n_states, x));
}

inline Act constant_act(const Outcome& x, const StateSpace& space) {
    return constant_act(x, space.size());
}

// Statewise convex combination alpha f + (1-alpha) g, exact.
inline Act mix_acts(const Act& f, const Act& g, const Rational& alpha) {
    if (f.states() != g.states() || f.dimension() != g.dimension())
        throw std::invalid_argument("mix_acts: acts live on different spaces");
    if (alpha < 0 || alpha > 1)
        throw std::invalid_argument("mix_acts: weight outside [0,1]");
    std::vector<Outcome> mixed;
    mixed.reserve(f.states());
    const Rational beta = 1 - alpha;
    for (std::size_t s = 0; s < f.states(); ++s) {
        RatVec c(f.dimension());
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] = alpha * f.outcomes[s].coords[k] + beta * g.outcomes[s].coords[k];
        mixed.emplace_back(std::move(c));
    }
    return Act(std::move(mixed));
}

inline UtilityProfile apply_utility(const AffineUtility& u, const Act& f) {
    if (u.dimension() != f.dimension())
        throw std::invalid_argument("apply_utility: dimension mismatch");
    UtilityProfile values;
    values.reserve(f.states());
    for (const auto& o : f.outcomes) values.push_back(u(o));
    return values;
}

// Strict dominance in every state.
inline bool statewise_dominates(const AffineUtility& u, const Act& f, const Act& g) {
    if (f.states() != g.states())
        throw std::invalid_argument("statewise_dominates: acts live on different spaces");
    for (std::size_t s = 0; s < f.states(); ++s)
        if (!(u(f.outcomes[s]) > u(g.outcomes[s]))) return false;
    return true;
}

// Builds an act realizing the requested utility levels: u is non-constant,
// so every level is attained along the weights direction.
inline Act act_from_utility_levels(const AffineUtility& u, const UtilityProfile& levels) {
    const Rational norm = dot(u.weights, u.weights);  // > 0 by non-constancy
    std::vector<Outcome> outs;
    outs.reserve(levels.size());
    for (const auto& t : levels) {
        const Rational scale = (t - u.offset) / norm;
        RatVec c(u.dimension());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = scale * u.weights[k];
        outs.emplace_back(std::move(c));
    }
    return Act(std::move(outs));
}

}  // namespace multiprior

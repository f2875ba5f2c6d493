#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "multiprior/core.hpp"
#include "multiprior/credal.hpp"
#include "multiprior/rational.hpp"

namespace multiprior {

// Three-valued verdict of a strict comparison; Indifferent is reported only
// by weak-order criteria (the alpha-MEU value order and the derived
// pessimistic/optimistic relations), never by the strict partial orders.
enum class Comparison { FirstStrict, SecondStrict, Incomparable, Indifferent };

inline const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::FirstStrict: return "first_strict";
        case Comparison::SecondStrict: return "second_strict";
        case Comparison::Incomparable: return "incomparable";
        case Comparison::Indifferent: return "indifferent";
    }
    return "?";
}

// Closed interval of expected-utility levels an act attains across a
// credal set.
struct EuRange {
    Rational lo, hi;
};

// --- preference specifications -------------------------------------------

// f above g iff f beats g both in the worst case over `worst_case` and in
// the best case over `best_case`. The two sets must intersect; the unchecked
// factory exists for analyzing improper representations where they do not.
struct HopeAndPrepare {
    AffineUtility u;
    CredalSet worst_case;  // pessimistic evaluations minimize over this set
    CredalSet best_case;   // optimistic evaluations maximize over this set

    HopeAndPrepare(AffineUtility util, CredalSet worst, CredalSet best)
        : u(std::move(util)), worst_case(std::move(worst)), best_case(std::move(best)) {
        if (worst_case.states() != best_case.states())
            throw std::invalid_argument("hope-and-prepare: set state counts differ");
        if (!intersects(worst_case, best_case))
            throw std::invalid_argument("hope-and-prepare: credal sets must intersect");
    }

    static HopeAndPrepare unchecked(AffineUtility util, CredalSet worst, CredalSet best) {
        if (worst.states() != best.states())
            throw std::invalid_argument("hope-and-prepare: set state counts differ");
        return HopeAndPrepare(std::move(util), std::move(worst), std::move(best), 0);
    }

  private:
    HopeAndPrepare(AffineUtility util, CredalSet worst, CredalSet best, int)
        : u(std::move(util)), worst_case(std::move(worst)), best_case(std::move(best)) {}
};

// f above g iff f's expected utility strictly exceeds g's under every
// scenario in the set.
struct Bewley {
    AffineUtility u;
    CredalSet scenarios;
};

// f above g iff f's worst case over `worst_case` strictly exceeds g's best
// case over `best_case`.
struct Twofold {
    AffineUtility u;
    CredalSet worst_case;
    CredalSet best_case;

    Twofold(AffineUtility util, CredalSet worst, CredalSet best)
        : u(std::move(util)), worst_case(std::move(worst)), best_case(std::move(best)) {
        if (worst_case.states() != best_case.states())
            throw std::invalid_argument("twofold: set state counts differ");
        if (!intersects(worst_case, best_case))
            throw std::invalid_argument("twofold: credal sets must intersect");
    }
};

// f above g iff f's worst case strictly exceeds g's worst case for every
// credal set in the class.
struct Nr {
    AffineUtility u;
    std::vector<CredalSet> scenario_class;

    Nr(AffineUtility util, std::vector<CredalSet> sets)
        : u(std::move(util)), scenario_class(std::move(sets)) {
        if (scenario_class.empty()) throw std::invalid_argument("nr: empty scenario class");
        for (const auto& k : scenario_class)
            if (k.states() != scenario_class.front().states())
                throw std::invalid_argument("nr: set state counts differ");
    }
};

// Complete criterion: alpha-weighted mix of the worst case over
// `worst_case` and the best case over `best_case`.
struct AlphaMeu {
    AffineUtility u;
    CredalSet worst_case;
    CredalSet best_case;
    Rational alpha;

    AlphaMeu(AffineUtility util, CredalSet worst, CredalSet best, Rational a)
        : u(std::move(util)),
          worst_case(std::move(worst)),
          best_case(std::move(best)),
          alpha(std::move(a)) {
        if (worst_case.states() != best_case.states())
            throw std::invalid_argument("alpha-meu: set state counts differ");
        if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha-meu: alpha outside [0,1]");
        if (!intersects(worst_case, best_case))
            throw std::invalid_argument("alpha-meu: credal sets must intersect");
    }
};

using PreferenceSpec = std::variant<HopeAndPrepare, Bewley, Twofold, Nr, AlphaMeu>;

inline const AffineUtility& utility_of(const PreferenceSpec& spec) {
    return std::visit([](const auto& s) -> const AffineUtility& { return s.u; }, spec);
}

inline std::size_t states_of(const PreferenceSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Bewley>)
                return s.scenarios.states();
            else if constexpr (std::is_same_v<T, Nr>)
                return s.scenario_class.front().states();
            else
                return s.worst_case.states();
        },
        spec);
}

// --- expected-utility extremes ---------------------------------------------

// Attained at a generator by linearity of p -> profile . p.
inline Rational min_expected(const CredalSet& k, const UtilityProfile& profile) {
    if (profile.size() != k.states())
        throw std::invalid_argument("min_expected: dimension mismatch");
    Rational best = dot(profile, k.generators.front().mass);
    for (std::size_t i = 1; i < k.size(); ++i) {
        Rational v = dot(profile, k.generators[i].mass);
        if (v < best) best = v;
    }
    return best;
}

inline Rational max_expected(const CredalSet& k, const UtilityProfile& profile) {
    if (profile.size() != k.states())
        throw std::invalid_argument("max_expected: dimension mismatch");
    Rational best = dot(profile, k.generators.front().mass);
    for (std::size_t i = 1; i < k.size(); ++i) {
        Rational v = dot(profile, k.generators[i].mass);
        if (v > best) best = v;
    }
    return best;
}

inline Rational min_eu(const AffineUtility& u, const CredalSet& k, const Act& f) {
    return min_expected(k, apply_utility(u, f));
}

inline Rational max_eu(const AffineUtility& u, const CredalSet& k, const Act& f) {
    return max_expected(k, apply_utility(u, f));
}

inline EuRange eu_range(const AffineUtility& u, const CredalSet& k, const Act& f) {
    const UtilityProfile profile = apply_utility(u, f);
    return EuRange{min_expected(k, profile), max_expected(k, profile)};
}

// --- comparisons ------------------------------------------------------------

namespace detail {

inline Comparison strict_pair(bool first, bool second) {
    if (first) return Comparison::FirstStrict;
    if (second) return Comparison::SecondStrict;
    return Comparison::Incomparable;
}

}  // namespace detail

inline Comparison hp_compare(const HopeAndPrepare& spec, const Act& f, const Act& g) {
    const UtilityProfile pf = apply_utility(spec.u, f);
    const UtilityProfile pg = apply_utility(spec.u, g);
    const Rational min_f = min_expected(spec.worst_case, pf);
    const Rational min_g = min_expected(spec.worst_case, pg);
    const Rational max_f = max_expected(spec.best_case, pf);
    const Rational max_g = max_expected(spec.best_case, pg);
    return detail::strict_pair(min_f > min_g && max_f > max_g, min_g > min_f && max_g > max_f);
}

inline Comparison bewley_compare(const Bewley& spec, const Act& f, const Act& g) {
    const UtilityProfile pf = apply_utility(spec.u, f);
    const UtilityProfile pg = apply_utility(spec.u, g);
    bool first = true, second = true;
    for (const auto& p : spec.scenarios.generators) {
        const Rational vf = dot(pf, p.mass);
        const Rational vg = dot(pg, p.mass);
        if (!(vf > vg)) first = false;
        if (!(vg > vf)) second = false;
    }
    return detail::strict_pair(first, second);
}

inline Comparison twofold_compare(const Twofold& spec, const Act& f, const Act& g) {
    const UtilityProfile pf = apply_utility(spec.u, f);
    const UtilityProfile pg = apply_utility(spec.u, g);
    const bool first = min_expected(spec.worst_case, pf) > max_expected(spec.best_case, pg);
    const bool second = min_expected(spec.worst_case, pg) > max_expected(spec.best_case, pf);
    return detail::strict_pair(first, second);
}

inline Comparison nr_compare(const Nr& spec, const Act& f, const Act& g) {
    const UtilityProfile pf = apply_utility(spec.u, f);
    const UtilityProfile pg = apply_utility(spec.u, g);
    bool first = true, second = true;
    for (const auto& k : spec.scenario_class) {
        const Rational vf = min_expected(k, pf);
        const Rational vg = min_expected(k, pg);
        if (!(vf > vg)) first = false;
        if (!(vg > vf)) second = false;
    }
    return detail::strict_pair(first, second);
}

inline Rational alpha_meu_value(const AlphaMeu& spec, const Act& f) {
    const UtilityProfile p = apply_utility(spec.u, f);
    return spec.alpha * min_expected(spec.worst_case, p) +
           (1 - spec.alpha) * max_expected(spec.best_case, p);
}

inline Comparison alpha_meu_compare(const AlphaMeu& spec, const Act& f, const Act& g) {
    const Rational vf = alpha_meu_value(spec, f);
    const Rational vg = alpha_meu_value(spec, g);
    if (vf > vg) return Comparison::FirstStrict;
    if (vg > vf) return Comparison::SecondStrict;
    return Comparison::Indifferent;
}

// Derived weak orders from the representation: the pessimistic relation
// compares worst cases, the optimistic one best cases. Equality is reported
// as Indifferent (they are negatively transitive).
inline Comparison pessimistic_compare(const HopeAndPrepare& spec, const Act& f, const Act& g) {
    const Rational vf = min_eu(spec.u, spec.worst_case, f);
    const Rational vg = min_eu(spec.u, spec.worst_case, g);
    if (vf > vg) return Comparison::FirstStrict;
    if (vg > vf) return Comparison::SecondStrict;
    return Comparison::Indifferent;
}

inline Comparison optimistic_compare(const HopeAndPrepare& spec, const Act& f, const Act& g) {
    const Rational vf = max_eu(spec.u, spec.best_case, f);
    const Rational vg = max_eu(spec.u, spec.best_case, g);
    if (vf > vg) return Comparison::FirstStrict;
    if (vg > vf) return Comparison::SecondStrict;
    return Comparison::Indifferent;
}

// Asymmetric strong set order on ranges: strictly higher at both ends.
inline Comparison strong_set_strict(const EuRange& rf, const EuRange& rg) {
    return detail::strict_pair(rf.lo > rg.lo && rf.hi > rg.hi, rg.lo > rf.lo && rg.hi > rf.hi);
}

inline Comparison compare(const PreferenceSpec& spec, const Act& f, const Act& g) {
    return std::visit(
        [&](const auto& s) -> Comparison {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, HopeAndPrepare>) return hp_compare(s, f, g);
            else if constexpr (std::is_same_v<T, Bewley>) return bewley_compare(s, f, g);
            else if constexpr (std::is_same_v<T, Twofold>) return twofold_compare(s, f, g);
            else if constexpr (std::is_same_v<T, Nr>) return nr_compare(s, f, g);
            else return alpha_meu_compare(s, f, g);
        },
        spec);
}

// u-levels of the constant acts the criterion cannot rank against f. This is
// a closed interval for all five criteria; for the weak-order criteria it
// degenerates to the point where the value ties. Everything the axioms
// harness needs about comparisons with constants derives from it:
//   f above const x  iff u(x) < lo,   const x above f  iff u(x) > hi.
struct ConstantFence {
    Rational lo, hi;  // lo <= hi always (the two sides are swapped if needed)
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

inline ConstantFence constant_fence(const PreferenceSpec& spec, const Act& f) {
    const UtilityProfile p = apply_utility(utility_of(spec), f);
    Rational lo, hi;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, HopeAndPrepare> || std::is_same_v<T, Twofold>) {
                lo = min_expected(s.worst_case, p);
                hi = max_expected(s.best_case, p);
            } else if constexpr (std::is_same_v<T, Bewley>) {
                lo = min_expected(s.scenarios, p);
                hi = max_expected(s.scenarios, p);
            } else if constexpr (std::is_same_v<T, Nr>) {
                lo = min_expected(s.scenario_class.front(), p);
                hi = lo;
                for (const auto& k : s.scenario_class) {
                    const Rational v = min_expected(k, p);
                    if (v < lo) lo = v;
                    if (v > hi) hi = v;
                }
            } else {
                lo = alpha_meu_value(s, f);
                hi = lo;
            }
        },
        spec);
    if (hi < lo) std::swap(lo, hi);  // improper (disjoint-set) representations
    return ConstantFence{std::move(lo), std::move(hi)};
}

// --- materialized relation over an act list --------------------------------

// Strict relation as a digraph on act indices: edge i -> j iff the i-th act
// is ranked strictly above the j-th.
struct ActOrder {
    std::size_t node_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline ActOrder partial_order(const PreferenceSpec& spec, const std::vector<Act>& acts) {
    for (const auto& a : acts)
        if (a.states() != acts.front().states() || a.dimension() != acts.front().dimension())
            throw std::invalid_argument("partial_order: acts live on different spaces");
    ActOrder order;
    order.node_count = acts.size();
    for (std::size_t i = 0; i < acts.size(); ++i)
        for (std::size_t j = i + 1; j < acts.size(); ++j) {
            switch (compare(spec, acts[i], acts[j])) {
                case Comparison::FirstStrict: order.edges.emplace_back(i, j); break;
                case Comparison::SecondStrict: order.edges.emplace_back(j, i); break;
                default: break;
            }
        }
    return order;
}

// Removes edges implied by transitivity; on a strict partial order this is
// the Hasse diagram.
inline ActOrder transitive_reduction(const ActOrder& order) {
    const std::size_t n = order.node_count;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& [i, j] : order.edges) reach[i][j] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    ActOrder reduced;
    reduced.node_count = n;
    for (const auto& [i, j] : order.edges) {
        bool implied = false;
        for (std::size_t k = 0; k < n && !implied; ++k)
            if (k != i && k != j && reach[i][k] && reach[k][j]) implied = true;
        if (!implied) reduced.edges.emplace_back(i, j);
    }
    return reduced;
}

}  // namespace multiprior

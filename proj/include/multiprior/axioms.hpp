#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multiprior/comparative.hpp"
#include "multiprior/core.hpp"
#include "multiprior/credal.hpp"
#include "multiprior/criteria.hpp"
#include "multiprior/rational.hpp"
#include "multiprior/sampling.hpp"

namespace multiprior {

enum class AxiomVerdict { Pass, Violated, Inconclusive };

inline const char* to_string(AxiomVerdict v) {
    switch (v) {
        case AxiomVerdict::Pass: return "pass";
        case AxiomVerdict::Violated: return "violated";
        case AxiomVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

// Replayable counterexample: the acts, constant levels and mixture weights
// that together violate the checked property.
struct AxiomWitness {
    std::vector<Act> acts;
    std::vector<Rational> constants;
    std::vector<Rational> weights;
    std::string note;
};

struct AxiomReport {
    int axiom = 0;
    AxiomVerdict verdict = AxiomVerdict::Inconclusive;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<AxiomWitness> witness;
};

// --- exact mixture alpha sets ----------------------------------------------

// Interval of mixture weights; closed ends may occur only at the boundary
// of [0,1], where the ambient set is still relatively open.
struct AlphaInterval {
    Rational lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;
};

using AlphaIntervalSet = std::vector<AlphaInterval>;

inline bool interval_set_contains(const AlphaIntervalSet& set, const Rational& a) {
    for (const auto& iv : set) {
        if (a < iv.lo || a > iv.hi) continue;
        if (a == iv.lo && !iv.lo_closed) continue;
        if (a == iv.hi && !iv.hi_closed) continue;
        return true;
    }
    return false;
}

// Open in the subspace topology of [0,1]: interior endpoints excluded and
// no isolated points.
inline bool relatively_open(const AlphaIntervalSet& set) {
    for (const auto& iv : set) {
        if (!(iv.lo < iv.hi)) return false;
        if (iv.lo_closed && iv.lo != 0) return false;
        if (iv.hi_closed && iv.hi != 1) return false;
    }
    return true;
}

namespace detail {

inline void push_root(std::vector<Rational>& roots, const Rational& at_one,
                      const Rational& at_zero, const Rational& target) {
    // value(a) = a * at_one + (1-a) * at_zero
    if (at_one == at_zero) return;
    const Rational root = (target - at_zero) / (at_one - at_zero);
    if (root >= 0 && root <= 1) roots.push_back(root);
}

// Every alpha where an elementary linear comparison deciding the criterion
// can change sign; between consecutive breakpoints the verdict is constant.
inline std::vector<Rational> mixture_breakpoints(const PreferenceSpec& spec,
                                                 const UtilityProfile& pf,
                                                 const UtilityProfile& pg,
                                                 const UtilityProfile& ph) {
    std::vector<Rational> roots;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, HopeAndPrepare> || std::is_same_v<T, Twofold>) {
                const Rational lo_h = min_expected(s.worst_case, ph);
                const Rational hi_h = max_expected(s.best_case, ph);
                const Rational worst_target = std::is_same_v<T, HopeAndPrepare> ? lo_h : hi_h;
                const Rational best_target = std::is_same_v<T, HopeAndPrepare> ? hi_h : lo_h;
                for (const auto& c : s.worst_case.generators)
                    push_root(roots, dot(pf, c.mass), dot(pg, c.mass), worst_target);
                for (const auto& d : s.best_case.generators)
                    push_root(roots, dot(pf, d.mass), dot(pg, d.mass), best_target);
            } else if constexpr (std::is_same_v<T, Bewley>) {
                for (const auto& p : s.scenarios.generators)
                    push_root(roots, dot(pf, p.mass), dot(pg, p.mass), dot(ph, p.mass));
            } else if constexpr (std::is_same_v<T, Nr>) {
                for (const auto& k : s.scenario_class) {
                    const Rational target = min_expected(k, ph);
                    for (const auto& c : k.generators)
                        push_root(roots, dot(pf, c.mass), dot(pg, c.mass), target);
                }
            } else {  // AlphaMeu: combined value over active generator pairs
                const Rational target = s.alpha * min_expected(s.worst_case, ph) +
                                        (1 - s.alpha) * max_expected(s.best_case, ph);
                for (const auto& c : s.worst_case.generators)
                    for (const auto& d : s.best_case.generators) {
                        const Rational at_one =
                            s.alpha * dot(pf, c.mass) + (1 - s.alpha) * dot(pf, d.mass);
                        const Rational at_zero =
                            s.alpha * dot(pg, c.mass) + (1 - s.alpha) * dot(pg, d.mass);
                        push_root(roots, at_one, at_zero, target);
                    }
            }
        },
        spec);
    return roots;
}

// Exact scan: the predicate is evaluated at every breakpoint and on every
// open segment between consecutive ones (via the segment midpoint), then
// maximal true runs are assembled into intervals.
template <typename Predicate>
AlphaIntervalSet mixture_alpha_scan(const PreferenceSpec& spec, const Act& f, const Act& g,
                                    const Act& h, Predicate&& holds_at) {
    const AffineUtility& u = utility_of(spec);
    std::vector<Rational> points =
        mixture_breakpoints(spec, apply_utility(u, f), apply_utility(u, g), apply_utility(u, h));
    points.push_back(Rational(0));
    points.push_back(Rational(1));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // atoms alternate: point, segment, point, segment, ..., point
    struct Atom {
        Rational lo, hi;  // lo == hi for points
        bool truth;
    };
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < points.size(); ++i) {
        atoms.push_back({points[i], points[i], holds_at(points[i])});
        if (i + 1 < points.size()) {
            const Rational mid = (points[i] + points[i + 1]) / 2;
            atoms.push_back({points[i], points[i + 1], holds_at(mid)});
        }
    }
    AlphaIntervalSet set;
    std::size_t i = 0;
    while (i < atoms.size()) {
        if (!atoms[i].truth) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < atoms.size() && atoms[j + 1].truth) ++j;
        AlphaInterval iv;
        iv.lo = atoms[i].lo;
        iv.hi = atoms[j].hi;
        iv.lo_closed = atoms[i].lo == atoms[i].hi;  // run starts at a true point
        iv.hi_closed = atoms[j].lo == atoms[j].hi;
        set.push_back(std::move(iv));
        i = j + 1;
    }
    return set;
}

}  // namespace detail

// {alpha in [0,1] : alpha f + (1-alpha) g  is ranked above h}, exact.
inline AlphaIntervalSet mixture_preference_alpha_set(const PreferenceSpec& spec, const Act& f,
                                                     const Act& g, const Act& h) {
    return detail::mixture_alpha_scan(spec, f, g, h, [&](const Rational& a) {
        return compare(spec, mix_acts(f, g, a), h) == Comparison::FirstStrict;
    });
}

// {alpha in [0,1] : h is ranked above alpha f + (1-alpha) g}, exact.
inline AlphaIntervalSet mixture_dispreference_alpha_set(const PreferenceSpec& spec, const Act& f,
                                                        const Act& g, const Act& h) {
    return detail::mixture_alpha_scan(spec, f, g, h, [&](const Rational& a) {
        return compare(spec, h, mix_acts(f, g, a)) == Comparison::FirstStrict;
    });
}

// Perfect hedge under the scalar-outcome harness convention (identity
// utility on Q): the equal-weight mixture of f and its complement is
// constant at level k.
inline Act complementary_pair(const Act& f, const Rational& k) {
    if (f.dimension() != 1)
        throw std::invalid_argument("complementary_pair: scalar-outcome acts only");
    std::vector<Outcome> outs;
    outs.reserve(f.states());
    for (const auto& o : f.outcomes) outs.push_back(Outcome({2 * k - o.coords[0]}));
    return Act(std::move(outs));
}

namespace detail {

inline Act complementary_act(const AffineUtility& u, const Act& f, const Rational& k) {
    UtilityProfile levels = apply_utility(u, f);
    for (auto& v : levels) v = 2 * k - v;
    return act_from_utility_levels(u, levels);
}

inline bool unranked(Comparison c) {
    return c == Comparison::Incomparable || c == Comparison::Indifferent;
}

struct CheckContext {
    const PreferenceSpec& spec;
    const AffineUtility& u;
    std::size_t n;
    std::uint64_t budget;
    std::uint64_t seed;

    Act const_act(const Rational& level) const {
        return act_from_utility_levels(u, UtilityProfile(n, level));
    }
    bool first(const Act& a, const Act& b) const {
        return compare(spec, a, b) == Comparison::FirstStrict;
    }
};

inline AxiomReport run_axiom(int id, const CheckContext& ctx,
                             const std::function<std::optional<AxiomWitness>(std::mt19937_64&)>&
                                 trial,
                             std::uint64_t* hypothesis_hits = nullptr) {
    AxiomReport report;
    report.axiom = id;
    report.trials = ctx.budget;
    report.seed = ctx.seed;
    for (std::uint64_t t = 0; t < ctx.budget; ++t) {
        auto rng = trial_rng(ctx.seed, t);
        if (auto witness = trial(rng)) {
            report.verdict = AxiomVerdict::Violated;
            report.witness = std::move(*witness);
            return report;
        }
    }
    if (hypothesis_hits && *hypothesis_hits == 0)
        report.verdict = AxiomVerdict::Inconclusive;
    else
        report.verdict = AxiomVerdict::Pass;
    return report;
}

}  // namespace detail

// Executable checks of the order axioms for any of the five criteria.
// Randomized counterexample search with constructed hypotheses where the
// quantifier pattern allows it; exact interval computations replace
// topological arguments. A report is Inconclusive when the axiom's
// hypothesis never fired within the budget.
inline AxiomReport check_axiom(const PreferenceSpec& spec, int axiom, std::uint64_t budget = 1000,
                               std::uint64_t seed = 1);

namespace detail {

inline std::optional<AxiomWitness> axiom1_trial(const CheckContext& ctx, std::mt19937_64& rng) {
    const Act f = sample_act(rng, ctx.u, ctx.n, 6);
    const Act g = sample_act(rng, ctx.u, ctx.n, 6);
    const Act h = sample_act(rng, ctx.u, ctx.n, 6);
    const auto witness = [&](const char* note, std::vector<Act> acts) {
        AxiomWitness w;
        w.acts = std::move(acts);
        w.note = note;
        return w;
    };
    if (!unranked(compare(ctx.spec, f, f))) return witness("irreflexivity", {f});
    const Comparison fg = compare(ctx.spec, f, g);
    const Comparison gf = compare(ctx.spec, g, f);
    if ((fg == Comparison::FirstStrict) != (gf == Comparison::SecondStrict))
        return witness("asymmetry", {f, g});
    if (fg == Comparison::FirstStrict && compare(ctx.spec, g, h) == Comparison::FirstStrict &&
        compare(ctx.spec, f, h) != Comparison::FirstStrict)
        return witness("transitivity", {f, g, h});
    // restriction to constants: non-trivial, negatively transitive
    const Rational a = sample_rational(rng, 6), b = sample_rational(rng, 6),
                   c = sample_rational(rng, 6);
    const Act xa = ctx.const_act(a), xb = ctx.const_act(b), xc = ctx.const_act(c);
    if (!ctx.first(ctx.const_act(Rational(1)), ctx.const_act(Rational(0))))
        return witness("non-triviality on constants", {});
    if (!ctx.first(xa, xb) && !ctx.first(xb, xc) && ctx.first(xa, xc)) {
        AxiomWitness w = witness("negative transitivity on constants", {});
        w.constants = {a, b, c};
        return w;
    }
    return std::nullopt;
}

inline std::optional<AxiomWitness> axiom2_trial(const CheckContext& ctx, std::mt19937_64& rng) {
    const Act f = sample_act(rng, ctx.u, ctx.n, 6);
    const Act g = sample_act(rng, ctx.u, ctx.n, 6);
    const Act h = sample_act(rng, ctx.u, ctx.n, 6);
    for (const bool preference : {true, false}) {
        const AlphaIntervalSet set = preference
                                         ? mixture_preference_alpha_set(ctx.spec, f, g, h)
                                         : mixture_dispreference_alpha_set(ctx.spec, f, g, h);
        const auto holds = [&](const Rational& a) {
            const Act mixed = mix_acts(f, g, a);
            return preference ? ctx.first(mixed, h) : ctx.first(h, mixed);
        };
        const auto witness = [&](const Rational& at, const char* note) {
            AxiomWitness w;
            w.acts = {f, g, h};
            w.weights = {at};
            w.note = note;
            return w;
        };
        if (!relatively_open(set)) {
            AxiomWitness w;
            w.acts = {f, g, h};
            w.note = preference ? "preference alpha set not relatively open"
                                : "dispreference alpha set not relatively open";
            return w;
        }
        for (const auto& iv : set) {
            if (!holds((iv.lo + iv.hi) / 2)) return witness((iv.lo + iv.hi) / 2, "interior misclassified");
            if (!iv.lo_closed && holds(iv.lo)) return witness(iv.lo, "open endpoint attained");
            if (!iv.hi_closed && holds(iv.hi)) return witness(iv.hi, "open endpoint attained");
        }
    }
    return std::nullopt;
}

inline std::optional<AxiomWitness> axiom3_trial(const CheckContext& ctx, std::mt19937_64& rng) {
    const Act f = sample_act(rng, ctx.u, ctx.n, 6);
    const Act g = sample_act(rng, ctx.u, ctx.n, 6);
    const Rational level = sample_rational(rng, 6);
    const Act x = ctx.const_act(level);
    const Rational a = sample_rational_in_open_01(rng);
    if (compare(ctx.spec, f, g) !=
        compare(ctx.spec, mix_acts(f, x, a), mix_acts(g, x, a))) {
        AxiomWitness w;
        w.acts = {f, g};
        w.constants = {level};
        w.weights = {a};
        w.note = "certainty independence";
        return w;
    }
    return std::nullopt;
}

inline std::optional<AxiomWitness> axiom4_trial(const CheckContext& ctx, std::mt19937_64& rng,
                                                std::uint64_t& hits) {
    const Act f = sample_act(rng, ctx.u, ctx.n, 6);
    const Act g = sample_act(rng, ctx.u, ctx.n, 6);
    const Act mid = mix_acts(f, g, rat(1, 2));
    const ConstantFence ff = constant_fence(ctx.spec, f);
    const ConstantFence fg = constant_fence(ctx.spec, g);
    // constant below both upper sets / above both lower sets
    const Rational below = (ff.lo < fg.lo ? ff.lo : fg.lo) - sample_rational_in_open_01(rng);
    const Rational above = (ff.hi > fg.hi ? ff.hi : fg.hi) + sample_rational_in_open_01(rng);
    const Act xb = ctx.const_act(below), xa = ctx.const_act(above);
    if (ctx.first(f, xb) && ctx.first(g, xb)) {
        ++hits;
        if (!ctx.first(mid, xb)) {
            AxiomWitness w;
            w.acts = {f, g, mid};
            w.constants = {below};
            w.note = "upper contour set not closed under equal-weight mixing";
            return w;
        }
    }
    if (ctx.first(xa, f) && ctx.first(xa, g)) {
        ++hits;
        if (!ctx.first(xa, mid)) {
            AxiomWitness w;
            w.acts = {f, g, mid};
            w.constants = {above};
            w.note = "lower contour set not closed under equal-weight mixing";
            return w;
        }
    }
    return std::nullopt;
}

inline std::optional<AxiomWitness> axiom5_trial(const CheckContext& ctx, std::mt19937_64& rng) {
    UtilityProfile base = sample_profile(rng, ctx.n, 6);
    UtilityProfile bumped = base;
    for (auto& v : bumped) v += sample_rational_in_open_01(rng);
    const Act g = act_from_utility_levels(ctx.u, base);
    const Act f = act_from_utility_levels(ctx.u, bumped);
    if (!ctx.first(f, g)) {
        AxiomWitness w;
        w.acts = {f, g};
        w.note = "statewise-dominating act not ranked strictly above";
        return w;
    }
    return std::nullopt;
}

inline std::optional<AxiomWitness> axiom6_trial(const CheckContext& ctx, std::mt19937_64& rng,
                                                std::uint64_t& hits) {
    Act f = sample_act(rng, ctx.u, ctx.n, 6);
    const Act g = sample_act(rng, ctx.u, ctx.n, 6);
    const ConstantFence fg = constant_fence(ctx.spec, g);
    // every other trial, squeeze f toward g's fence centre so the
    // containment hypothesis actually fires
    if (rng() % 2 == 0 && fg.lo < fg.hi) {
        const Act centre = ctx.const_act((fg.lo + fg.hi) / 2);
        Rational t = rat(1, 2);
        for (int k = 0; k < 6; ++k) {
            const Act squeezed = mix_acts(f, centre, t);
            const ConstantFence fs = constant_fence(ctx.spec, squeezed);
            if (fg.lo <= fs.lo && fs.hi <= fg.hi) {
                f = squeezed;
                break;
            }
            t /= 2;
        }
    }
    const ConstantFence ff = constant_fence(ctx.spec, f);
    const bool hypothesis = fg.lo <= ff.lo && ff.hi <= fg.hi;  // {x : f join x} inside {x : g join x}
    if (!hypothesis) return std::nullopt;
    ++hits;
    if (!unranked(compare(ctx.spec, f, g))) {
        AxiomWitness w;
        w.acts = {f, g};
        w.constants = {ff.lo, ff.hi, fg.lo, fg.hi};
        w.note = "f,g comparable although every constant unranked against f is unranked against g";
        return w;
    }
    return std::nullopt;
}

inline std::optional<AxiomWitness> axiom7_trial(const CheckContext& ctx, std::mt19937_64& rng,
                                                std::uint64_t& hits) {
    const Act f = sample_act(rng, ctx.u, ctx.n, 6);
    const Act g = sample_act(rng, ctx.u, ctx.n, 6);
    // candidate evidence constants sit at the fence boundaries
    const ConstantFence ff = constant_fence(ctx.spec, f);
    const ConstantFence fg = constant_fence(ctx.spec, g);
    const Act x = ctx.const_act(ff.hi);
    const Act y = ctx.const_act(fg.lo);
    const bool evidence_x = unranked(compare(ctx.spec, f, x)) && ctx.first(x, g);
    const bool evidence_y = unranked(compare(ctx.spec, g, y)) && ctx.first(f, y);
    if (!(evidence_x && evidence_y)) return std::nullopt;
    ++hits;
    if (!ctx.first(f, g)) {
        AxiomWitness w;
        w.acts = {f, g};
        w.constants = {ff.hi, fg.lo};
        w.note = "two aligned pieces of evidence do not yield the strict ranking";
        return w;
    }
    return std::nullopt;
}

// Complementary-pair axioms. `pessimistic` selects the direction:
// (f above mixture) forcing (mixture above g), or the converse.
inline std::optional<AxiomWitness> complementary_trial(const CheckContext& ctx,
                                                       std::mt19937_64& rng, bool pessimistic,
                                                       std::uint64_t& hits) {
    const Act f = sample_act(rng, ctx.u, ctx.n, 6);
    const UtilityProfile pf = apply_utility(ctx.u, f);
    // a hypothesis-friendly level plus a fully random one
    Rational friendly;
    if (pessimistic) {
        friendly = constant_fence(ctx.spec, f).lo - sample_rational_in_open_01(rng);
    } else {
        Rational lo = pf.front();
        for (const auto& v : pf)
            if (v < lo) lo = v;
        friendly = lo - sample_rational_in_open_01(rng);
    }
    const Rational random_level = sample_rational(rng, 6);
    for (const Rational& k : {friendly, random_level}) {
        const Act g = complementary_act(ctx.u, f, k);
        const Act mixture = ctx.const_act(k);  // = (1/2) f + (1/2) g up to utility
        const bool hypothesis =
            pessimistic ? ctx.first(f, mixture) : ctx.first(mixture, g);
        if (!hypothesis) continue;
        ++hits;
        const bool conclusion =
            pessimistic ? ctx.first(mixture, g) : ctx.first(f, mixture);
        if (!conclusion) {
            AxiomWitness w;
            w.acts = {f, g};
            w.constants = {k};
            w.weights = {rat(1, 2)};
            w.note = pessimistic ? "hedge preferred to one complement only"
                                 : "complement comparison fails the hedge step";
            return w;
        }
    }
    return std::nullopt;
}

// Constructive counterexample for the complementary-pair axioms on a
// hope-and-prepare spec whose containment fails: a generator escaping the
// other set yields, through separation, a complementary pair violating the
// axiom. Returns a verified witness or nothing.
inline std::optional<AxiomWitness> complementary_witness(const HopeAndPrepare& hp,
                                                         bool pessimistic) {
    const CredalSet& escaping = pessimistic ? hp.best_case : hp.worst_case;
    const CredalSet& container = pessimistic ? hp.worst_case : hp.best_case;
    const std::size_t n = hp.worst_case.states();
    const PreferenceSpec spec{hp};
    for (const auto& p : escaping.generators) {
        auto sep = separate_from_credal(container, p);
        if (!sep) continue;
        const auto lp = hull_above_point(*sep);
        UtilityProfile half(n);
        for (std::size_t s = 0; s < n; ++s) half[s] = lp.profile[s] / 2;
        const Rational k = lp.level / 2;
        const Act f = act_from_utility_levels(hp.u, half);
        const Act g = complementary_act(hp.u, f, k);
        const Act mixture = act_from_utility_levels(hp.u, UtilityProfile(n, k));
        const bool hypothesis = pessimistic
                                    ? compare(spec, f, mixture) == Comparison::FirstStrict
                                    : compare(spec, mixture, g) == Comparison::FirstStrict;
        const bool conclusion = pessimistic
                                    ? compare(spec, mixture, g) == Comparison::FirstStrict
                                    : compare(spec, f, mixture) == Comparison::FirstStrict;
        if (hypothesis && !conclusion) {
            AxiomWitness w;
            w.acts = {f, g};
            w.constants = {k};
            w.weights = {rat(1, 2)};
            w.note = "separating hedge pair";
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline AxiomReport check_axiom(const PreferenceSpec& spec, int axiom, std::uint64_t budget,
                               std::uint64_t seed) {
    const detail::CheckContext ctx{spec, utility_of(spec), states_of(spec), budget, seed};
    std::uint64_t hits = 0;
    switch (axiom) {
        case 1:
            return detail::run_axiom(1, ctx, [&](std::mt19937_64& rng) {
                return detail::axiom1_trial(ctx, rng);
            });
        case 2:
            return detail::run_axiom(2, ctx, [&](std::mt19937_64& rng) {
                return detail::axiom2_trial(ctx, rng);
            });
        case 3:
            return detail::run_axiom(3, ctx, [&](std::mt19937_64& rng) {
                return detail::axiom3_trial(ctx, rng);
            });
        case 4:
            return detail::run_axiom(4, ctx, [&](std::mt19937_64& rng) {
                return detail::axiom4_trial(ctx, rng, hits);
            }, &hits);
        case 5:
            return detail::run_axiom(5, ctx, [&](std::mt19937_64& rng) {
                return detail::axiom5_trial(ctx, rng);
            });
        case 6:
            return detail::run_axiom(6, ctx, [&](std::mt19937_64& rng) {
                return detail::axiom6_trial(ctx, rng, hits);
            }, &hits);
        case 7:
            return detail::run_axiom(7, ctx, [&](std::mt19937_64& rng) {
                return detail::axiom7_trial(ctx, rng, hits);
            }, &hits);
        case 8:
        case 9: {
            const bool pessimistic = axiom == 8;
            if (const auto* hp = std::get_if<HopeAndPrepare>(&spec)) {
                const bool contained = pessimistic ? is_subset(hp->best_case, hp->worst_case)
                                                   : is_subset(hp->worst_case, hp->best_case);
                if (!contained) {
                    if (auto w = detail::complementary_witness(*hp, pessimistic)) {
                        AxiomReport report;
                        report.axiom = axiom;
                        report.trials = budget;
                        report.seed = seed;
                        report.verdict = AxiomVerdict::Violated;
                        report.witness = std::move(*w);
                        return report;
                    }
                }
            }
            return detail::run_axiom(axiom, ctx, [&](std::mt19937_64& rng) {
                return detail::complementary_trial(ctx, rng, pessimistic, hits);
            }, &hits);
        }
        default: throw std::invalid_argument("check_axiom: axiom id must be 1..9");
    }
}

// Joint run of the two complementary-pair axioms against their containment
// certificates; a disagreement between the search verdict and the exact
// containment is an implementation bug and throws.
struct ConcordanceCheck {
    AxiomReport hedge_pessimistic;  // axiom 8
    AxiomReport hedge_optimistic;   // axiom 9
    bool best_within_worst = false;
    bool worst_within_best = false;
};

inline ConcordanceCheck check_concordance_axioms(const HopeAndPrepare& hp,
                                                 std::uint64_t budget = 1000,
                                                 std::uint64_t seed = 1) {
    ConcordanceCheck check;
    const PreferenceSpec spec{hp};
    check.hedge_pessimistic = check_axiom(spec, 8, budget, seed);
    check.hedge_optimistic = check_axiom(spec, 9, budget, seed);
    check.best_within_worst = is_subset(hp.best_case, hp.worst_case);
    check.worst_within_best = is_subset(hp.worst_case, hp.best_case);
    const auto agrees = [](const AxiomReport& r, bool contained) {
        return contained ? r.verdict != AxiomVerdict::Violated
                         : r.verdict == AxiomVerdict::Violated;
    };
    if (!agrees(check.hedge_pessimistic, check.best_within_worst) ||
        !agrees(check.hedge_optimistic, check.worst_within_best))
        throw std::logic_error("hedge-axiom verdicts disagree with containment certificates");
    return check;
}

// Properties of the derived pessimistic/optimistic relations: the constant
// fence is a non-empty interval, constants around it are ranked in order,
// and the strict comparison factors through the two one-sided relations.
inline AxiomReport check_derived_relations(const HopeAndPrepare& hp, std::uint64_t budget = 1000,
                                           std::uint64_t seed = 1) {
    const PreferenceSpec spec{hp};
    const detail::CheckContext ctx{spec, hp.u, states_of(spec), budget, seed};
    return detail::run_axiom(0, ctx, [&](std::mt19937_64& rng) -> std::optional<AxiomWitness> {
        const Act f = sample_act(rng, hp.u, ctx.n, 6);
        const auto witness = [&](const char* note, std::vector<Rational> constants) {
            AxiomWitness w;
            w.acts = {f};
            w.constants = std::move(constants);
            w.note = note;
            return w;
        };
        const Rational lo = min_eu(hp.u, hp.worst_case, f);
        const Rational hi = max_eu(hp.u, hp.best_case, f);
        if (lo > hi) return witness("empty incomparability interval", {lo, hi});
        const Rational x_level = (lo + hi) / 2;
        const Rational y_level = lo - sample_rational_in_open_01(rng);
        const Rational z_level = hi + sample_rational_in_open_01(rng);
        const Act x = ctx.const_act(x_level), y = ctx.const_act(y_level),
                  z = ctx.const_act(z_level);
        if (!detail::unranked(compare(spec, f, x)))
            return witness("interval constant is ranked against f", {x_level});
        if (!ctx.first(f, y)) return witness("f not above a constant below its fence", {y_level});
        if (!ctx.first(z, f)) return witness("f not below a constant above its fence", {z_level});
        if (!(ctx.first(z, x) && ctx.first(x, y)))
            return witness("surrounding constants not ordered", {x_level, y_level, z_level});
        const Act g = sample_act(rng, hp.u, ctx.n, 6);
        const bool joint = pessimistic_compare(hp, f, g) == Comparison::FirstStrict &&
                           optimistic_compare(hp, f, g) == Comparison::FirstStrict;
        if ((compare(spec, f, g) == Comparison::FirstStrict) != joint) {
            AxiomWitness w;
            w.acts = {f, g};
            w.note = "strict comparison does not factor through the one-sided relations";
            return w;
        }
        return std::nullopt;
    });
}

}  // namespace multiprior

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "multiprior/core.hpp"
#include "multiprior/rational.hpp"
#include "multiprior/simplex.hpp"

namespace multiprior {

// Probability distribution on a finite state space.
struct ProbabilityVector {
    RatVec mass;

    explicit ProbabilityVector(RatVec m) : mass(std::move(m)) {
        if (mass.empty()) throw std::invalid_argument("probability vector must be non-empty");
        Rational total = 0;
        for (const auto& p : mass) {
            if (p < 0) throw std::invalid_argument("probability entries must be >= 0");
            total += p;
        }
        if (total != 1) throw std::invalid_argument("probability entries must sum to exactly 1");
    }

    std::size_t states() const { return mass.size(); }
    bool operator==(const ProbabilityVector&) const = default;
};

// Convex hull of finitely many probability vectors (V-representation only;
// every operation below reduces to exact feasibility on the generators).
struct CredalSet {
    std::vector<ProbabilityVector> generators;

    explicit CredalSet(std::vector<ProbabilityVector> gens) : generators(std::move(gens)) {
        if (generators.empty()) throw std::invalid_argument("credal set must have a generator");
        for (const auto& g : generators)
            if (g.states() != generators.front().states())
                throw std::invalid_argument("credal set generators must share a state count");
    }

    std::size_t states() const { return generators.front().states(); }
    std::size_t size() const { return generators.size(); }
};

namespace detail {

inline Matrix generator_rows(const CredalSet& k) {
    Matrix rows;
    rows.reserve(k.size());
    for (const auto& g : k.generators) rows.push_back(g.mass);
    return rows;
}

}  // namespace detail

// Membership of p in the hull: p = sum_i lambda_i g_i with lambda >= 0.
// The weights summing to 1 is implied since p and all generators sum to 1,
// but the row is kept so malformed callers fail loudly.
inline bool contains_point(const CredalSet& k, const ProbabilityVector& p) {
    if (p.states() != k.states())
        throw std::invalid_argument("contains_point: dimension mismatch");
    const std::size_t n = k.states();
    const std::size_t g = k.size();
    Matrix a(n + 1, RatVec(g, Rational(0)));
    RatVec b(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < g; ++j) a[i][j] = k.generators[j].mass[i];
        b[i] = p.mass[i];
    }
    for (std::size_t j = 0; j < g; ++j) a[n][j] = 1;
    b[n] = 1;
    return solve_equality_feasibility(std::move(a), std::move(b)).has_value();
}

// Hull containment: holds iff every generator of `inner` is in `outer`.
inline bool is_subset(const CredalSet& inner, const CredalSet& outer) {
    if (inner.states() != outer.states())
        throw std::invalid_argument("is_subset: dimension mismatch");
    for (const auto& g : inner.generators)
        if (!contains_point(outer, g)) return false;
    return true;
}

inline bool same_hull(const CredalSet& a, const CredalSet& b) {
    return is_subset(a, b) && is_subset(b, a);
}

// Non-empty intersection: one joint feasibility problem over both
// generator sets, sum lambda_i a_i = sum mu_j b_j with both sets of
// weights non-negative and summing to 1.
inline bool intersects(const CredalSet& a, const CredalSet& b) {
    if (a.states() != b.states())
        throw std::invalid_argument("intersects: dimension mismatch");
    const std::size_t n = a.states();
    const std::size_t ga = a.size();
    const std::size_t gb = b.size();
    Matrix m(n + 2, RatVec(ga + gb, Rational(0)));
    RatVec rhs(n + 2, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ga; ++j) m[i][j] = a.generators[j].mass[i];
        for (std::size_t j = 0; j < gb; ++j) m[i][ga + j] = -b.generators[j].mass[i];
        rhs[i] = 0;
    }
    for (std::size_t j = 0; j < ga; ++j) m[n][j] = 1;
    rhs[n] = 1;
    for (std::size_t j = 0; j < gb; ++j) m[n + 1][ga + j] = 1;
    rhs[n + 1] = 1;
    return solve_equality_feasibility(std::move(m), std::move(rhs)).has_value();
}

// Drops generators lying in the hull of the remaining ones; the result
// spans the same hull with an inclusion-minimal generator list.
inline CredalSet prune_generators(const CredalSet& k) {
    std::vector<ProbabilityVector> kept = k.generators;
    for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
        std::vector<ProbabilityVector> rest;
        rest.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) rest.push_back(kept[j]);
        if (contains_point(CredalSet(rest), kept[i]))
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return CredalSet(std::move(kept));
}

// Convex hull of a union, with redundant generators pruned.
inline CredalSet hull_union(const std::vector<CredalSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("hull_union: empty list");
    std::vector<ProbabilityVector> all;
    for (const auto& k : sets) {
        if (k.states() != sets.front().states())
            throw std::invalid_argument("hull_union: dimension mismatch");
        all.insert(all.end(), k.generators.begin(), k.generators.end());
    }
    return prune_generators(CredalSet(std::move(all)));
}

// All probability measures on the state space: hull of the Dirac vectors.
inline CredalSet full_simplex(std::size_t n_states) {
    if (n_states == 0) throw std::invalid_argument("full_simplex: empty state space");
    std::vector<ProbabilityVector> dirac;
    dirac.reserve(n_states);
    for (std::size_t i = 0; i < n_states; ++i) {
        RatVec mass(n_states, Rational(0));
        mass[i] = 1;
        dirac.emplace_back(std::move(mass));
    }
    return CredalSet(std::move(dirac));
}

inline CredalSet full_simplex(const StateSpace& space) { return full_simplex(space.size()); }

// Strictly separating utility profile: phi . p <= threshold on `k` while
// phi . q >= threshold + 1. Engaged by the comparative/axioms witness
// constructions; empty iff q is in the hull (dual route to contains_point).
inline std::optional<SeparatingAffine> separate_from_credal(const CredalSet& k,
                                                            const ProbabilityVector& q) {
    if (q.states() != k.states())
        throw std::invalid_argument("separate_from_credal: dimension mismatch");
    return separate_point_from_hull(detail::generator_rows(k), q.mass);
}

inline std::optional<SeparatingAffine> separate_credal_sets(const CredalSet& above,
                                                            const CredalSet& below) {
    if (above.states() != below.states())
        throw std::invalid_argument("separate_credal_sets: dimension mismatch");
    return separate_hulls(detail::generator_rows(above), detail::generator_rows(below));
}

}  // namespace multiprior

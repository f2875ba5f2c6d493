#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multiprior/rational.hpp"

namespace multiprior {

using Matrix = std::vector<RatVec>;

// Phase-I simplex over exact rationals, Bland's rule for both the entering
// and the leaving variable, so it terminates on every input. Decides whether
// A x = b admits x >= 0 and returns such an x when it does. Sizes here are
// tiny (a dozen rows/columns), no effort is spent on sparsity.
inline std::optional<RatVec> solve_equality_feasibility(Matrix a, RatVec b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw std::invalid_argument("feasibility: A and b row counts differ");
    const std::size_t n = m == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("feasibility: ragged matrix");
    if (m == 0) return RatVec(n, Rational(0));

    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }

    // Tableau columns: n structural + m artificial + rhs. Row m is the
    // Phase-I objective (minimize the sum of artificials), stored negated so
    // a negative reduced cost means "improving".
    const std::size_t cols = n + m + 1;
    Matrix t(m + 1, RatVec(cols, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational sum = 0;
        for (std::size_t i = 0; i < m; ++i) sum += t[i][j];
        t[m][j] = -sum;
    }
    {
        Rational sum = 0;
        for (std::size_t i = 0; i < m; ++i) sum += t[i][cols - 1];
        t[m][cols - 1] = -sum;
    }

    const auto pivot = [&](std::size_t pr, std::size_t pc) {
        const Rational p = t[pr][pc];
        for (auto& v : t[pr]) v /= p;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            const Rational factor = t[i][pc];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[pr][j];
        }
        basis[pr] = pc;
    };

    while (true) {
        std::size_t enter = cols;  // Bland: lowest improving column
        for (std::size_t j = 0; j + 1 < cols; ++j)
            if (t[m][j] < 0) { enter = j; break; }
        if (enter == cols) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            const Rational lhs = t[i][cols - 1] * t[leave][enter];
            const Rational rhs = t[leave][cols - 1] * t[i][enter];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
        // the Phase-I objective is bounded below by zero, so an improving
        // column always admits a pivot
        if (leave == m) throw std::logic_error("phase-I simplex: unbounded improving column");
        pivot(leave, enter);
    }

    if (t[m][cols - 1] != 0) return std::nullopt;  // residual artificial mass

    RatVec x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][cols - 1];
    return x;
}

// Affine functional weights . p <=> threshold used as a certificate that a
// point (or a whole hull) lies strictly on one side of another hull.
struct SeparatingAffine {
    RatVec weights;
    Rational threshold;
};

namespace detail {

// Feasibility formulation of strict separation: find (w, c) with
// w . below_k <= c for every k and w . above_k >= c + 1 for every k.
// Free variables are split into positive parts; inequalities get slacks.
inline std::optional<SeparatingAffine> separate(const Matrix& above, const Matrix& below,
                                                std::size_t n) {
    const std::size_t rows = above.size() + below.size();
    // columns: w+ (n), w- (n), c+ , c-, slack per row
    const std::size_t k = 2 * n + 2 + rows;
    Matrix a(rows, RatVec(k, Rational(0)));
    RatVec b(rows, Rational(0));
    std::size_t r = 0;
    for (const auto& point : below) {  // w.p - c + s = 0
        for (std::size_t j = 0; j < n; ++j) {
            a[r][j] = point[j];
            a[r][n + j] = -point[j];
        }
        a[r][2 * n] = -1;
        a[r][2 * n + 1] = 1;
        a[r][2 * n + 2 + r] = 1;
        b[r] = 0;
        ++r;
    }
    for (const auto& point : above) {  // w.p - c - s = 1
        for (std::size_t j = 0; j < n; ++j) {
            a[r][j] = point[j];
            a[r][n + j] = -point[j];
        }
        a[r][2 * n] = -1;
        a[r][2 * n + 1] = 1;
        a[r][2 * n + 2 + r] = -1;
        b[r] = 1;
        ++r;
    }
    auto x = solve_equality_feasibility(std::move(a), std::move(b));
    if (!x) return std::nullopt;
    SeparatingAffine sep;
    sep.weights.resize(n);
    for (std::size_t j = 0; j < n; ++j) sep.weights[j] = (*x)[j] - (*x)[n + j];
    sep.threshold = (*x)[2 * n] - (*x)[2 * n + 1];
    return sep;
}

}  // namespace detail

// Strict separation of q from conv(points): weights . p <= threshold on the
// hull and weights . q >= threshold + 1. Empty result iff q is in the hull.
inline std::optional<SeparatingAffine> separate_point_from_hull(const Matrix& points,
                                                                const RatVec& q) {
    if (points.empty()) throw std::invalid_argument("separate: empty hull");
    for (const auto& p : points)
        if (p.size() != q.size()) throw std::invalid_argument("separate: dimension mismatch");
    return detail::separate({q}, points, q.size());
}

// Strict separation of two hulls: weights . a >= threshold + 1 on `above`,
// weights . b <= threshold on `below`. Empty result iff the hulls intersect.
inline std::optional<SeparatingAffine> separate_hulls(const Matrix& above, const Matrix& below) {
    if (above.empty() || below.empty()) throw std::invalid_argument("separate: empty hull");
    const std::size_t n = above.front().size();
    for (const auto& p : above)
        if (p.size() != n) throw std::invalid_argument("separate: dimension mismatch");
    for (const auto& p : below)
        if (p.size() != n) throw std::invalid_argument("separate: dimension mismatch");
    return detail::separate(above, below, n);
}

}  // namespace multiprior

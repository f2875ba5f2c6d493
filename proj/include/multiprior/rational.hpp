#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multiprior {

// Exact rational scalar. Every quantity in the library is one of these;
// there is no floating point and no tolerance anywhere.
using Rational = mpq_class;

using RatVec = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d" with an optional leading minus, nothing else.
// In particular no whitespace, no floats, no empty numerator.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    std::size_t pos = text[0] == '-' ? 1 : 0;
    if (pos == text.size()) fail();
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] == '/') {
            if (slash != std::string_view::npos || i == pos || i + 1 == text.size()) fail();
            slash = i;
        } else if (text[i] < '0' || text[i] > '9') {
            fail();
        }
    }
    if (slash != std::string_view::npos) {
        bool all_zero = true;
        for (std::size_t i = slash + 1; i < text.size(); ++i)
            if (text[i] != '0') all_zero = false;
        if (all_zero) fail();
    }
    Rational q(std::string(text), 10);
    q.canonicalize();
    return q;
}

// Canonical form: "n" when the denominator is 1, otherwise "n/d" with d > 0.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace multiprior

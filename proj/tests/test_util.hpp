#pragma once

#include <random>

#include "rational.hpp"

namespace qtcomb::testutil {

// Small random rationals with |num|, den <= 20.  Values 0 and +/-1 are
// excluded for draws destined to be q, t, or a base raised to negative powers.
inline Rational random_rational(std::mt19937_64& rng, bool avoid_degenerate = true) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (avoid_degenerate && (r.is_zero() || r.is_one() || r == Rational(-1))) continue;
        return r;
    }
}

inline QTPoint random_point(std::mt19937_64& rng) {
    return QTPoint(random_rational(rng), random_rational(rng));
}

} // namespace qtcomb::testutil

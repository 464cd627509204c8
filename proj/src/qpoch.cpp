#include "qpoch.hpp"

namespace qtcomb {

Rational qpoch(const Rational& a, const Rational& q, long m) {
    if (m < 0) throw usage_error("q-Pochhammer subscript must be nonnegative");
    Rational acc(1);
    Rational aq = a;
    for (long k = 0; k < m; ++k) {
        acc *= Rational(1) - aq;
        aq *= q;
    }
    return acc;
}

Rational qt_poch(const Rational& a, const QTPoint& pt, const Partition& lam, int n) {
    if (lam.length() > n) throw usage_error("qt_poch requires length(lam) <= n");
    Rational acc(1);
    for (int i = 1; i <= lam.length(); ++i)
        acc *= qpoch(a * pt.qt_pow(0, 1 - i), pt.q, lam.part(i));
    return acc;
}

Rational qpoch(const QTPoint& pt, const Rational& c, long eq, long et, long m,
               bool as_denominator) {
    Rational acc(1);
    if (m >= 0) {
        for (long k = 0; k < m; ++k) {
            if (as_denominator) {
                acc *= denom_factor(pt, c, eq + k, et);
            } else {
                acc *= one_minus(pt, c, eq + k, et);
            }
        }
    } else {
        for (long k = 1; k <= -m; ++k)
            acc /= denom_factor(pt, c, eq - k, et);
    }
    return acc;
}

Rational qt_poch(const QTPoint& pt, const Rational& c, long eq, long et,
                 const Partition& lam, bool as_denominator) {
    Rational acc(1);
    for (int i = 1; i <= lam.length(); ++i)
        acc *= qpoch(pt, c, eq, et + 1 - i, lam.part(i), as_denominator);
    return acc;
}

Rational qt_poch_ratio(const QTPoint& pt, const Rational& c, long eq, long et,
                       const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu))
        throw usage_error("pochhammer quotient requires rowwise containment");
    Rational acc(1);
    for (int i = 1; i <= lam.length(); ++i)
        for (long k = mu.part(i); k < lam.part(i); ++k)
            acc *= one_minus(pt, c, eq + k, et + 1 - i);
    return acc;
}

} // namespace qtcomb

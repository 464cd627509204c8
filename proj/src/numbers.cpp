#include "numbers.hpp"

#include <string>

#include "tableau.hpp"
#include "wfun.hpp"

namespace qtcomb {

namespace {

void require_size(std::size_t got, int n, const char* what) {
    if (static_cast<int>(got) != n)
        throw usage_error(std::string(what) + ": vector length must equal n");
}

// 1 / prod_i (1 - q t^{n-i})^{e_i}, the denominator powers shared by the
// bracket family.
Rational row_denominators(const Partition& mu, int n, const QTPoint& pt) {
    Rational acc(1);
    for (int i = 1; i <= mu.length(); ++i)
        acc *= ipow(denom_factor(pt, 1, 1, n - i), -mu.part(i));
    return acc;
}

// Straight w at an arbitrary point.  The branching recursion divides by skew
// factors that can hit removable zeros when entries sit on the q^a t^b
// lattice (points like q^z t^{delta} with trailing entries 1 do); the tableau
// sum is polynomial in the variables, so it evaluates wherever the value is
// finite.  Prefer the recursion, fall back on a vanishing denominator.
Rational straight_w(const std::vector<Rational>& point, const Partition& mu,
                    const QTPoint& pt) {
    try {
        return w_multi_branch(point, mu, Partition(), pt);
    } catch (const denominator_vanishes&) {
        return w_multi_tableau(point, mu, pt);
    }
}

} // namespace

Rational binom_at(const std::vector<Rational>& point, const Partition& mu, int n,
                  const QTPoint& pt) {
    require_size(point.size(), n, "binom");
    for (const Rational& x : point)
        if (x.is_zero()) throw usage_error("binom: evaluation point entries must be nonzero");
    if (mu.length() > n) return Rational(0);

    Rational pre = pt.qt_pow(mu.weight(), 2 * mu.n_stat() + (1 - static_cast<long>(n)) * mu.weight());
    pre /= qt_poch(pt, 1, 1, n - 1, mu, true);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long m = mu.part(i) - mu.part(j);
            if (m == 0) continue;
            pre *= qpoch(pt, 1, 1, j - i, m);
            pre /= qpoch(pt, 1, 1, j - i - 1, m, true);
        }
    return pre * straight_w(point, mu, pt);
}

Rational binom(const ExponentVector& z, const Partition& mu, int n, const QTPoint& pt) {
    require_size(z.size(), n, "binom");
    std::vector<Rational> point;
    point.reserve(z.size());
    for (int i = 1; i <= n; ++i) point.push_back(pt.qt_pow(z[i - 1], n - i));
    return binom_at(point, mu, n, pt);
}

Rational binom_comb(const ExponentVector& z, const Partition& mu, int n, const QTPoint& pt) {
    require_size(z.size(), n, "binom");
    if (mu.length() > n) return Rational(0);

    Rational pre(1);
    for (Cell s : cells(mu)) {
        const CellStats cs = cell_stats(mu, s);
        pre /= denom_factor(pt, 1, cs.arm + 1, cs.leg);
    }
    const CellWeight weight = [&](Cell s, int e) {
        const CellStats cs = cell_stats(mu, s);
        return pt.qt_pow(0, cs.leg_co + 1 - e) * one_minus(pt, 1, z[e - 1] - cs.arm_co, cs.leg_co);
    };
    return pre * tableau_sum(mu, n, pt, weight);
}

Rational binom_rect(const ExponentVector& z, long k, int n, const QTPoint& pt) {
    require_size(z.size(), n, "binom");
    if (k < 0) throw usage_error("binom: rectangle height must be nonnegative");
    Rational acc(1);
    for (int i = 1; i <= n; ++i) {
        acc *= qpoch(pt, 1, 1 - k + z[i - 1], n - i, k);
        acc /= qpoch(pt, 1, 1, n - i, k, true);
    }
    return acc;
}

Rational bracket(const ExponentVector& z, const ScaleVector& s, const Partition& mu, int n,
                 const QTPoint& pt) {
    require_size(z.size(), n, "bracket");
    require_size(s.size(), n, "bracket");
    for (const Rational& si : s)
        if (si.is_zero()) throw usage_error("bracket: scale entries must be nonzero");
    if (mu.length() > n) return Rational(0);

    Rational pre = pt.qt_pow(mu.weight(), 0) * row_denominators(mu, n, pt);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long m = mu.part(i) - mu.part(j);
            if (m == 0) continue;
            pre *= qpoch(pt, 1, 0, j - i, m);
            pre /= qpoch(pt, 1, 0, j - i + 1, m, true);
        }
    std::vector<Rational> point;
    point.reserve(s.size());
    for (int i = 1; i <= n; ++i) point.push_back(s[i - 1] * pt.qt_pow(z[i - 1], n - i));
    return pre * straight_w(point, mu, pt);
}

Rational bracket_comb(const ExponentVector& z, const ScaleVector& s, const Partition& mu,
                      int n, const QTPoint& pt) {
    require_size(z.size(), n, "bracket");
    require_size(s.size(), n, "bracket");
    for (const Rational& si : s)
        if (si.is_zero()) throw usage_error("bracket: scale entries must be nonzero");
    if (mu.length() > n) return Rational(0);

    Rational pre(1);
    for (Cell c : cells(mu)) {
        const CellStats cs = cell_stats(mu, c);
        pre /= denom_factor(pt, 1, 1, n - 1 - cs.leg_co);
        pre *= one_minus(pt, 1, cs.arm, cs.leg + 1);
        pre /= denom_factor(pt, 1, cs.arm_co, n - cs.leg_co);
    }
    const CellWeight weight = [&](Cell c, int e) {
        const CellStats cs = cell_stats(mu, c);
        return pt.qt_pow(0, -cs.leg_co + n - e) *
               one_minus(pt, s[e - 1], z[e - 1] - cs.arm_co, cs.leg_co);
    };
    return pre * tableau_sum(mu, n, pt, weight);
}

Rational bracket_xbar(long x, const Partition& mu, int n, const QTPoint& pt) {
    if (mu.length() > n) return Rational(0);
    Rational acc = row_denominators(mu, n, pt);
    for (int i = 1; i <= mu.length(); ++i)
        acc *= qpoch(pt.qt_pow(x, i - 1), pt.q.reciprocal(), mu.part(i));
    return acc;
}

Rational qt_number(const ExponentVector& z, int n, const QTPoint& pt) {
    require_size(z.size(), n, "qt_number");
    Rational acc(1);
    for (int i = 1; i <= n; ++i) {
        acc *= one_minus(pt, 1, z[i - 1], n - i);
        acc /= denom_factor(pt, 1, 1, n - i);
    }
    return acc;
}

Rational mu_factorial(const Partition& mu, int n, const QTPoint& pt) {
    if (mu.length() > n) return Rational(0);
    Rational acc = pt.qt_pow(0, -2 * mu.n_stat() - (1 - static_cast<long>(n)) * mu.weight());
    acc *= row_denominators(mu, n, pt);
    for (int i = 1; i <= mu.length(); ++i) acc *= qpoch(pt, 1, 1, n - i, mu.part(i));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long m = mu.part(i) - mu.part(j);
            if (m == 0) continue;
            acc *= qpoch(pt, 1, 0, j - i, m) * qpoch(pt, 1, 1, j - i - 1, m);
            acc /= qpoch(pt, 1, 0, j - i + 1, m, true) * qpoch(pt, 1, 1, j - i, m, true);
        }
    return acc;
}

Rational rect_factorial(long k, int n, const QTPoint& pt) {
    if (k < 0) throw usage_error("rect_factorial: height must be nonnegative");
    Rational acc(1);
    for (int i = 1; i <= n; ++i) {
        acc *= qpoch(pt, 1, 1, n - i, k);
        acc *= ipow(denom_factor(pt, 1, 1, n - i), -k);
    }
    return acc;
}

Rational catalan(const Partition& lam, int n, const QTPoint& pt) {
    if (lam.length() != n)
        throw usage_error("catalan: shape must have exactly n parts");
    Rational acc(1);
    ExponentVector twice(n);
    for (int i = 1; i <= n; ++i) {
        twice[i - 1] = 2 * lam.part(i);
        acc *= one_minus(pt, 1, 1, n - i);
        acc /= denom_factor(pt, 1, lam.part(i) + 1, n - i);
    }
    return acc * binom(twice, lam, n, pt);
}

Rational catalan_comb(const Partition& lam, int n, const QTPoint& pt) {
    if (lam.length() != n)
        throw usage_error("catalan: shape must have exactly n parts");
    // Correction product over the one-column shape: row i carries colengths
    // a' = 0, l' = i-1.
    Rational acc(1);
    ExponentVector twice(n);
    for (int i = 1; i <= n; ++i) {
        twice[i - 1] = 2 * lam.part(i);
        acc *= one_minus(pt, 1, 1, n - i);
        acc /= denom_factor(pt, 1, 1 + lam.part(i), n - i);
    }
    return acc * binom_comb(twice, lam, n, pt);
}

Rational catalan_rect(long k, int n, const QTPoint& pt) {
    if (k < 1) throw usage_error("catalan: rectangle height must be positive");
    Rational acc(1);
    for (int i = 1; i <= n; ++i) {
        acc *= qpoch(pt, 1, 2 + k, n - i, k - 1);
        acc /= qpoch(pt, 1, 2, n - i, k - 1, true);
    }
    return acc;
}

Rational rising_bracket(long x, const Partition& lam, int n, const QTPoint& pt) {
    return bracket_xbar(x, lam, n, pt.reciprocal());
}

Rational lah_explicit(const Partition& lam, const Partition& mu, int n, const QTPoint& pt) {
    if (lam.length() > n) throw usage_error("lah: outer shape has more than n parts");
    if (!lam.contains(mu)) return Rational(0);

    const int sign = (lam.weight() + mu.weight()) % 2 == 0 ? 1 : -1;
    Rational acc = Rational(sign) *
                   pt.qt_pow(mu.weight() - lam.weight(), lam.n_stat() - mu.n_stat());
    for (int i = 1; i <= lam.length(); ++i) {
        const long e = mu.part(i) - lam.part(i);
        if (e != 0) acc *= ipow(denom_factor(pt, 1, 1, n - i), e);
    }
    acc *= qt_poch_ratio(pt, 1, 0, 2 * (n - 1), lam, mu);

    ExponentVector z(n);
    for (int i = 1; i <= n; ++i) z[i - 1] = lam.part(i);
    return acc * binom(z, mu, n, pt);
}

Rational lah_comb(const Partition& lam, const Partition& mu, int n, const QTPoint& pt) {
    if (!lam.contains(mu)) return Rational(0);

    Rational pre(1);
    for (Cell c : skew_cells(lam, mu)) {
        const long ac = c.col - 1, lc = c.row - 1;
        pre *= pt.qt_pow(0, lc) * one_minus(pt, 1, ac, 2 * (n - 1) - lc);
        pre /= -pt.q * denom_factor(pt, 1, 1, n - 1 - lc);
    }
    for (Cell c : cells(mu)) {
        const CellStats cs = cell_stats(mu, c);
        pre /= denom_factor(pt, 1, cs.arm + 1, cs.leg);
    }
    const CellWeight weight = [&](Cell c, int e) {
        const CellStats cs = cell_stats(mu, c);
        return pt.qt_pow(0, cs.leg_co + 1 - e) *
               one_minus(pt, 1, lam.part(e) - cs.arm_co, cs.leg_co);
    };
    return pre * tableau_sum(mu, n, pt, weight);
}

bool lah_expansion_check(const Partition& lam, int n, const QTPoint& pt,
                         const std::vector<long>& xs) {
    if (lam.length() > n) throw usage_error("lah: outer shape has more than n parts");
    if (xs.empty()) throw usage_error("lah: need at least one sample exponent");

    // Connection coefficients do not depend on x; compute them once.
    const std::vector<Partition> subs = subpartitions(lam);
    std::vector<Rational> weighted;
    weighted.reserve(subs.size());
    for (const Partition& mu : subs) {
        const int sign = mu.weight() % 2 == 0 ? 1 : -1;
        const Rational c = Rational(sign) *
                           pt.qt_pow(-mu.weight() + 2 * mu.n_conj_stat(),
                                     -mu.n_stat() + 2 * (n - 1) * mu.weight());
        weighted.push_back(c * lah_explicit(lam, mu, n, pt));
    }

    const int sign = lam.weight() % 2 == 0 ? 1 : -1;
    const Rational scale =
        Rational(sign) * pt.qt_pow(-lam.weight(), lam.n_stat()) * row_denominators(lam, n, pt);
    for (const long x : xs) {
        const Rational lhs = scale * qt_poch(pt, 1, x, 2 * (n - 1), lam);
        Rational rhs(0);
        for (std::size_t i = 0; i < subs.size(); ++i)
            rhs += weighted[i] * bracket_xbar(x, subs[i], n, pt);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace qtcomb

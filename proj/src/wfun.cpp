#include "wfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace qtcomb {

Rational h_factor_ambient(const Partition& lam, const Partition& mu, const QTPoint& pt,
                          const Rational& b, int n) {
    if (lam.length() > n || mu.length() > n)
        throw usage_error("h_factor_ambient: ambient size smaller than a shape");
    Rational acc(1);
    // Pair terms, i < j.  Subscript m = mu_{j-1} - lam_j.
    for (int j = 2; j <= n; ++j) {
        const long m = mu.part(j - 1) - lam.part(j);
        if (m == 0) continue;
        for (int i = 1; i < j; ++i) {
            const long li = lam.part(i), mi = mu.part(i), lj = lam.part(j);
            const long mj1 = mu.part(j - 1);
            acc = acc * qpoch(pt, Rational(1), mi - mj1, j - i, m);
            acc = acc * qpoch(pt, b, li + lj, 3 - j - i, m);
            acc = acc / qpoch(pt, Rational(1), mi - mj1 + 1, j - i - 1, m, true);
            acc = acc / qpoch(pt, b, li + lj + 1, 2 - j - i, m, true);
            acc = acc * qpoch(pt, Rational(1), li - mj1 + 1, j - i - 1, m);
            acc = acc / qpoch(pt, Rational(1), li - mj1, j - i, m, true);
        }
    }
    // Tail terms with a column gap, i < j-1, including the phantom column j = n+1.
    for (int j = 3; j <= n + 1; ++j) {
        const long m = mu.part(j - 1) - lam.part(j);
        if (m == 0) continue;
        for (int i = 1; i <= j - 2; ++i) {
            const long mi = mu.part(i), lj = lam.part(j);
            acc = acc * qpoch(pt, b, mi + lj + 1, 1 - j - i, m);
            acc = acc / qpoch(pt, b, mi + lj, 2 - j - i, m, true);
        }
    }
    return acc;
}

Rational h_factor(const Partition& lam, const Partition& mu, const QTPoint& pt,
                  const Rational& b) {
    if (!is_horizontal_strip(lam, mu))
        throw not_a_strip("h_factor: not a horizontal strip: " + lam.str() + " / " + mu.str());
    // Every subscript mu_{j-1} - lam_j vanishes once j - 1 > length(mu), so the
    // product is constant from this ambient on.
    return h_factor_ambient(lam, mu, pt, b, mu.length() + 1);
}

Rational w_single(const Rational& x, const Partition& lam, const Partition& mu,
                  const QTPoint& pt) {
    if (x.is_zero()) throw usage_error("w_single: x must be nonzero");
    if (!is_horizontal_strip(lam, mu)) return Rational(0);
    const long d = lam.weight() - mu.weight();
    Rational acc = ipow(-pt.q / x, -d);
    acc = acc * pt.qt_pow(mu.n_conj_stat() - lam.n_conj_stat(), 0);
    acc = acc * h_factor(lam, mu, pt, Rational(0));
    acc = acc * qt_poch(pt, x.reciprocal(), 0, 0, lam);
    acc = acc / qt_poch(pt, x.reciprocal(), 0, 0, mu, true);
    return acc;
}

Rational w_single_comb(const Rational& x, const Partition& lam, const Partition& mu,
                       const QTPoint& pt) {
    if (!is_horizontal_strip(lam, mu)) return Rational(0);
    Rational acc = psi_strip(lam, mu, pt);
    for (Cell s : skew_cells(lam, mu)) {
        const long ac = s.col - 1, lc = s.row - 1;
        acc = acc * pt.qt_pow(-1, -lc) * one_minus(pt, x, -ac, lc);
    }
    return acc;
}

Rational w_multi_branch(const std::vector<Rational>& z, const Partition& lam,
                        const Partition& mu, const QTPoint& pt) {
    const int m = static_cast<int>(z.size());
    if (m == 0) return lam == mu ? Rational(1) : Rational(0);
    if (!lam.contains(mu)) return Rational(0);
    if (m == 1) return w_single(z[0], lam, mu, pt);

    // suffix(sigma, j) = w_{sigma/mu}(z_j, ..., z_{m-1}).  The intermediate
    // shape nu only has to contain mu; nu/mu splits into strips further down.
    std::map<std::pair<std::string, int>, Rational> memo;
    std::function<Rational(const Partition&, int)> suffix =
        [&](const Partition& sigma, int j) -> Rational {
        if (j == m - 1) return w_single(z[j], sigma, mu, pt);
        const auto key = std::make_pair(sigma.str(), j);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int l = m - 1 - j;
        const Rational y = z[j] * pt.qt_pow(0, -l);
        Rational total(0);
        for (const Partition& nu : interlacing_predecessors(sigma)) {
            if (!nu.contains(mu)) continue;
            const Rational head = w_single(y, sigma, nu, pt);
            if (head.is_zero()) continue;
            const Rational tail = suffix(nu, j + 1);
            if (tail.is_zero()) continue;
            total += pt.qt_pow(0, static_cast<long>(l) * (sigma.weight() - nu.weight())) * head * tail;
        }
        memo.emplace(key, total);
        return total;
    };
    return suffix(lam, 0);
}

Rational w_multi_tableau(const std::vector<Rational>& z, const Partition& lam,
                         const QTPoint& pt) {
    const int n = static_cast<int>(z.size());
    if (lam.length() > n) return Rational(0);
    const CellWeight w = [&](Cell s, int entry) -> Rational {
        const long ac = s.col - 1, lc = s.row - 1;
        return -z[entry - 1] * pt.qt_pow(-1 - ac, 0) + pt.qt_pow(-1, n - lc - entry);
    };
    return tableau_sum(lam, n, pt, w);
}

Rational w_principal(const Partition& mu, int n, const QTPoint& pt) {
    if (mu.length() > n) return Rational(0);
    Rational acc = pt.qt_pow(-mu.weight(), (n - 1) * mu.weight() - 2 * mu.n_stat());
    acc = acc * qt_poch(pt, Rational(1), 1, n - 1, mu);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long m = mu.part(i) - mu.part(j);
            if (m == 0) continue;
            acc = acc * qpoch(pt, Rational(1), 1, j - i - 1, m);
            acc = acc / qpoch(pt, Rational(1), 1, j - i, m, true);
        }
    return acc;
}

Rational w_rect(long k, const std::vector<Rational>& z, const QTPoint& pt) {
    if (k < 0) throw usage_error("w_rect: negative row length");
    const long n = static_cast<long>(z.size());
    Rational acc = ipow(pt.q, -n * k);
    for (const Rational& x : z) acc = acc * qpoch(x * ipow(pt.q, 1 - k), pt.q, k);
    return acc;
}

Rational w_xbar(const Partition& mu, const Rational& x, int n, const QTPoint& pt) {
    if (mu.length() > n) return Rational(0);
    Rational acc = ipow(pt.q, -mu.weight());
    acc = acc * qt_poch(x, pt.reciprocal(), mu, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long m = mu.part(i) - mu.part(j);
            if (m == 0) continue;
            acc = acc * qpoch(pt, Rational(1), 0, j - i + 1, m);
            acc = acc / qpoch(pt, Rational(1), 0, j - i, m, true);
        }
    return acc;
}

Rational W_single(const Rational& x, const Partition& lam, const Partition& mu,
                  const WParams& params, int n) {
    const QTPoint& pt = params.pt;
    const Rational &a = params.a, &b = params.b;
    if (x.is_zero() || a.is_zero())
        throw usage_error("W_single: x and a must be nonzero");
    if (lam.length() > n || mu.length() > n)
        throw usage_error("W_single: ambient size smaller than a shape");
    if (!is_horizontal_strip(lam, mu)) return Rational(0);

    Rational acc = h_factor_ambient(lam, mu, pt, b, n);
    acc = acc * qt_poch(pt, x.reciprocal(), 0, 0, lam);
    acc = acc * qt_poch(pt, a * x, 0, 0, lam);
    acc = acc * qt_poch(pt, b * x, 1, -1, mu);
    acc = acc * qt_poch(pt, b / (a * x), 1, -1, mu);
    acc = acc / qt_poch(pt, x.reciprocal(), 0, 0, mu, true);
    acc = acc / qt_poch(pt, a * x, 0, 0, mu, true);
    acc = acc / qt_poch(pt, b * x, 1, 0, lam, true);
    acc = acc / qt_poch(pt, b / (a * x), 1, 0, lam, true);
    for (int i = 1; i <= n; ++i) {
        const long mi = mu.part(i), li1 = lam.part(i + 1);
        acc = acc * one_minus(pt, b, 2 * mi, 1 - 2 * i);
        acc = acc / denom_factor(pt, b, 0, 1 - 2 * i);
        acc = acc * qpoch(pt, b, 0, 1 - 2 * i, mi + li1);
        acc = acc / qpoch(pt, b, 1, -2 * i, mi + li1, true);
        acc = acc * pt.qt_pow(0, static_cast<long>(i) * (mi - li1));
    }
    return acc;
}

Rational W_multi(const std::vector<Rational>& z, const Partition& lam, const Partition& mu,
                 const WParams& params, int n) {
    const int m = static_cast<int>(z.size());
    if (lam.length() > n || mu.length() > n)
        throw usage_error("W_multi: ambient size smaller than a shape");
    if (m == 0) return lam == mu ? Rational(1) : Rational(0);
    if (!lam.contains(mu)) return Rational(0);
    if (m == 1) return W_single(z[0], lam, mu, params, n);

    // Every one-step factor below is taken at its own stabilized ambient,
    // length(bottom) + 1.  One-step values are constant in the ambient from
    // that point on, and pinning them there is what makes the sum independent
    // of n and symmetric in the variables; intermediate shapes can be longer
    // than either end, so a fixed common ambient would cut some factors off
    // below their threshold.
    const QTPoint& pt = params.pt;
    std::map<std::pair<std::string, int>, Rational> memo;
    std::function<Rational(const Partition&, int)> suffix =
        [&](const Partition& sigma, int j) -> Rational {
        if (j == m - 1)
            return W_single(z[j], sigma, mu, params, std::max(sigma.length(), mu.length() + 1));
        const auto key = std::make_pair(sigma.str(), j);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int l = m - 1 - j;
        const Rational y = z[j] * pt.qt_pow(0, -l);
        // The head factor sees shifted a, b; the tail keeps the original ones.
        const WParams head_params{pt, params.a * pt.qt_pow(0, 2 * l), params.b * pt.qt_pow(0, l)};
        Rational total(0);
        for (const Partition& nu : interlacing_predecessors(sigma)) {
            if (!nu.contains(mu)) continue;
            const Rational head =
                W_single(y, sigma, nu, head_params, std::max(sigma.length(), nu.length() + 1));
            if (head.is_zero()) continue;
            const Rational tail = suffix(nu, j + 1);
            if (tail.is_zero()) continue;
            total += head * tail;
        }
        memo.emplace(key, total);
        return total;
    };
    return suffix(lam, 0);
}

bool verify_factor_lemmas(const Partition& lam, int n, const QTPoint& pt, const Rational& x,
                          const Rational& y) {
    if (lam.length() > n) throw usage_error("verify_factor_lemmas: need length(lam) <= n");
    const auto cs = cells(lam);

    // Row products against cell products, colength side.
    Rational lhs = qt_poch(pt, x, 0, 0, lam);
    Rational rhs(1);
    for (Cell s : cs) {
        const auto st = cell_stats(lam, s);
        rhs = rhs * one_minus(pt, x, st.arm_co, -st.leg_co);
    }
    if (lhs != rhs) return false;

    // Same with a different variable per row, x_i = x + (i-1) y.
    lhs = Rational(1);
    for (int i = 1; i <= lam.length(); ++i) {
        const Rational xi = x + Rational(i - 1) * y;
        lhs = lhs * qpoch(pt, xi, 0, 1 - i, lam.part(i));
    }
    rhs = Rational(1);
    for (Cell s : cs) {
        const auto st = cell_stats(lam, s);
        const Rational xi = x + Rational(st.leg_co) * y;
        rhs = rhs * one_minus(pt, xi, st.arm_co, -st.leg_co);
    }
    if (lhs != rhs) return false;

    // Monomial bookkeeping: weight and the two n-statistics as cell sums.
    Rational pa(1), pl(1), pw(1);
    for (Cell s : cs) {
        const auto st = cell_stats(lam, s);
        pa = pa * ipow(x, st.arm_co);
        pl = pl * ipow(x, st.leg_co);
        pw = pw * x;
    }
    if (ipow(x, lam.n_conj_stat()) != pa) return false;
    if (ipow(x, lam.n_stat()) != pl) return false;
    if (ipow(x, lam.weight()) != pw) return false;

    // Row-exponent product (1 - y x^{n-i})^{lam_i}.
    lhs = Rational(1);
    for (int i = 1; i <= lam.length(); ++i)
        lhs = lhs * ipow(Rational(1) - y * ipow(x, n - i), lam.part(i));
    rhs = Rational(1);
    for (Cell s : cs) {
        const auto st = cell_stats(lam, s);
        rhs = rhs * (Rational(1) - y * ipow(x, n - 1 - st.leg_co));
    }
    if (lhs != rhs) return false;

    // Tableau entries vs the sizes of the shapes in the decomposition chain.
    for (const ReversedTableau& T : enumerate_rssyt(lam, n)) {
        long chain_total = 0;
        for (const Partition& part : tableau_to_chain(T)) chain_total += part.weight();
        Rational per_cell(1);
        for (Cell s : cs) per_cell = per_cell * ipow(x, T.entry(s));
        if (ipow(x, chain_total) != per_cell) return false;
    }

    // Pairwise Pochhammer quotients as arm/leg cell quotients; compared
    // cross-multiplied so a vanishing side never divides.
    Rational lnum(1), lden(1), rnum(1), rden(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long m = lam.part(i) - lam.part(j);
            lnum = lnum * qpoch(pt, Rational(1), 1, j - i, m);
            lden = lden * qpoch(pt, Rational(1), 1, j - i - 1, m);
        }
    for (Cell s : cs) {
        const auto st = cell_stats(lam, s);
        rnum = rnum * one_minus(pt, Rational(1), st.arm_co + 1, n - 1 - st.leg_co);
        rden = rden * one_minus(pt, Rational(1), st.arm + 1, st.leg);
    }
    if (lnum * rden != rnum * lden) return false;

    lnum = lden = rnum = rden = Rational(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long m = lam.part(i) - lam.part(j);
            lnum = lnum * qpoch(pt, Rational(1), 0, j - i, m);
            lden = lden * qpoch(pt, Rational(1), 0, j - i + 1, m);
        }
    for (Cell s : cs) {
        const auto st = cell_stats(lam, s);
        rnum = rnum * one_minus(pt, Rational(1), st.arm, st.leg + 1);
        rden = rden * one_minus(pt, Rational(1), st.arm_co, n - st.leg_co);
    }
    if (lnum * rden != rnum * lden) return false;

    return true;
}

} // namespace qtcomb

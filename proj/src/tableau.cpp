#include "tableau.hpp"

#include <algorithm>
#include <map>

namespace qtcomb {

bool is_valid_rssyt(const ReversedTableau& T) {
    if (static_cast<int>(T.rows.size()) != T.shape.length()) return false;
    if (T.shape.length() > T.n) return false;
    for (int i = 1; i <= T.shape.length(); ++i) {
        const auto& row = T.rows[i - 1];
        if (static_cast<long>(row.size()) != T.shape.part(i)) return false;
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > T.n) return false;
            if (j > 0 && row[j] > row[j - 1]) return false; // rows weakly decreasing
            if (i > 1 && static_cast<long>(j) < T.shape.part(i - 1) &&
                row[j] >= T.rows[i - 2][j])
                return false; // columns strictly decreasing
        }
    }
    return true;
}

std::string tableau_str(const ReversedTableau& T) {
    std::string out = "[";
    for (size_t i = 0; i < T.rows.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (size_t j = 0; j < T.rows[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(T.rows[i][j]);
        }
        out += ']';
    }
    return out + "]";
}

static bool chain_less(const StripChain& a, const StripChain& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<StripChain> strip_chains(const Partition& shape, int n) {
    std::vector<StripChain> out;
    if (shape.length() > n) return out;
    std::vector<Partition> rev{shape}; // built top-down: shape = c[n], ..., c[0] = empty
    auto rec = [&](auto&& self, const Partition& cur, int k) -> void {
        if (k == 0) {
            if (!cur.empty()) return;
            StripChain chain(rev.rbegin(), rev.rend());
            out.push_back(std::move(chain));
            return;
        }
        for (const Partition& nu : interlacing_predecessors(cur)) {
            if (nu.length() > k - 1) continue; // cannot reach empty in k-1 more steps
            rev.push_back(nu);
            self(self, nu, k - 1);
            rev.pop_back();
        }
    };
    rec(rec, shape, n);
    std::sort(out.begin(), out.end(), chain_less);
    return out;
}

ReversedTableau chain_to_tableau(const StripChain& chain) {
    const int n = static_cast<int>(chain.size()) - 1;
    ReversedTableau T;
    T.shape = chain.back();
    T.n = n;
    T.rows.resize(T.shape.length());
    for (int i = 1; i <= T.shape.length(); ++i)
        T.rows[i - 1].resize(T.shape.part(i), 0);
    for (int k = 1; k <= n; ++k) {
        if (!is_horizontal_strip(chain[k], chain[k - 1]))
            throw usage_error("decomposition sequence is not a chain of strips");
        for (Cell s : skew_cells(chain[k], chain[k - 1]))
            T.rows[s.row - 1][s.col - 1] = n - k + 1;
    }
    return T;
}

StripChain tableau_to_chain(const ReversedTableau& T) {
    if (!is_valid_rssyt(T)) throw usage_error("invalid reversed tableau");
    StripChain chain;
    for (int k = 0; k <= T.n; ++k) {
        // c[k] = cells with entries >= n - k + 1
        std::vector<long> parts;
        for (int i = 1; i <= T.shape.length(); ++i) {
            long count = 0;
            for (int e : T.rows[i - 1])
                if (e >= T.n - k + 1) ++count;
            parts.push_back(count);
        }
        chain.push_back(Partition(parts));
    }
    return chain;
}

std::vector<ReversedTableau> enumerate_rssyt(const Partition& shape, int n) {
    std::vector<ReversedTableau> out;
    for (const StripChain& c : strip_chains(shape, n)) out.push_back(chain_to_tableau(c));
    return out;
}

Rational b_factor(const Partition& lam, Cell s, const QTPoint& pt) {
    CellStats cs = cell_stats(lam, s);
    return one_minus(pt, Rational(1), cs.arm, cs.leg + 1) /
           denom_factor(pt, Rational(1), cs.arm + 1, cs.leg);
}

static void require_strip(const Partition& lam, const Partition& mu) {
    if (!is_horizontal_strip(lam, mu))
        throw not_a_strip("not a horizontal strip: (" + lam.str() + ")/(" + mu.str() + ")");
}

Rational psi_strip(const Partition& lam, const Partition& mu, const QTPoint& pt) {
    require_strip(lam, mu);
    const Partition lam_c = lam.conjugate(), mu_c = mu.conjugate();
    Rational acc(1);
    for (int i = 1; i <= mu.length(); ++i) {
        if (lam.part(i) == mu.part(i)) continue; // row meets no strip cell
        for (long j = 1; j <= mu.part(i); ++j) {
            if (lam_c.part(static_cast<int>(j)) != mu_c.part(static_cast<int>(j)))
                continue; // column meets the strip
            Cell s{i, static_cast<int>(j)};
            // b_mu(s)/b_lam(s), with the two denominator positions guarded
            CellStats cm = cell_stats(mu, s), cl = cell_stats(lam, s);
            acc *= one_minus(pt, Rational(1), cm.arm, cm.leg + 1) *
                   one_minus(pt, Rational(1), cl.arm + 1, cl.leg);
            acc /= denom_factor(pt, Rational(1), cm.arm + 1, cm.leg) *
                   denom_factor(pt, Rational(1), cl.arm, cl.leg + 1);
        }
    }
    return acc;
}

Rational psi_strip_algebraic(const Partition& lam, const Partition& mu, const QTPoint& pt) {
    require_strip(lam, mu);
    // Each f-quotient of the double product collapses against the partner
    // whose argument differs by q^{lam_i - mu_i}:
    //   f(x) / f(x q^m)   = (x t; q)_m / (x q; q)_m
    //   f(y q^m) / f(y)   = (y q; q)_m / (y t; q)_m
    Rational acc(1);
    for (int i = 1; i <= mu.length(); ++i) {
        const long m = lam.part(i) - mu.part(i);
        if (m == 0) continue;
        for (int j = i; j <= mu.length(); ++j) {
            acc *= qpoch(pt, Rational(1), mu.part(i) - mu.part(j), j - i + 1, m);
            acc /= qpoch(pt, Rational(1), mu.part(i) - mu.part(j) + 1, j - i, m, true);
            acc *= qpoch(pt, Rational(1), mu.part(i) - lam.part(j + 1) + 1, j - i, m);
            acc /= qpoch(pt, Rational(1), mu.part(i) - lam.part(j + 1), j - i + 1, m, true);
        }
    }
    return acc;
}

Rational psi_tableau(const ReversedTableau& T, const QTPoint& pt) {
    StripChain chain = tableau_to_chain(T);
    Rational acc(1);
    for (size_t k = 1; k < chain.size(); ++k) acc *= psi_strip(chain[k], chain[k - 1], pt);
    return acc;
}

Rational tableau_sum(const Partition& shape, int n, const QTPoint& pt, const CellWeight& w) {
    // F(sigma, k): contribution of all ways to peel sigma down to empty in k
    // strips, the strip peeled at level k carrying entry n - k + 1.
    std::map<std::pair<std::string, int>, Rational> memo;
    auto rec = [&](auto&& self, const Partition& sigma, int k) -> Rational {
        if (k == 0) return sigma.empty() ? Rational(1) : Rational(0);
        auto key = std::make_pair(sigma.str(), k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int entry = n - k + 1;
        Rational total(0);
        for (const Partition& nu : interlacing_predecessors(sigma)) {
            if (nu.length() > k - 1) continue;
            Rational term = psi_strip(sigma, nu, pt);
            for (Cell s : skew_cells(sigma, nu)) term *= w(s, entry);
            if (term.is_zero()) continue;
            total += term * self(self, nu, k - 1);
        }
        memo.emplace(key, total);
        return total;
    };
    return rec(rec, shape, n);
}

} // namespace qtcomb

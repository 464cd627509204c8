#include "verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "numbers.hpp"
#include "wfun.hpp"

namespace qtcomb {

namespace {

struct Grid {
    long max_weight;
    int max_n;
    int trials;
};

// Small random rationals keep every check exact while staying cheap; 0 and
// +-1 are excluded because they degenerate too many factors to be useful.
Rational draw_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    for (;;) {
        const Rational r(num(rng), den(rng));
        if (r.is_zero()) continue;
        if (r == Rational(1) || r == Rational(-1)) continue;
        return r;
    }
}

QTPoint draw_point(std::mt19937_64& rng) {
    const Rational q = draw_rational(rng);
    return QTPoint(q, draw_rational(rng));
}

ExponentVector draw_exponents(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> d(-2, 6);
    ExponentVector z(n);
    for (long& e : z) e = d(rng);
    return z;
}

std::vector<Rational> draw_variables(std::mt19937_64& rng, int n) {
    std::vector<Rational> z;
    z.reserve(n);
    for (int i = 0; i < n; ++i) z.push_back(draw_rational(rng));
    return z;
}

std::string join(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out;
}

std::string join(const ExponentVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

ExponentVector padded(const Partition& lam, int n) {
    ExponentVector z(n);
    for (int i = 1; i <= n; ++i) z[i - 1] = lam.part(i);
    return z;
}

std::vector<Rational> power_point(const QTPoint& pt, const ExponentVector& z) {
    const int n = static_cast<int>(z.size());
    std::vector<Rational> point;
    point.reserve(n);
    for (int i = 1; i <= n; ++i) point.push_back(pt.qt_pow(z[i - 1], n - i));
    return point;
}

Partition rectangle(long k, int n) {
    return Partition(std::vector<long>(n, k));
}

// Accumulates one group's tallies.  sample() reruns its body on singular
// draws so the grid itself never shrinks; the body must draw all randomness
// inside and finish with record().
class GroupRunner {
public:
    GroupRunner(const std::string& name, std::uint64_t seed) {
        result_.name = name;
        std::vector<std::uint32_t> words;
        words.push_back(static_cast<std::uint32_t>(seed));
        words.push_back(static_cast<std::uint32_t>(seed >> 32));
        for (const char c : name) words.push_back(static_cast<unsigned char>(c));
        std::seed_seq seq(words.begin(), words.end());
        rng_.seed(seq);
    }

    std::mt19937_64& rng() { return rng_; }

    template <typename F>
    void sample(F&& body) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            try {
                body();
                return;
            } catch (const denominator_vanishes&) {
            }
        }
        record(false, [] { return std::string("no pole-free draw in 64 attempts"); });
    }

    template <typename D>
    void record(bool ok, D&& describe) {
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
            if (result_.first_failure.empty()) result_.first_failure = describe();
        }
    }

    CheckGroupResult take() { return std::move(result_); }

private:
    CheckGroupResult result_;
    std::mt19937_64 rng_;
};

std::string describe_pair(const char* what, const Partition& lam, const Partition& mu, int n,
                          const QTPoint& pt, const std::string& extra, const Rational& lhs,
                          const Rational& rhs) {
    std::ostringstream os;
    os << what << " lambda=(" << lam.str() << ") mu=(" << mu.str() << ") n=" << n
       << " q=" << pt.q.str() << " t=" << pt.t.str();
    if (!extra.empty()) os << " " << extra;
    os << " lhs=" << lhs.str() << " rhs=" << rhs.str();
    return os.str();
}

// ---- w layer ----

void group_w_dual(GroupRunner& g, const Grid& grid) {
    for (const Partition& lam : partitions_up_to_weight(grid.max_weight))
        for (int n = 1; n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const std::vector<Rational> z = draw_variables(g.rng(), n);
                    const Rational lhs = w_multi_branch(z, lam, Partition(), pt);
                    const Rational rhs = w_multi_tableau(z, lam, pt);
                    g.record(lhs == rhs, [&] {
                        return describe_pair("branch!=tableau", lam, Partition(), n, pt,
                                             "z=" + join(z), lhs, rhs);
                    });
                });
}

void group_strip_weights(GroupRunner& g, const Grid& grid) {
    for (const Partition& lam : partitions_up_to_weight(grid.max_weight))
        for (const Partition& mu : interlacing_predecessors(lam))
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const Rational h = h_factor(lam, mu, pt, Rational(0));
                    const Rational cell = psi_strip(lam, mu, pt);
                    const Rational alg = psi_strip_algebraic(lam, mu, pt);
                    g.record(h == cell && cell == alg, [&] {
                        return describe_pair("strip weight", lam, mu, 0, pt,
                                             "algebraic=" + alg.str(), h, cell);
                    });
                });
}

void group_principal_vanishing(GroupRunner& g, const Grid& grid) {
    const std::vector<Partition> shapes = partitions_up_to_weight(grid.max_weight);
    for (const Partition& lam : shapes)
        for (const Partition& mu : shapes) {
            if (lam.contains(mu)) continue;
            for (int n = 1; n <= grid.max_n; ++n) {
                if (lam.length() > n || mu.length() > n) continue;
                for (int trial = 0; trial < grid.trials; ++trial)
                    g.sample([&] {
                        const QTPoint pt = draw_point(g.rng());
                        const Rational val =
                            w_multi_tableau(power_point(pt, padded(lam, n)), mu, pt);
                        g.record(val.is_zero(), [&] {
                            return describe_pair("nonzero at principal point", lam, mu, n, pt,
                                                 "", val, Rational(0));
                        });
                    });
            }
        }
}

void group_special_points(GroupRunner& g, const Grid& grid) {
    // closed principal evaluation against the tableau sum
    for (const Partition& mu : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, mu.length()); n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const Rational closed = w_principal(mu, n, pt);
                    const Rational tab = w_multi_tableau(power_point(pt, padded(mu, n)), mu, pt);
                    g.record(closed == tab,
                             [&] { return describe_pair("principal", mu, mu, n, pt, "", closed, tab); });
                });

    // rectangular closed product against the branching recursion
    for (long k = 1; k <= 3; ++k)
        for (int n = 1; n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const std::vector<Rational> z = draw_variables(g.rng(), n);
                    const Rational closed = w_rect(k, z, pt);
                    const Rational rec = w_multi_branch(z, rectangle(k, n), Partition(), pt);
                    g.record(closed == rec, [&] {
                        return describe_pair("rectangle", rectangle(k, n), Partition(), n, pt,
                                             "z=" + join(z), closed, rec);
                    });
                });

    // single-base-point geometric evaluation against the tableau sum
    for (const Partition& mu : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, mu.length()); n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const Rational x = draw_rational(g.rng());
                    std::vector<Rational> z;
                    for (int i = 1; i <= n; ++i) z.push_back(x * pt.qt_pow(0, n - i));
                    const Rational closed = w_xbar(mu, x, n, pt);
                    const Rational tab = w_multi_tableau(z, mu, pt);
                    g.record(closed == tab, [&] {
                        return describe_pair("geometric point", mu, mu, n, pt, "x=" + x.str(),
                                             closed, tab);
                    });
                });
}

void group_W_invariance(GroupRunner& g, const Grid& grid) {
    const auto by_str = [](const Rational& a, const Rational& b) { return a.str() < b.str(); };
    const long cap = std::min<long>(grid.max_weight, 4);
    for (const Partition& lam : partitions_up_to_weight(cap))
        for (const Partition& mu : subpartitions(lam)) {
            const int n = std::max(2, lam.length());
            if (n <= grid.max_n)
                for (int trial = 0; trial < grid.trials; ++trial)
                    g.sample([&] {
                        const QTPoint pt = draw_point(g.rng());
                        const WParams params{pt, draw_rational(g.rng()), draw_rational(g.rng())};
                        std::vector<Rational> z = draw_variables(g.rng(), n);
                        const Rational base = W_multi(z, lam, mu, params, n);
                        // evaluate every permutation before recording so a
                        // singular draw retries with nothing tallied
                        std::vector<Rational> values;
                        std::sort(z.begin(), z.end(), by_str);
                        do {
                            values.push_back(W_multi(z, lam, mu, params, n));
                        } while (std::next_permutation(z.begin(), z.end(), by_str));
                        for (const Rational& perm : values)
                            g.record(perm == base, [&] {
                                return describe_pair("permuted variables", lam, mu, n, pt,
                                                     "a=" + params.a.str() + " b=" +
                                                         params.b.str(),
                                                     perm, base);
                            });
                    });

            // one-variable list agrees with the single-variable form
            if (lam.length() <= 1)
                for (int trial = 0; trial < grid.trials; ++trial)
                    g.sample([&] {
                        const QTPoint pt = draw_point(g.rng());
                        const WParams params{pt, draw_rational(g.rng()), draw_rational(g.rng())};
                        const Rational x = draw_rational(g.rng());
                        const Rational multi = W_multi({x}, lam, mu, params, 1);
                        const Rational single = W_single(x, lam, mu, params, 1);
                        g.record(multi == single, [&] {
                            return describe_pair("one-variable reduction", lam, mu, 1, pt,
                                                 "x=" + x.str(), multi, single);
                        });
                    });
        }
}

// ---- binomial layer ----

void group_binom_dual(GroupRunner& g, const Grid& grid) {
    for (const Partition& mu : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, mu.length()); n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const ExponentVector z = draw_exponents(g.rng(), n);
                    const Rational lhs = binom(z, mu, n, pt);
                    const Rational rhs = binom_comb(z, mu, n, pt);
                    g.record(lhs == rhs, [&] {
                        return describe_pair("binom routes", mu, mu, n, pt, "z=" + join(z), lhs,
                                             rhs);
                    });
                });
}

void group_binom_rectangle(GroupRunner& g, const Grid& grid) {
    for (long k = 1; k <= 3; ++k)
        for (int n = 1; n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const ExponentVector z = draw_exponents(g.rng(), n);
                    const Rational closed = binom_rect(z, k, n, pt);
                    const Rational general = binom(z, rectangle(k, n), n, pt);
                    g.record(closed == general, [&] {
                        return describe_pair("rectangle binom", rectangle(k, n), Partition(), n,
                                             pt, "z=" + join(z), closed, general);
                    });
                });
}

void group_binom_gaussian(GroupRunner& g, const Grid& grid) {
    for (long Z = 0; Z <= grid.max_weight + 2; ++Z)
        for (long m = 0; m <= grid.max_weight; ++m)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    Rational oracle(1);
                    for (long j = 0; j < m; ++j)
                        oracle *= (Rational(1) - ipow(pt.q, Z - j)) /
                                  (Rational(1) - ipow(pt.q, j + 1));
                    const Rational val = binom({Z}, rectangle(m, 1), 1, pt);
                    g.record(val == oracle, [&] {
                        return describe_pair("gaussian reduction", rectangle(m, 1), Partition(),
                                             1, pt, "Z=" + std::to_string(Z), val, oracle);
                    });
                });
}

void group_binom_vanishing(GroupRunner& g, const Grid& grid) {
    const std::vector<Partition> shapes = partitions_up_to_weight(grid.max_weight);
    for (const Partition& lam : shapes)
        for (const Partition& mu : shapes) {
            if (lam.contains(mu)) continue;
            for (int n = std::max(1, mu.length()); n <= grid.max_n; ++n) {
                if (lam.length() > n) continue;
                for (int trial = 0; trial < grid.trials; ++trial)
                    g.sample([&] {
                        const QTPoint pt = draw_point(g.rng());
                        const Rational val = binom(padded(lam, n), mu, n, pt);
                        g.record(val.is_zero(), [&] {
                            return describe_pair("binom vanishing", lam, mu, n, pt, "", val,
                                                 Rational(0));
                        });
                    });
            }
        }
}

// ---- bracket layer ----

void group_bracket_dual(GroupRunner& g, const Grid& grid) {
    for (const Partition& mu : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, mu.length()); n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const ExponentVector z = draw_exponents(g.rng(), n);
                    const ScaleVector s = draw_variables(g.rng(), n);
                    const Rational lhs = bracket(z, s, mu, n, pt);
                    const Rational rhs = bracket_comb(z, s, mu, n, pt);
                    g.record(lhs == rhs, [&] {
                        return describe_pair("bracket routes", mu, mu, n, pt,
                                             "z=" + join(z) + " s=" + join(s), lhs, rhs);
                    });
                });
}

void group_bracket_base_point(GroupRunner& g, const Grid& grid) {
    std::uniform_int_distribution<long> xs(-2, 6);
    for (const Partition& mu : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, mu.length()); n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const long x = xs(g.rng());
                    const Rational general =
                        bracket(ExponentVector(n, x), ScaleVector(n, Rational(1)), mu, n, pt);
                    const Rational closed = bracket_xbar(x, mu, n, pt);
                    g.record(general == closed, [&] {
                        return describe_pair("base point bracket", mu, mu, n, pt,
                                             "x=" + std::to_string(x), general, closed);
                    });
                });
}

void group_plain_number(GroupRunner& g, const Grid& grid) {
    for (int n = 1; n <= grid.max_n; ++n)
        for (int trial = 0; trial < grid.trials; ++trial)
            g.sample([&] {
                const QTPoint pt = draw_point(g.rng());
                const ExponentVector z = draw_exponents(g.rng(), n);
                const Rational number = qt_number(z, n, pt);
                const Rational column =
                    bracket(z, ScaleVector(n, Rational(1)), rectangle(1, n), n, pt);
                const Rational at_ones = qt_number(ExponentVector(n, 1), n, pt);
                g.record(number == column && at_ones == Rational(1), [&] {
                    return describe_pair("plain number", rectangle(1, n), Partition(), n, pt,
                                         "z=" + join(z), number, column);
                });
            });
}

void group_bracket_classical(GroupRunner& g, const Grid& grid) {
    for (long x = 0; x <= grid.max_weight + 2; ++x)
        for (long m = 0; m <= grid.max_weight; ++m)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    Rational oracle(1);
                    for (long j = 0; j < m; ++j)
                        oracle *= (Rational(1) - ipow(pt.q, x - j)) / (Rational(1) - pt.q);
                    const Rational val = bracket_xbar(x, rectangle(m, 1), 1, pt);
                    g.record(val == oracle, [&] {
                        return describe_pair("classical bracket", rectangle(m, 1), Partition(),
                                             1, pt, "x=" + std::to_string(x), val, oracle);
                    });
                });
}

void group_factorial_identity(GroupRunner& g, const Grid& grid) {
    for (const Partition& mu : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, mu.length()); n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const ExponentVector z = draw_exponents(g.rng(), n);
                    const ScaleVector ones(n, Rational(1));
                    const Rational direct = bracket(z, ones, mu, n, pt);
                    const Rational split = mu_factorial(mu, n, pt) * binom(z, mu, n, pt);
                    g.record(direct == split, [&] {
                        return describe_pair("factorial split", mu, mu, n, pt, "z=" + join(z),
                                             direct, split);
                    });
                });

    for (long k = 1; k <= 3; ++k)
        for (int n = 1; n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const Rational general = mu_factorial(rectangle(k, n), n, pt);
                    const Rational closed = rect_factorial(k, n, pt);
                    g.record(general == closed, [&] {
                        return describe_pair("rectangle factorial", rectangle(k, n), Partition(),
                                             n, pt, "", general, closed);
                    });
                });
}

// ---- catalan layer ----

void group_catalan_dual(GroupRunner& g, const Grid& grid) {
    for (const Partition& lam : partitions_up_to_weight(grid.max_weight)) {
        const int n = lam.length();
        if (n == 0 || n > grid.max_n) continue;
        for (int trial = 0; trial < grid.trials; ++trial)
            g.sample([&] {
                const QTPoint pt = draw_point(g.rng());
                const Rational lhs = catalan(lam, n, pt);
                const Rational rhs = catalan_comb(lam, n, pt);
                g.record(lhs == rhs, [&] {
                    return describe_pair("catalan routes", lam, Partition(), n, pt, "", lhs, rhs);
                });
            });
    }
}

void group_catalan_anchors(GroupRunner& g, const Grid& grid) {
    for (int n = 1; n <= grid.max_n; ++n)
        for (int trial = 0; trial < grid.trials; ++trial)
            g.sample([&] {
                const QTPoint pt = draw_point(g.rng());
                const Partition ones = rectangle(1, n);
                const Rational product = catalan(ones, n, pt);
                const Rational closed = catalan_rect(1, n, pt);
                const Rational summed = catalan_comb(ones, n, pt);
                g.record(product == Rational(1) && closed == Rational(1) && summed == Rational(1),
                         [&] {
                             return describe_pair("unit anchor", ones, Partition(), n, pt, "",
                                                  product, closed);
                         });
            });

    for (long k = 1; k <= 3; ++k)
        for (int n = 1; n <= std::min(grid.max_n, 3); ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const Rational closed = catalan_rect(k, n, pt);
                    const Rational general = catalan(rectangle(k, n), n, pt);
                    g.record(closed == general, [&] {
                        return describe_pair("rectangle catalan", rectangle(k, n), Partition(),
                                             n, pt, "", closed, general);
                    });
                });
}

void group_catalan_classical(GroupRunner& g, const Grid& grid) {
    for (long k = 1; k <= grid.max_weight; ++k)
        for (int trial = 0; trial < grid.trials; ++trial)
            g.sample([&] {
                const QTPoint pt = draw_point(g.rng());
                Rational oracle(1);
                for (long j = 0; j < k; ++j)
                    oracle *= (Rational(1) - ipow(pt.q, 2 * k - j)) /
                              (Rational(1) - ipow(pt.q, j + 1));
                oracle /= (Rational(1) - ipow(pt.q, k + 1)) / (Rational(1) - pt.q);
                const Rational val = catalan(Partition({k}), 1, pt);
                g.record(val == oracle, [&] {
                    return describe_pair("classical catalan", Partition({k}), Partition(), 1, pt,
                                         "", val, oracle);
                });
            });
}

// ---- lah layer ----

void group_lah_dual(GroupRunner& g, const Grid& grid) {
    for (const Partition& lam : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, lam.length()); n <= grid.max_n; ++n)
            for (const Partition& mu : subpartitions(lam))
                for (int trial = 0; trial < grid.trials; ++trial)
                    g.sample([&] {
                        const QTPoint pt = draw_point(g.rng());
                        const Rational lhs = lah_explicit(lam, mu, n, pt);
                        const Rational rhs = lah_comb(lam, mu, n, pt);
                        g.record(lhs == rhs, [&] {
                            return describe_pair("lah routes", lam, mu, n, pt, "", lhs, rhs);
                        });
                    });
}

void group_lah_expansion(GroupRunner& g, const Grid& grid) {
    for (const Partition& lam : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, lam.length()); n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    std::vector<long> xs;
                    for (long x = 0; x <= lam.weight() + 1; ++x) xs.push_back(x);
                    const bool closes = lah_expansion_check(lam, n, pt, xs);
                    g.record(closes, [&] {
                        return describe_pair("expansion open", lam, Partition(), n, pt, "",
                                             Rational(0), Rational(0));
                    });
                });
}

// ---- lemmas ----

void group_factor_lemmas(GroupRunner& g, const Grid& grid) {
    for (const Partition& lam : partitions_up_to_weight(grid.max_weight))
        for (int n = std::max(1, lam.length()); n <= grid.max_n; ++n)
            for (int trial = 0; trial < grid.trials; ++trial)
                g.sample([&] {
                    const QTPoint pt = draw_point(g.rng());
                    const Rational x = draw_rational(g.rng());
                    const Rational y = draw_rational(g.rng());
                    const bool ok = verify_factor_lemmas(lam, n, pt, x, y);
                    g.record(ok, [&] {
                        return describe_pair("lemma broken", lam, Partition(), n, pt,
                                             "x=" + x.str() + " y=" + y.str(), Rational(0),
                                             Rational(0));
                    });
                });
}

using GroupFn = void (*)(GroupRunner&, const Grid&);

const std::map<std::string, GroupFn>& registry() {
    static const std::map<std::string, GroupFn> table = {
        {"W invariance", group_W_invariance},
        {"binom dual route", group_binom_dual},
        {"binom gaussian", group_binom_gaussian},
        {"binom rectangle", group_binom_rectangle},
        {"binom vanishing", group_binom_vanishing},
        {"bracket base point", group_bracket_base_point},
        {"bracket classical", group_bracket_classical},
        {"bracket dual route", group_bracket_dual},
        {"catalan anchors", group_catalan_anchors},
        {"catalan classical", group_catalan_classical},
        {"catalan dual route", group_catalan_dual},
        {"factor lemmas", group_factor_lemmas},
        {"factorial identity", group_factorial_identity},
        {"lah dual route", group_lah_dual},
        {"lah expansion", group_lah_expansion},
        {"plain number", group_plain_number},
        {"principal vanishing", group_principal_vanishing},
        {"special points", group_special_points},
        {"strip weights", group_strip_weights},
        {"w dual route", group_w_dual},
    };
    return table;
}

} // namespace

bool VerifyReport::all_passed() const {
    for (const CheckGroupResult& gr : groups)
        if (gr.failures != 0) return false;
    return true;
}

long VerifyReport::total_checks() const {
    long total = 0;
    for (const CheckGroupResult& gr : groups) total += gr.checks;
    return total;
}

long VerifyReport::total_failures() const {
    long total = 0;
    for (const CheckGroupResult& gr : groups) total += gr.failures;
    return total;
}

std::vector<std::string> suite_groups(const std::string& suite) {
    if (suite == "w")
        return {"W invariance", "principal vanishing", "special points", "strip weights",
                "w dual route"};
    if (suite == "binom")
        return {"binom dual route", "binom gaussian", "binom rectangle", "binom vanishing"};
    if (suite == "bracket")
        return {"bracket base point", "bracket classical", "bracket dual route",
                "factorial identity", "plain number"};
    if (suite == "catalan")
        return {"catalan anchors", "catalan classical", "catalan dual route"};
    if (suite == "lah") return {"lah dual route", "lah expansion"};
    if (suite == "lemmas") return {"factor lemmas"};
    if (suite == "all") {
        std::vector<std::string> names;
        for (const auto& [name, fn] : registry()) names.push_back(name);
        return names;
    }
    throw usage_error("unknown verify suite: " + suite);
}

CheckGroupResult run_group(const std::string& name, long max_weight, int max_n, int trials,
                           std::uint64_t seed) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw usage_error("unknown check group: " + name);
    if (max_weight < 0 || max_n < 1 || trials < 1)
        throw usage_error("verify bounds must be positive");
    GroupRunner runner(name, seed);
    it->second(runner, Grid{max_weight, max_n, trials});
    return runner.take();
}

VerifyReport run_verify(const std::string& suite, long max_weight, int max_n, int trials,
                        std::uint64_t seed) {
    VerifyReport report;
    report.suite = suite;
    report.max_weight = max_weight;
    report.max_n = max_n;
    report.trials = trials;
    report.seed = seed;
    for (const std::string& name : suite_groups(suite))
        report.groups.push_back(run_group(name, max_weight, max_n, trials, seed));
    std::sort(report.groups.begin(), report.groups.end(),
              [](const CheckGroupResult& a, const CheckGroupResult& b) { return a.name < b.name; });
    return report;
}

} // namespace qtcomb

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "numbers.hpp"
#include "test_util.hpp"

using namespace qtcomb;
using testutil::random_point;
using testutil::random_rational;

namespace {

// Redraw-on-pole loop shared with the other suites: random draws may land on
// genuine singular points, and the policy is to redraw, never to paper over.
// Bodies evaluate throwing expressions into locals before CHECKing them, so
// the exception reaches this loop instead of doctest's assertion guard.
template <typename F>
void with_redraw(F body) {
    for (int attempt = 0;; ++attempt) {
        REQUIRE(attempt < 64);
        try {
            body();
            return;
        } catch (const denominator_vanishes&) {
        }
    }
}

ExponentVector random_exponents(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> d(-2, 6);
    ExponentVector z(n);
    for (long& e : z) e = d(rng);
    return z;
}

ScaleVector random_scales(std::mt19937_64& rng, int n) {
    ScaleVector s;
    for (int i = 0; i < n; ++i) s.push_back(random_rational(rng));
    return s;
}

ExponentVector padded(const Partition& lam, int n) {
    ExponentVector z(n);
    for (int i = 1; i <= n; ++i) z[i - 1] = lam.part(i);
    return z;
}

Partition rectangle(long k, int n) {
    return Partition(std::vector<long>(n, k));
}

// (1 - q^e) / (1 - q), written out so the one-dimensional reductions are
// checked against arithmetic independent of the library's series code.
Rational classical_number(long e, const Rational& q) {
    return (Rational(1) - ipow(q, e)) / (Rational(1) - q);
}

// Gaussian binomial as the plain product prod_j [Z-j] / [j+1].
Rational gaussian(long Z, long m, const Rational& q) {
    Rational acc(1);
    for (long j = 0; j < m; ++j)
        acc *= classical_number(Z - j, q) / classical_number(j + 1, q);
    return acc;
}

} // namespace

TEST_CASE("binomial coefficients: frozen values and edge shapes") {
    const QTPoint pt(Rational(1, 2), Rational(1, 3));

    CHECK(binom({2}, Partition({1}), 1, pt) == Rational(3, 2));
    CHECK(binom_comb({2}, Partition({1}), 1, pt) == Rational(3, 2));
    CHECK(binom_rect({2}, 1, 1, pt) == Rational(3, 2));

    // empty shape: every route degenerates to 1
    CHECK(binom({3, 1}, Partition(), 2, pt) == Rational(1));
    CHECK(binom_comb({3, 1}, Partition(), 2, pt) == Rational(1));

    // height-1 rectangle at z = (1, ..., 1) is numerator over itself
    for (int n = 1; n <= 4; ++n)
        CHECK(binom_rect(ExponentVector(n, 1), 1, n, pt) == Rational(1));

    // more rows than variables
    CHECK(binom({2, 1}, Partition({1, 1, 1}), 2, pt) == Rational(0));
    CHECK(binom_comb({2, 1}, Partition({1, 1, 1}), 2, pt) == Rational(0));

    // the normalization makes the diagonal value exactly 1
    std::mt19937_64 rng(2024);
    for (const Partition& mu : partitions_up_to_weight(4))
        for (int n = std::max(1, mu.length()); n <= 3; ++n)
            with_redraw([&] {
                const QTPoint p = random_point(rng);
                const Rational diag = binom(padded(mu, n), mu, n, p);
                CHECK(diag == Rational(1));
            });

    CHECK_THROWS_AS(binom({1, 2, 3}, Partition({1}), 2, pt), usage_error);
}

TEST_CASE("binomial coefficients: product and tableau routes agree") {
    std::mt19937_64 rng(77);
    for (const Partition& mu : partitions_up_to_weight(5))
        for (int n = std::max(1, mu.length()); n <= 3; ++n)
            for (int trial = 0; trial < 3; ++trial)
                with_redraw([&] {
                    const QTPoint pt = random_point(rng);
                    const ExponentVector z = random_exponents(rng, n);
                    const Rational lhs = binom(z, mu, n, pt);
                    const Rational rhs = binom_comb(z, mu, n, pt);
                    CHECK(lhs == rhs);
                });

    // rectangular closed product against the general definition
    for (long k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n)
            with_redraw([&] {
                const QTPoint pt = random_point(rng);
                const ExponentVector z = random_exponents(rng, n);
                const Rational closed = binom_rect(z, k, n, pt);
                const Rational general = binom(z, rectangle(k, n), n, pt);
                CHECK(closed == general);
            });

    // explicit evaluation point matches the exponent form
    for (int trial = 0; trial < 4; ++trial)
        with_redraw([&] {
            const QTPoint pt = random_point(rng);
            const int n = 1 + trial % 3;
            const ExponentVector z = random_exponents(rng, n);
            std::vector<Rational> point;
            for (int i = 1; i <= n; ++i) point.push_back(pt.qt_pow(z[i - 1], n - i));
            const Rational by_exponents = binom(z, Partition({2, 1}), n, pt);
            const Rational by_point = binom_at(point, Partition({2, 1}), n, pt);
            CHECK(by_exponents == by_point);
        });
}

TEST_CASE("binomial coefficients: one-dimensional Gaussian reduction and vanishing") {
    const QTPoint pt(Rational(2, 7), Rational(1, 3));
    for (long Z = 0; Z <= 8; ++Z)
        for (long m = 0; m <= 6; ++m)
            CHECK(binom({Z}, rectangle(m, 1), 1, pt) == gaussian(Z, m, pt.q));

    // partition arguments: the coefficient vanishes unless the shape fits
    std::mt19937_64 rng(4242);
    for (const Partition& lam : partitions_up_to_weight(4))
        for (const Partition& mu : partitions_up_to_weight(4)) {
            if (lam.contains(mu)) continue;
            for (int n = std::max(1, mu.length()); n <= 3; ++n) {
                if (lam.length() > n) continue;
                with_redraw([&] {
                    const QTPoint p = random_point(rng);
                    const Rational val = binom(padded(lam, n), mu, n, p);
                    CHECK(val == Rational(0));
                });
            }
        }
}

TEST_CASE("bracket function: frozen values and dual routes") {
    const QTPoint pt(Rational(1, 2), Rational(1, 3));

    // one variable: (1 - s q^x) / (1 - q)
    const ScaleVector three = {Rational(3)};
    CHECK(bracket({2}, three, Partition({1}), 1, pt) == Rational(1, 2));
    CHECK(bracket_comb({2}, three, Partition({1}), 1, pt) == Rational(1, 2));

    CHECK(bracket({5, 1}, {Rational(2), Rational(7)}, Partition(), 2, pt) == Rational(1));
    CHECK(bracket({1, 1}, {Rational(2), Rational(7)}, Partition({2, 2, 1}), 2, pt) ==
          Rational(0));
    CHECK(bracket_comb({1, 1}, {Rational(2), Rational(7)}, Partition({2, 2, 1}), 2, pt) ==
          Rational(0));
    CHECK_THROWS_AS(bracket({1}, {Rational(0)}, Partition({1}), 1, pt), usage_error);

    std::mt19937_64 rng(99);
    for (const Partition& mu : partitions_up_to_weight(5))
        for (int n = std::max(1, mu.length()); n <= 3; ++n)
            for (int trial = 0; trial < 3; ++trial)
                with_redraw([&] {
                    const QTPoint p = random_point(rng);
                    const ExponentVector z = random_exponents(rng, n);
                    const ScaleVector s = random_scales(rng, n);
                    const Rational lhs = bracket(z, s, mu, n, p);
                    const Rational rhs = bracket_comb(z, s, mu, n, p);
                    CHECK(lhs == rhs);
                });

    // scales chosen so one tableau summand factor vanishes exactly: for the
    // cell (1,2) of (2), entry 1 gives 1 - s_1 q^{z_1 - 1}, zero at s_1 = 1,
    // z_1 = 1.  The routes must still agree.
    {
        const ScaleVector ones = {Rational(1), Rational(1)};
        CHECK(bracket({1, 0}, ones, Partition({2}), 2, pt) ==
              bracket_comb({1, 0}, ones, Partition({2}), 2, pt));
    }
}

TEST_CASE("bracket specializations: single base point, plain number, factorial") {
    const QTPoint pt(Rational(1, 2), Rational(1, 3));
    CHECK(bracket_xbar(2, Partition({1}), 1, pt) == Rational(3, 2));
    CHECK(bracket_xbar(3, Partition(), 2, pt) == Rational(1));
    CHECK(bracket_xbar(1, Partition({1, 1, 1}), 2, pt) == Rational(0));

    // z = (x, ..., x) at unit scales collapses to the closed row product
    std::mt19937_64 rng(7);
    for (const Partition& mu : partitions_up_to_weight(4))
        for (int n = std::max(1, mu.length()); n <= 3; ++n)
            for (long x = -1; x <= 4; ++x)
                with_redraw([&] {
                    const QTPoint p = random_point(rng);
                    const ScaleVector ones(n, Rational(1));
                    const Rational general = bracket(ExponentVector(n, x), ones, mu, n, p);
                    const Rational closed = bracket_xbar(x, mu, n, p);
                    CHECK(general == closed);
                });

    // classical falling product in one dimension
    for (long x = 0; x <= 8; ++x)
        for (long m = 0; m <= 6; ++m) {
            Rational falling(1);
            for (long j = 0; j < m; ++j) falling *= classical_number(x - j, pt.q);
            CHECK(bracket_xbar(x, rectangle(m, 1), 1, pt) == falling);
        }

    // the plain number is the bracket of the one-column shape
    for (int n = 1; n <= 3; ++n)
        with_redraw([&] {
            const QTPoint p = random_point(rng);
            const ExponentVector z = random_exponents(rng, n);
            const Rational number = qt_number(z, n, p);
            const Rational column = bracket(z, ScaleVector(n, Rational(1)), rectangle(1, n), n, p);
            CHECK(number == column);
            const Rational at_ones = qt_number(ExponentVector(n, 1), n, p);
            CHECK(at_ones == Rational(1));
        });
    CHECK(qt_number({4}, 1, pt) == classical_number(4, pt.q));

    // diagonal bracket: closed double product, rectangle reduction, and the
    // shifted-factorial identity [z]_mu = mu! binom(z, mu)
    CHECK(mu_factorial(Partition(), 3, pt) == Rational(1));
    for (long k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n)
            with_redraw([&] {
                const QTPoint p = random_point(rng);
                const Rational general = mu_factorial(rectangle(k, n), n, p);
                const Rational closed = rect_factorial(k, n, p);
                CHECK(general == closed);
            });
    for (const Partition& mu : partitions_up_to_weight(5))
        for (int n = std::max(1, mu.length()); n <= 3; ++n)
            with_redraw([&] {
                const QTPoint p = random_point(rng);
                const ScaleVector ones(n, Rational(1));
                const Rational factorial = mu_factorial(mu, n, p);
                const Rational diagonal = bracket(padded(mu, n), ones, mu, n, p);
                CHECK(factorial == diagonal);
                const ExponentVector z = random_exponents(rng, n);
                const Rational direct = bracket(z, ones, mu, n, p);
                const Rational split = factorial * binom(z, mu, n, p);
                CHECK(direct == split);
            });
}

TEST_CASE("catalan numbers: anchors, rectangles, dual routes") {
    const QTPoint pt(Rational(1, 2), Rational(1, 3));

    // the all-ones shape gives 1 in every dimension
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 5; ++n)
        with_redraw([&] {
            const QTPoint p = random_point(rng);
            const Rational product = catalan(rectangle(1, n), n, p);
            const Rational closed = catalan_rect(1, n, p);
            CHECK(product == Rational(1));
            CHECK(closed == Rational(1));
            if (n <= 4) {
                const Rational summed = catalan_comb(rectangle(1, n), n, p);
                CHECK(summed == Rational(1));
            }
        });

    CHECK(catalan(Partition({2}), 1, pt) == Rational(5, 4));
    CHECK(catalan_rect(2, 1, pt) == Rational(5, 4));

    for (const Partition& lam : partitions_up_to_weight(6)) {
        const int n = lam.length();
        if (n == 0 || n > 3) continue;
        for (int trial = 0; trial < 2; ++trial)
            with_redraw([&] {
                const QTPoint p = random_point(rng);
                const Rational lhs = catalan(lam, n, p);
                const Rational rhs = catalan_comb(lam, n, p);
                CHECK(lhs == rhs);
            });
    }

    for (long k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n)
            with_redraw([&] {
                const QTPoint p = random_point(rng);
                const Rational closed = catalan_rect(k, n, p);
                const Rational general = catalan(rectangle(k, n), n, p);
                CHECK(closed == general);
            });

    // one dimension: quotient of a Gaussian binomial by a classical number
    for (long k = 1; k <= 6; ++k)
        CHECK(catalan(Partition({k}), 1, pt) ==
              gaussian(2 * k, k, pt.q) / classical_number(k + 1, pt.q));

    CHECK_THROWS_AS(catalan(Partition({2, 1}), 3, pt), usage_error);
    CHECK_THROWS_AS(catalan_comb(Partition({2, 1}), 3, pt), usage_error);
}

TEST_CASE("lah coefficients: frozen values and route agreement") {
    const QTPoint pt(Rational(1, 2), Rational(1, 3));

    CHECK(lah_explicit(Partition(), Partition(), 1, pt) == Rational(1));
    CHECK(lah_comb(Partition(), Partition(), 1, pt) == Rational(1));
    CHECK(lah_explicit(Partition({2}), Partition({1}), 1, pt) == Rational(-3));
    CHECK(lah_comb(Partition({2}), Partition({1}), 1, pt) == Rational(-3));

    // diagonal is 1; shapes that do not nest give 0
    std::mt19937_64 rng(123);
    for (const Partition& lam : partitions_up_to_weight(4))
        for (int n = std::max(1, lam.length()); n <= 3; ++n)
            with_redraw([&] {
                const QTPoint p = random_point(rng);
                const Rational diag = lah_explicit(lam, lam, n, p);
                CHECK(diag == Rational(1));
            });
    CHECK(lah_explicit(Partition({2}), Partition({1, 1}), 2, pt) == Rational(0));
    CHECK(lah_comb(Partition({2}), Partition({1, 1}), 2, pt) == Rational(0));

    for (const Partition& lam : partitions_up_to_weight(5))
        for (int n = std::max(1, lam.length()); n <= 3; ++n)
            for (const Partition& mu : subpartitions(lam))
                for (int trial = 0; trial < 2; ++trial)
                    with_redraw([&] {
                        const QTPoint p = random_point(rng);
                        const Rational lhs = lah_explicit(lam, mu, n, p);
                        const Rational rhs = lah_comb(lam, mu, n, p);
                        CHECK(lhs == rhs);
                    });

    // falsifiability: sliding the skew cell (1,2) of (2,1)/(1) one row down in
    // the prefactor must break the agreement
    {
        const Partition lam({2, 1}), mu({1});
        const int n = 2;
        const Rational good =
            one_minus(pt, 1, 1, 2) / (-pt.q * denom_factor(pt, 1, 1, 1));
        const Rational perturbed = pt.qt_pow(0, 1) * one_minus(pt, 1, 1, 1) /
                                   (-pt.q * denom_factor(pt, 1, 1, 0));
        const Rational tweaked = lah_comb(lam, mu, n, pt) / good * perturbed;
        CHECK(tweaked != lah_explicit(lam, mu, n, pt));
    }
}

TEST_CASE("lah expansion closes against the ascending product") {
    const QTPoint pt(Rational(1, 2), Rational(1, 3));

    CHECK(lah_expansion_check(Partition(), 1, pt, {0, 1}));
    CHECK(lah_expansion_check(Partition({1}), 1, pt, {0, 1, 2, 3}));
    CHECK(lah_expansion_check(Partition({2, 1}), 2, pt, {0, 1, 2, 3, 4}));

    std::mt19937_64 rng(31);
    for (const Partition& lam : partitions_up_to_weight(4))
        for (int n = std::max(1, lam.length()); n <= 3; ++n)
            with_redraw([&] {
                const QTPoint p = random_point(rng);
                std::vector<long> xs;
                for (long x = 0; x <= lam.weight() + 1; ++x) xs.push_back(x);
                const bool closes = lah_expansion_check(lam, n, p, xs);
                CHECK(closes);
            });

    CHECK_THROWS_AS(lah_expansion_check(Partition({1}), 1, pt, {}), usage_error);
    CHECK_THROWS_AS(lah_expansion_check(Partition({1, 1}), 1, pt, {0}), usage_error);

    // reciprocal-parameter bracket: one-dimensional rising/falling swap is an
    // explicit power of q
    std::mt19937_64 rng2(53);
    for (long m = 0; m <= 4; ++m)
        for (long x = 0; x <= 4; ++x)
            with_redraw([&] {
                const QTPoint p = random_point(rng2);
                const Rational swap = p.qt_pow(m * (1 - x) + m * (m - 1) / 2, 0);
                const Rational rising = rising_bracket(x, rectangle(m, 1), 1, p);
                const Rational falling = bracket_xbar(x, rectangle(m, 1), 1, p);
                CHECK(rising == swap * falling);
            });
    CHECK(rising_bracket(3, Partition(), 2, pt) == Rational(1));
}

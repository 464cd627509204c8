#pragma once

#include <vector>

#include "partition.hpp"
#include "qpoch.hpp"
#include "rational.hpp"

namespace qtcomb {

// Integer exponent vector (z_1, ..., z_n): the evaluation point is
// z_i -> q^{z_i} t^{n-i}, kept integral so every value stays rational.
using ExponentVector = std::vector<long>;
// Multiplicative scales (s_1, ..., s_n), all nonzero.
using ScaleVector = std::vector<Rational>;

/*
 * Multiple binomial coefficient: normalizing prefactor times the straight
 * w function at the point q^{z_i} t^{n-i}.  The normalization makes the
 * diagonal value 1.  Zero when the shape has more rows than variables.
 */
Rational binom(const ExponentVector& z, const Partition& mu, int n, const QTPoint& pt);

// Same quantity with the evaluation point given directly (entries nonzero);
// lets tests probe generic points that are not of the form q^z t^{n-i}.
Rational binom_at(const std::vector<Rational>& point, const Partition& mu, int n,
                  const QTPoint& pt);

// Tableau-sum route: cell-product prefactor times the weighted sum over
// reversed tableaux of shape mu with entries <= n.
Rational binom_comb(const ExponentVector& z, const Partition& mu, int n, const QTPoint& pt);

// Closed product for rectangular shapes (k, ..., k) of n rows.
Rational binom_rect(const ExponentVector& z, long k, int n, const QTPoint& pt);

/*
 * Factorial (bracket) function: normalizing prefactor times the straight w
 * function at the point s_i q^{z_i} t^{n-i}.  Zero iff the shape has more
 * rows than variables.
 */
Rational bracket(const ExponentVector& z, const ScaleVector& s, const Partition& mu, int n,
                 const QTPoint& pt);

// Tableau-sum route for the bracket.
Rational bracket_comb(const ExponentVector& z, const ScaleVector& s, const Partition& mu,
                      int n, const QTPoint& pt);

// Closed product for the bracket at z = (x, ..., x), s = (1, ..., 1):
// rows of descending-base Pochhammers over the usual denominator powers.
Rational bracket_xbar(long x, const Partition& mu, int n, const QTPoint& pt);

// One-row specialization of the bracket: prod (1 - q^{z_i} t^{n-i}) / (1 - q t^{n-i}).
Rational qt_number(const ExponentVector& z, int n, const QTPoint& pt);

// Diagonal bracket value [mu]_mu as a closed double product; the factorial
// in the shifted-factorial identity [z]_mu = mu! * binom(z, mu).
Rational mu_factorial(const Partition& mu, int n, const QTPoint& pt);

// mu! for the rectangular shape (k, ..., k): one quotient per row.
Rational rect_factorial(long k, int n, const QTPoint& pt);

/*
 * Multiple Catalan number of an n-part shape: the reciprocal bracket of
 * lam+1 (as a closed product) times binom(2*lam, lam).  Shapes with fewer
 * than n parts are rejected; padding would change 2*lam and lam+1.
 */
Rational catalan(const Partition& lam, int n, const QTPoint& pt);

// Tableau-sum route: one-column correction product times the tableau sum
// for binom(2*lam, lam).
Rational catalan_comb(const Partition& lam, int n, const QTPoint& pt);

// Closed product for the rectangular shape (k, ..., k); k = 1 gives 1 in
// every dimension.
Rational catalan_rect(long k, int n, const QTPoint& pt);

// bracket_xbar at the reciprocal parameter point (1/q, 1/t).
Rational rising_bracket(long x, const Partition& lam, int n, const QTPoint& pt);

/*
 * Connection coefficient L(lam, mu): signed monomial times a row quotient,
 * the skew double Pochhammer at base t^{2(n-1)}, and binom(lam, mu).  Zero
 * when mu is not contained in lam.
 */
Rational lah_explicit(const Partition& lam, const Partition& mu, int n, const QTPoint& pt);

// Cell-product route: skew prefactor over lam/mu, the usual mu-cell
// denominators, and the tableau sum with row indices read from lam.
Rational lah_comb(const Partition& lam, const Partition& mu, int n, const QTPoint& pt);

/*
 * Closure check for the connection coefficients: for each x in xs verifies
 * exactly that the alternating sum of lah_explicit against the one-point
 * brackets telescopes to the ascending product
 *   (-1)^{|lam|} q^{-|lam|} t^{n(lam)} (q^x t^{2(n-1)}; q, t)_lam
 *     / prod_i (1 - q t^{n-i})^{lam_i},
 * the sum carrying weights (-1)^{|mu|} q^{-|mu|+2n(mu')} t^{-n(mu)+2(n-1)|mu|}.
 * Since the brackets are linearly independent over enough sample points,
 * agreement pins every coefficient.  True iff all sampled x agree.
 */
bool lah_expansion_check(const Partition& lam, int n, const QTPoint& pt,
                         const std::vector<long>& xs);

} // namespace qtcomb

#pragma once

#include <vector>

#include "partition.hpp"
#include "qpoch.hpp"
#include "rational.hpp"
#include "tableau.hpp"

namespace qtcomb {

// Parameter bundle for the four-parameter W family.
struct WParams {
    QTPoint pt;
    Rational a;
    Rational b;
};

/*
 * The pairwise interaction factor H_{lam/mu}(q,t,b) over an explicit ambient
 * size n (products over 1 <= i < j <= n and the tail column j = n+1).  The
 * value is constant in n once n >= length(mu) + 1; smaller ambients weight
 * the pair differently, which matters to the four-parameter W layer, so the
 * ambient is explicit here.
 */
Rational h_factor_ambient(const Partition& lam, const Partition& mu, const QTPoint& pt,
                          const Rational& b, int n);

// Stabilized form: evaluates at ambient length(mu) + 1, the smallest ambient
// past which the value no longer changes.  b = 0 gives the limiting factor
// that the strip weight psi reproduces.
Rational h_factor(const Partition& lam, const Partition& mu, const QTPoint& pt,
                  const Rational& b);

// One-variable w, from the closed product definition.  0 on non-strips.
Rational w_single(const Rational& x, const Partition& lam, const Partition& mu,
                  const QTPoint& pt);

// One-variable w from the strip-weight cell product.  0 on non-strips.
Rational w_single_comb(const Rational& x, const Partition& lam, const Partition& mu,
                       const QTPoint& pt);

// Multivariable skew w by peeling variables off the front of z:
//   w_{lam/mu}(y, rest) = sum_nu t^{l(|lam|-|nu|)} w_{lam/nu}(y t^{-l}) w_{nu/mu}(rest)
// summed over nu below lam (strip) containing mu, l = |rest|.
Rational w_multi_branch(const std::vector<Rational>& z, const Partition& lam,
                        const Partition& mu, const QTPoint& pt);

// Multivariable straight w as the tableau sum
//   sum_T psi_T prod_s (-x_{T(s)} q^{-1-a'(s)} + q^{-1} t^{n-l'(s)-T(s)}).
Rational w_multi_tableau(const std::vector<Rational>& z, const Partition& lam,
                         const QTPoint& pt);

// Closed forms for three special evaluations of straight w:
// principal point z = q^mu t^{delta(n)} with delta(n) = (n-1, ..., 1, 0);
Rational w_principal(const Partition& mu, int n, const QTPoint& pt);
// rectangular shape (k, ..., k) at arbitrary z of length n;
Rational w_rect(long k, const std::vector<Rational>& z, const QTPoint& pt);
// geometric point z = (x t^{n-1}, ..., x t^0).
Rational w_xbar(const Partition& mu, const Rational& x, int n, const QTPoint& pt);

// Four-parameter one-variable W over ambient n.  0 on non-strips.
Rational W_single(const Rational& x, const Partition& lam, const Partition& mu,
                  const WParams& params, int n);

// Multivariable W through the branching recursion
//   W_{lam/mu}(y, rest) = sum_nu W_{lam/nu}(y t^{-l}; a t^{2l}, b t^l) W_{nu/mu}(rest; a, b)
// over the same index set as w_multi_branch, ambient n fixed throughout.
Rational W_multi(const std::vector<Rational>& z, const Partition& lam, const Partition& mu,
                 const WParams& params, int n);

// Cross-checks every product-to-cell-product rewrite used by the
// combinatorial formulas (nine identities) at the given inputs.  The vector
// identity gets the synthetic variables x_i = x + (i-1) y.
bool verify_factor_lemmas(const Partition& lam, int n, const QTPoint& pt, const Rational& x,
                          const Rational& y);

} // namespace qtcomb

#pragma once

#include "partition.hpp"
#include "rational.hpp"

namespace qtcomb {

// (a; q)_m = prod_{k=0}^{m-1} (1 - a q^k). Plain finite product, m >= 0.
Rational qpoch(const Rational& a, const Rational& q, long m);

// (a; q, t)_lam = prod_{i=1}^{n} (a t^{1-i}; q)_{lam_i}. Rows past length(lam)
// contribute empty products; requires length(lam) <= n.
Rational qt_poch(const Rational& a, const QTPoint& pt, const Partition& lam, int n);

// Finite q-shifted factorial (c*q^eq*t^et; q)_m = prod_{k=0}^{m-1} (1 - c q^{eq+k} t^et).
// Negative m uses the reciprocal extension (a;q)_{-m} = prod_{k=1}^{m} 1/(1 - a q^{-k});
// those reciprocal factors, and all factors when as_denominator is set, throw
// denominator_vanishes instead of producing zero.
Rational qpoch(const QTPoint& pt, const Rational& c, long eq, long et, long m,
               bool as_denominator = false);

// Double-base version over a partition:
// (c*q^eq*t^et; q, t)_lam = prod_i (c q^eq t^{et+1-i}; q)_{lam_i}.
Rational qt_poch(const QTPoint& pt, const Rational& c, long eq, long et,
                 const Partition& lam, bool as_denominator = false);

// Exact quotient (a; q, t)_lam / (a; q, t)_mu for mu_i <= lam_i rowwise, computed as
// the skew product prod_i prod_{k=mu_i}^{lam_i-1} (1 - a q^k t^{1-i}) so that common
// factors never materialize (and never fake a singularity).
Rational qt_poch_ratio(const QTPoint& pt, const Rational& c, long eq, long et,
                       const Partition& lam, const Partition& mu);

} // namespace qtcomb

#pragma once

#include <functional>
#include <vector>

#include "partition.hpp"
#include "qpoch.hpp"
#include "rational.hpp"

namespace qtcomb {

/*
 * Reversed semistandard tableau: entries from {1..n}, weakly decreasing along
 * rows, strictly decreasing down columns.  Stored row-major; row i holds
 * shape.part(i+1)... entries follow the shape exactly.
 */
struct ReversedTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    int n = 0;

    int entry(Cell s) const { return rows[s.row - 1][s.col - 1]; }
};

bool is_valid_rssyt(const ReversedTableau& T);

// "[[2,2],[1]]"; empty tableau is "[]".
std::string tableau_str(const ReversedTableau& T);

// Chain emptyset = c[0], c[1], ..., c[n] = shape with each consecutive pair a
// horizontal strip.  Cells of c[k]/c[k-1] carry entry n-k+1, so the largest
// entries are placed first and c[k] holds the cells with entries >= n-k+1.
using StripChain = std::vector<Partition>;

std::vector<StripChain> strip_chains(const Partition& shape, int n);

ReversedTableau chain_to_tableau(const StripChain& chain);
StripChain tableau_to_chain(const ReversedTableau& T);

// Every reversed tableau of the shape with entries <= n, one per strip chain.
std::vector<ReversedTableau> enumerate_rssyt(const Partition& shape, int n);

// b_lam(s) = (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l).
Rational b_factor(const Partition& lam, Cell s, const QTPoint& pt);

// psi over the squares of mu lying in a row the strip meets but no column it
// meets, each contributing b_mu(s)/b_lam(s).
Rational psi_strip(const Partition& lam, const Partition& mu, const QTPoint& pt);

// Same quantity from the double product of f-quotients over 1 <= i <= j <=
// length(mu), with every f-quotient collapsed to a finite q-Pochhammer ratio.
Rational psi_strip_algebraic(const Partition& lam, const Partition& mu, const QTPoint& pt);

// Product of psi_strip along the decomposition sequence of T.
Rational psi_tableau(const ReversedTableau& T, const QTPoint& pt);

// sum over tableaux of psi_T times the product of per-cell weights; the
// weight may depend on the cell (via its colengths) and its entry.  Computed
// by peeling strips, memoized on (intermediate shape, entries left), so
// formulas sharing a shape prefix are not re-enumerated.
using CellWeight = std::function<Rational(Cell s, int entry)>;
Rational tableau_sum(const Partition& shape, int n, const QTPoint& pt, const CellWeight& w);

} // namespace qtcomb

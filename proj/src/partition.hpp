#ifndef QTCOMB_PARTITION_HPP
#define QTCOMB_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qtcomb {

/*
 * Integer partition: weakly decreasing positive parts.  Trailing zeros are
 * stripped on construction, so (3,1,0,0) and (3,1) are the same value.
 * part(i) is 1-based and returns 0 past the last part, which keeps the
 * "pad with zeros" convention of the formulas implicit.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    // "3,1" -> (3,1); "" and "0" -> empty partition.
    static Partition parse(const std::string& text);
    std::string str() const;

    long weight() const;              // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long part(int i) const;           // 1-based, 0 beyond length
    const std::vector<long>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;   // mu_i <= lambda_i for all i

    long n_stat() const;        // n(lambda)  = sum (i-1) lambda_i
    long n_conj_stat() const;   // n(lambda') = sum C(lambda_i, 2)

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<long> parts_;
};

// Cell (i, j) of a Young diagram, 1-based: row i, column j.
struct Cell {
    int row;
    int col;
};

// arm a = lambda_i - j, leg l = lambda'_j - i, colengths a' = j-1, l' = i-1.
struct CellStats {
    long arm;
    long leg;
    long arm_co;
    long leg_co;
};

struct WeightStats {
    long weight;
    long n;       // n(lambda)
    long n_conj;  // n(lambda')
};

CellStats cell_stats(const Partition& lam, Cell s);
WeightStats weight_stats(const Partition& lam);

std::vector<Cell> cells(const Partition& lam);                          // row-major
std::vector<Cell> skew_cells(const Partition& lam, const Partition& mu); // cells of lam not in mu

// Horizontal strip lam/mu: the interlacing lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...
// (at most one cell per column).  Requires mu inside lam implicitly.
bool is_horizontal_strip(const Partition& lam, const Partition& mu);

// All nu with nu interlaced below lam (nu "precedes" lam: lam/nu a horizontal
// strip).  With cap, restrict to nu whose own predecessor set admits cap,
// i.e. cap interlaced below nu as well.  Deterministic order: each nu_i runs
// from its upper bound downward, so the first entry is lam itself (cap
// permitting) and the last is the minimal allowed partition.
std::vector<Partition> interlacing_predecessors(const Partition& lam,
                                                const std::optional<Partition>& cap = std::nullopt);

// Enumeration grids for tests and verification drivers.
std::vector<Partition> partitions_up_to_weight(long max_weight);  // includes the empty partition
std::vector<Partition> subpartitions(const Partition& lam);       // all mu contained in lam

} // namespace qtcomb

#endif

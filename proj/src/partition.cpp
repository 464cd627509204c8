#include "partition.hpp"

#include <algorithm>
#include <sstream>

namespace qtcomb {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw usage_error("partition part is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw usage_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<long> parts;
    if (text.empty() || text == "0") return Partition(parts);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw usage_error("cannot parse partition: '" + text + "'");
        }
        if (used != item.size()) throw usage_error("cannot parse partition: '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long Partition::weight() const {
    long w = 0;
    for (long p : parts_) w += p;
    return w;
}

long Partition::part(int i) const {
    if (i < 1) throw usage_error("partition parts are 1-indexed");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<long> conj;
    if (parts_.empty()) return Partition(conj);
    conj.resize(static_cast<size_t>(parts_[0]));
    for (long j = 1; j <= parts_[0]; ++j) {
        long count = 0;
        for (long p : parts_)
            if (p >= j) ++count;
        conj[static_cast<size_t>(j - 1)] = count;
    }
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

long Partition::n_stat() const {
    long acc = 0;
    for (int i = 1; i <= length(); ++i) acc += (i - 1) * part(i);
    return acc;
}

long Partition::n_conj_stat() const {
    long acc = 0;
    for (long p : parts_) acc += p * (p - 1) / 2;
    return acc;
}

CellStats cell_stats(const Partition& lam, Cell s) {
    if (s.row < 1 || s.col < 1 || s.col > lam.part(s.row))
        throw usage_error("cell outside the diagram");
    const Partition conj = lam.conjugate();
    return CellStats{
        lam.part(s.row) - s.col,
        conj.part(s.col) - s.row,
        static_cast<long>(s.col) - 1,
        static_cast<long>(s.row) - 1,
    };
}

WeightStats weight_stats(const Partition& lam) {
    return WeightStats{lam.weight(), lam.n_stat(), lam.n_conj_stat()};
}

std::vector<Cell> cells(const Partition& lam) {
    std::vector<Cell> out;
    for (int i = 1; i <= lam.length(); ++i)
        for (long j = 1; j <= lam.part(i); ++j)
            out.push_back(Cell{i, static_cast<int>(j)});
    return out;
}

std::vector<Cell> skew_cells(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) throw usage_error("skew cells require mu inside lam");
    std::vector<Cell> out;
    for (int i = 1; i <= lam.length(); ++i)
        for (long j = mu.part(i) + 1; j <= lam.part(i); ++j)
            out.push_back(Cell{i, static_cast<int>(j)});
    return out;
}

bool is_horizontal_strip(const Partition& lam, const Partition& mu) {
    int rows = std::max(lam.length(), mu.length());
    for (int i = 1; i <= rows; ++i) {
        if (lam.part(i) < mu.part(i)) return false;       // containment
        if (mu.part(i) < lam.part(i + 1)) return false;   // interlacing
    }
    return true;
}

std::vector<Partition> interlacing_predecessors(const Partition& lam,
                                                const std::optional<Partition>& cap) {
    // nu_i ranges over [max(lam_{i+1}, cap_i), min(lam_i, cap_{i-1})], each
    // coordinate independent; interlacing makes every choice a partition.
    const int rows = lam.length();
    if (cap && cap->length() > rows) return {};
    std::vector<long> lo(rows), hi(rows);
    for (int i = 1; i <= rows; ++i) {
        lo[i - 1] = lam.part(i + 1);
        hi[i - 1] = lam.part(i);
        if (cap) {
            lo[i - 1] = std::max(lo[i - 1], cap->part(i));
            if (i >= 2) hi[i - 1] = std::min(hi[i - 1], cap->part(i - 1));
        }
        if (lo[i - 1] > hi[i - 1]) return {};
    }
    std::vector<Partition> out;
    std::vector<long> cur(rows);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == rows) {
            out.push_back(Partition(cur));
            return;
        }
        for (long v = hi[idx]; v >= lo[idx]; --v) {
            cur[idx] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Partition> partitions_up_to_weight(long max_weight) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        out.push_back(Partition(cur));
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, max_weight, max_weight);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return b < a; // within a weight class: lexicographically decreasing
    });
    return out;
}

std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<long> cur;
    const int rows = lam.length();
    auto rec = [&](auto&& self, int i) -> void {
        if (i > rows) {
            out.push_back(Partition(cur));
            return;
        }
        long cap = std::min(lam.part(i), i >= 2 ? cur[i - 2] : lam.part(1));
        for (long v = cap; v >= 0; --v) {
            if (v == 0) {
                out.push_back(Partition(cur));
                return; // all later parts forced to zero
            }
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace qtcomb

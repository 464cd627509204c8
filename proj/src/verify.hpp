#ifndef QTCOMB_VERIFY_HPP
#define QTCOMB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qtcomb {

// One named identity family checked over a bounded grid of shapes, variable
// counts, and random rational sample points.
struct CheckGroupResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::string first_failure;  // reproduction data for the first mismatch, empty if clean
};

struct VerifyReport {
    std::string suite;
    long max_weight = 0;
    int max_n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<CheckGroupResult> groups;  // sorted by group name

    bool all_passed() const;
    long total_checks() const;
    long total_failures() const;
};

// Group names a suite runs, in report order.  Suites: all, w, binom, bracket,
// catalan, lah, lemmas.  Unknown names raise usage_error.
std::vector<std::string> suite_groups(const std::string& suite);

// Runs a single check group at the given bounds.  Every group draws from its
// own generator seeded by (seed, group name), so results are reproducible and
// do not depend on which suite, or what execution order, invoked the group.
CheckGroupResult run_group(const std::string& name, long max_weight, int max_n, int trials,
                           std::uint64_t seed);

VerifyReport run_verify(const std::string& suite, long max_weight, int max_n, int trials,
                        std::uint64_t seed);

} // namespace qtcomb

#endif

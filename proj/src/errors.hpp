#ifndef QTCOMB_ERRORS_HPP
#define QTCOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtcomb {

// A denominator factor of the form 1 - c * q^eq * t^et evaluated to zero.
// The (eq, et) signature is kept so front ends can report which factor died.
class denominator_vanishes : public std::runtime_error {
public:
    denominator_vanishes(std::string factor, long q_exp, long t_exp)
        : std::runtime_error("denominator vanishes: " + factor + " = 0"),
          factor_(std::move(factor)), q_exp_(q_exp), t_exp_(t_exp) {}

    const std::string& factor() const noexcept { return factor_; }
    long q_exp() const noexcept { return q_exp_; }
    long t_exp() const noexcept { return t_exp_; }

private:
    std::string factor_;
    long q_exp_;
    long t_exp_;
};

// Skew pair fed to a strip-only formula is not a horizontal strip.
class not_a_strip : public std::invalid_argument {
public:
    explicit not_a_strip(const std::string& what) : std::invalid_argument(what) {}
};

// Caller broke a documented precondition (bad lengths, zero where nonzero required, ...).
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qtcomb

#endif

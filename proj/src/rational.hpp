#ifndef QTCOMB_RATIONAL_HPP
#define QTCOMB_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qtcomb {

/*
 * Exact rational number backed by GMP.  Always kept canonical: lowest
 * terms, positive denominator, zero stored as 0/1.  Serialized form is
 * "num/den", or just "num" when the denominator is 1.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q", "-p/q" with decimal digits; rejects anything else.
    static Rational parse(const std::string& text);

    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational reciprocal() const;

    // x^e for integer e of either sign; 0^e with e < 0 is a usage error, 0^0 = 1.
    Rational pow(long e) const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact integer power, negative exponents allowed for nonzero base.
inline Rational ipow(const Rational& x, long k) { return x.pow(k); }

// Evaluation point (q, t).  Both parameters nonzero and not 1, so that the
// factors 1 - q^a t^b with (a, b) != (0, 0) that pervade every formula have a
// chance of being nonzero.
struct QTPoint {
    Rational q;
    Rational t;

    QTPoint(Rational q_, Rational t_);

    // q^eq * t^et, exact for exponents of either sign.
    Rational qt_pow(long eq, long et) const { return q.pow(eq) * t.pow(et); }

    QTPoint reciprocal() const { return QTPoint(q.reciprocal(), t.reciprocal()); }
};

// 1 - c * q^eq * t^et.
Rational one_minus(const QTPoint& pt, const Rational& c, long eq, long et);

// Same factor, but a zero value throws denominator_vanishes carrying the
// (eq, et) signature.  Use for factors destined for a denominator.
Rational denom_factor(const QTPoint& pt, const Rational& c, long eq, long et);

std::string join_rationals(const std::vector<Rational>& v, char sep = ',');
std::vector<Rational> parse_rational_list(const std::string& text);

} // namespace qtcomb

#endif

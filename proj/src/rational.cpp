#include "rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qtcomb {

Rational::Rational(long num, long den) {
    if (den == 0) throw usage_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw usage_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw usage_error("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw usage_error("zero raised to a negative power");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                             : static_cast<unsigned long>(e);
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), k);
    r.canonicalize(); // sign of the denominator moves to the numerator
    Rational out{r};
    return invert ? out.reciprocal() : out;
}

static bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw usage_error("cannot parse rational: '" + text + "'");
    mpq_class v(num + "/" + den);
    if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
        throw usage_error("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    if (neg) v = -v;
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

QTPoint::QTPoint(Rational q_, Rational t_) : q(std::move(q_)), t(std::move(t_)) {
    if (q.is_zero() || q.is_one() || t.is_zero() || t.is_one())
        throw usage_error("parameter point requires q, t outside {0, 1}");
}

Rational one_minus(const QTPoint& pt, const Rational& c, long eq, long et) {
    return Rational(1) - c * pt.qt_pow(eq, et);
}

Rational denom_factor(const QTPoint& pt, const Rational& c, long eq, long et) {
    Rational f = one_minus(pt, c, eq, et);
    if (f.is_zero()) {
        std::ostringstream os;
        os << "1 - ";
        if (!c.is_one()) os << "(" << c << ")*";
        os << "q^" << eq << "*t^" << et;
        throw denominator_vanishes(os.str(), eq, et);
    }
    return f;
}

std::string join_rationals(const std::vector<Rational>& v, char sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].str();
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Rational::parse(item));
    return out;
}

} // namespace qtcomb

#include "qtcomb/qtcomb.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "numbers.hpp"
#include "verify.hpp"
#include "wfun.hpp"

struct qtc_evaluator {
    qtcomb::QTPoint pt;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string t_last_error = "{}";

void set_error(int code, const char* name, const std::string& message,
               const qtcomb::denominator_vanishes* dv = nullptr) {
    json j;
    j["code"] = code;
    j["name"] = name;
    j["message"] = message;
    if (dv) {
        j["factor"] = {{"text", dv->factor()}, {"q_exp", dv->q_exp()}, {"t_exp", dv->t_exp()}};
    }
    t_last_error = j.dump();
}

// Every entry point funnels through here so the status-code mapping is one
// table: precondition breakage (including non-strips) is usage, vanishing
// denominators are singular, anything else internal.
template <typename F>
qtc_status guarded(F&& body) {
    try {
        return body();
    } catch (const qtcomb::denominator_vanishes& e) {
        set_error(QTC_ERR_SINGULAR, "singular", e.what(), &e);
        return QTC_ERR_SINGULAR;
    } catch (const qtcomb::not_a_strip& e) {
        set_error(QTC_ERR_USAGE, "usage", e.what());
        return QTC_ERR_USAGE;
    } catch (const qtcomb::usage_error& e) {
        set_error(QTC_ERR_USAGE, "usage", e.what());
        return QTC_ERR_USAGE;
    } catch (const std::exception& e) {
        set_error(QTC_ERR_INTERNAL, "internal", e.what());
        return QTC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* message) {
    if (!ok) throw qtcomb::usage_error(message);
}

qtcomb::Partition parse_shape(const char* text) {
    return qtcomb::Partition::parse(text ? text : "");
}

std::vector<qtcomb::Rational> parse_rationals(const char* text, const char* what) {
    require(text != nullptr && *text != '\0', what);
    return qtcomb::parse_rational_list(text);
}

qtcomb::ExponentVector parse_exponents(const char* text) {
    require(text != nullptr && *text != '\0', "z (comma-separated integers) is required");
    qtcomb::ExponentVector z;
    std::string item;
    for (const char* p = text;; ++p) {
        if (*p == ',' || *p == '\0') {
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(item, &used);
            } catch (const std::exception&) {
                throw qtcomb::usage_error("bad integer entry: " + item);
            }
            if (used != item.size()) throw qtcomb::usage_error("bad integer entry: " + item);
            z.push_back(value);
            item.clear();
            if (*p == '\0') break;
        } else {
            item += *p;
        }
    }
    return z;
}

bool algebraic_route(const char* route) {
    const std::string r = route ? route : "algebraic";
    if (r == "algebraic") return true;
    if (r == "combinatorial") return false;
    throw qtcomb::usage_error("route must be \"algebraic\" or \"combinatorial\"");
}

qtc_status write_value(char** out, const qtcomb::Rational& value) {
    *out = dup_string(value.str());
    if (*out == nullptr) {
        set_error(QTC_ERR_INTERNAL, "internal", "out of memory");
        return QTC_ERR_INTERNAL;
    }
    return QTC_OK;
}

json report_json(const qtcomb::VerifyReport& report) {
    json groups = json::array();
    for (const qtcomb::CheckGroupResult& g : report.groups) {
        json row;
        row["name"] = g.name;
        row["checks"] = g.checks;
        row["failures"] = g.failures;
        if (!g.first_failure.empty()) row["first_failure"] = g.first_failure;
        groups.push_back(row);
    }
    json j;
    j["suite"] = report.suite;
    j["max_weight"] = report.max_weight;
    j["max_n"] = report.max_n;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["all_passed"] = report.all_passed();
    j["total_checks"] = report.total_checks();
    j["total_failures"] = report.total_failures();
    j["groups"] = groups;
    return j;
}

} // namespace

extern "C" {

qtc_status qtc_evaluator_new(const char* q, const char* t, qtc_evaluator** out) {
    return guarded([&]() -> qtc_status {
        require(out != nullptr, "out pointer is required");
        require(q != nullptr && t != nullptr, "q and t are required");
        const qtcomb::Rational rq = qtcomb::Rational::parse(q);
        const qtcomb::Rational rt = qtcomb::Rational::parse(t);
        require(!rq.is_zero() && !rt.is_zero(), "q and t must be nonzero");
        *out = new qtc_evaluator{qtcomb::QTPoint(rq, rt)};
        return QTC_OK;
    });
}

void qtc_evaluator_free(qtc_evaluator* ev) {
    delete ev;
}

qtc_status qtc_psi(const qtc_evaluator* ev, const char* lam, const char* mu,
                   const char* route, char** out) {
    return guarded([&]() -> qtc_status {
        require(ev != nullptr && out != nullptr, "evaluator and out pointer are required");
        const qtcomb::Partition L = parse_shape(lam);
        const qtcomb::Partition M = parse_shape(mu);
        const qtcomb::Rational v = algebraic_route(route)
                                       ? qtcomb::psi_strip_algebraic(L, M, ev->pt)
                                       : qtcomb::psi_strip(L, M, ev->pt);
        return write_value(out, v);
    });
}

qtc_status qtc_w(const qtc_evaluator* ev, const char* z, const char* lam,
                 const char* mu, const char* route, char** out) {
    return guarded([&]() -> qtc_status {
        require(ev != nullptr && out != nullptr, "evaluator and out pointer are required");
        const std::vector<qtcomb::Rational> vars =
            parse_rationals(z, "z (comma-separated rationals) is required");
        const qtcomb::Partition L = parse_shape(lam);
        const qtcomb::Partition M = parse_shape(mu);
        qtcomb::Rational v;
        if (algebraic_route(route)) {
            v = qtcomb::w_multi_branch(vars, L, M, ev->pt);
        } else if (M.empty()) {
            v = qtcomb::w_multi_tableau(vars, L, ev->pt);
        } else if (vars.size() == 1) {
            v = qtcomb::w_single_comb(vars[0], L, M, ev->pt);
        } else {
            throw qtcomb::usage_error(
                "combinatorial route supports a nonempty inner shape only for one variable");
        }
        return write_value(out, v);
    });
}

qtc_status qtc_w_poised(const qtc_evaluator* ev, const char* z, const char* lam,
                        const char* mu, const char* a, const char* b, int n,
                        char** out) {
    return guarded([&]() -> qtc_status {
        require(ev != nullptr && out != nullptr, "evaluator and out pointer are required");
        require(n >= 1, "n must be positive");
        const std::vector<qtcomb::Rational> vars =
            parse_rationals(z, "z (comma-separated rationals) is required");
        require(a != nullptr && b != nullptr, "parameters a and b are required");
        const qtcomb::WParams params{ev->pt, qtcomb::Rational::parse(a),
                                     qtcomb::Rational::parse(b)};
        const qtcomb::Rational v =
            qtcomb::W_multi(vars, parse_shape(lam), parse_shape(mu), params, n);
        return write_value(out, v);
    });
}

qtc_status qtc_binom(const qtc_evaluator* ev, const char* z, const char* mu,
                     int n, const char* route, char** out) {
    return guarded([&]() -> qtc_status {
        require(ev != nullptr && out != nullptr, "evaluator and out pointer are required");
        require(n >= 1, "n must be positive");
        const qtcomb::ExponentVector exps = parse_exponents(z);
        const qtcomb::Partition M = parse_shape(mu);
        const qtcomb::Rational v = algebraic_route(route)
                                       ? qtcomb::binom(exps, M, n, ev->pt)
                                       : qtcomb::binom_comb(exps, M, n, ev->pt);
        return write_value(out, v);
    });
}

qtc_status qtc_bracket(const qtc_evaluator* ev, const char* z, const char* s,
                       const char* mu, int n, const char* route, char** out) {
    return guarded([&]() -> qtc_status {
        require(ev != nullptr && out != nullptr, "evaluator and out pointer are required");
        require(n >= 1, "n must be positive");
        const qtcomb::ExponentVector exps = parse_exponents(z);
        qtcomb::ScaleVector scales;
        if (s == nullptr || *s == '\0') {
            scales.assign(static_cast<std::size_t>(n), qtcomb::Rational(1));
        } else {
            scales = qtcomb::parse_rational_list(s);
        }
        const qtcomb::Partition M = parse_shape(mu);
        const qtcomb::Rational v = algebraic_route(route)
                                       ? qtcomb::bracket(exps, scales, M, n, ev->pt)
                                       : qtcomb::bracket_comb(exps, scales, M, n, ev->pt);
        return write_value(out, v);
    });
}

qtc_status qtc_catalan(const qtc_evaluator* ev, const char* lam, int n,
                       const char* route, char** out) {
    return guarded([&]() -> qtc_status {
        require(ev != nullptr && out != nullptr, "evaluator and out pointer are required");
        require(n >= 1, "n must be positive");
        const qtcomb::Partition L = parse_shape(lam);
        const qtcomb::Rational v = algebraic_route(route) ? qtcomb::catalan(L, n, ev->pt)
                                                          : qtcomb::catalan_comb(L, n, ev->pt);
        return write_value(out, v);
    });
}

qtc_status qtc_lah(const qtc_evaluator* ev, const char* lam, const char* mu,
                   int n, const char* route, char** out) {
    return guarded([&]() -> qtc_status {
        require(ev != nullptr && out != nullptr, "evaluator and out pointer are required");
        require(n >= 1, "n must be positive");
        const qtcomb::Partition L = parse_shape(lam);
        const qtcomb::Partition M = parse_shape(mu);
        const qtcomb::Rational v = algebraic_route(route)
                                       ? qtcomb::lah_explicit(L, M, n, ev->pt)
                                       : qtcomb::lah_comb(L, M, n, ev->pt);
        return write_value(out, v);
    });
}

qtc_status qtc_verify(const char* suite, long max_weight, int max_n, int trials,
                      unsigned long long seed, char** report_out) {
    return guarded([&]() -> qtc_status {
        require(report_out != nullptr, "out pointer is required");
        const qtcomb::VerifyReport report = qtcomb::run_verify(
            suite ? suite : "all", max_weight, max_n, trials, seed);
        *report_out = dup_string(report_json(report).dump(2));
        if (*report_out == nullptr) {
            set_error(QTC_ERR_INTERNAL, "internal", "out of memory");
            return QTC_ERR_INTERNAL;
        }
        return report.all_passed() ? QTC_OK : QTC_VERIFY_FAILED;
    });
}

const char* qtc_last_error(void) {
    return t_last_error.c_str();
}

void qtc_string_free(char* s) {
    std::free(s);
}

} // extern "C"

#include <chrono>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtcomb/qtcomb.h"

namespace {

using json = nlohmann::ordered_json;

// Field list preserving insertion order, so plain and CSV output have a
// stable column layout and fixed input gives byte-identical output.
using Fields = std::vector<std::pair<std::string, std::string>>;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit(const Fields& fields, const std::string& format) {
    if (format == "json") {
        json j;
        for (const auto& [key, value] : fields) {
            if (value == "true" || value == "false")
                j[key] = value == "true";
            else if (key == "n" || key == "timing_ms")
                j[key] = std::stol(value);
            else
                j[key] = value;
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::string header, row;
        for (const auto& [key, value] : fields) {
            if (!header.empty()) {
                header += ",";
                row += ",";
            }
            header += csv_escape(key);
            row += csv_escape(value);
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        for (const auto& [key, value] : fields) std::cout << key << ": " << value << "\n";
    }
}

// On failure the library left a JSON description; forward it to stderr and
// reuse the status value as the exit code (0 ok, 1 verify failure, 2 usage,
// 3 singular point, 4 internal).
int fail(qtc_status status) {
    std::cerr << qtc_last_error() << "\n";
    return static_cast<int>(status);
}

int fail_usage(const std::string& message) {
    json j;
    j["code"] = QTC_ERR_USAGE;
    j["name"] = "usage";
    j["message"] = message;
    std::cerr << j.dump() << "\n";
    return static_cast<int>(QTC_ERR_USAGE);
}

struct ComputeRequest {
    std::string kind;
    std::string lambda;
    std::string mu;
    std::string z;
    std::string s;
    std::string a;
    std::string b;
    std::string q;
    std::string t;
    std::string route;  // empty means: both where available, else algebraic
    int n = 0;
    std::string format = "plain";
    bool timing = false;
};

// One evaluation through the C surface; value lands in `out`.
qtc_status call_kind(const qtc_evaluator* ev, const ComputeRequest& r,
                     const std::string& route, char** out) {
    const char* rt = route.c_str();
    if (r.kind == "psi") return qtc_psi(ev, r.lambda.c_str(), r.mu.c_str(), rt, out);
    if (r.kind == "w") return qtc_w(ev, r.z.c_str(), r.lambda.c_str(), r.mu.c_str(), rt, out);
    if (r.kind == "binom") return qtc_binom(ev, r.z.c_str(), r.mu.c_str(), r.n, rt, out);
    if (r.kind == "bracket")
        return qtc_bracket(ev, r.z.c_str(), r.s.empty() ? nullptr : r.s.c_str(), r.mu.c_str(),
                           r.n, rt, out);
    if (r.kind == "catalan") return qtc_catalan(ev, r.lambda.c_str(), r.n, rt, out);
    if (r.kind == "lah") return qtc_lah(ev, r.lambda.c_str(), r.mu.c_str(), r.n, rt, out);
    if (r.kind == "W")
        return qtc_w_poised(ev, r.z.c_str(), r.lambda.c_str(), r.mu.c_str(), r.a.c_str(),
                            r.b.c_str(), r.n, out);
    return QTC_ERR_USAGE;
}

std::string take(char* raw) {
    std::string s = raw ? raw : "";
    qtc_string_free(raw);
    return s;
}

int run_compute(const ComputeRequest& req) {
    ComputeRequest r = req;

    // the recurrence layer has a single evaluation path
    if (r.kind == "W") {
        if (r.route.empty() || r.route == "algebraic") {
            r.route = "algebraic";
        } else {
            return fail_usage("kind W has only the algebraic route");
        }
        if (r.a.empty() || r.b.empty())
            return fail_usage("kind W needs --a and --b");
    } else if (r.route.empty()) {
        r.route = "both";
    }
    if (r.route != "algebraic" && r.route != "combinatorial" && r.route != "both")
        return fail_usage("route must be algebraic, combinatorial, or both");

    qtc_evaluator* ev = nullptr;
    const qtc_status st = qtc_evaluator_new(r.q.c_str(), r.t.c_str(), &ev);
    if (st != QTC_OK) return fail(st);

    Fields fields;
    fields.emplace_back("kind", r.kind);
    if (!r.lambda.empty()) fields.emplace_back("lambda", r.lambda);
    if (!r.mu.empty()) fields.emplace_back("mu", r.mu);
    if (r.n > 0) fields.emplace_back("n", std::to_string(r.n));
    if (!r.z.empty()) fields.emplace_back("z", r.z);
    if (!r.s.empty()) fields.emplace_back("s", r.s);
    if (!r.a.empty()) fields.emplace_back("a", r.a);
    if (!r.b.empty()) fields.emplace_back("b", r.b);
    fields.emplace_back("q", r.q);
    fields.emplace_back("t", r.t);
    fields.emplace_back("route", r.route);

    const auto start = std::chrono::steady_clock::now();
    bool mismatch = false;
    if (r.route == "both") {
        char* raw_a = nullptr;
        qtc_status sa = call_kind(ev, r, "algebraic", &raw_a);
        if (sa != QTC_OK) {
            qtc_evaluator_free(ev);
            return fail(sa);
        }
        char* raw_c = nullptr;
        qtc_status sc = call_kind(ev, r, "combinatorial", &raw_c);
        if (sc != QTC_OK) {
            qtc_string_free(raw_a);
            qtc_evaluator_free(ev);
            return fail(sc);
        }
        const std::string va = take(raw_a);
        const std::string vc = take(raw_c);
        mismatch = va != vc;
        fields.emplace_back("value_algebraic", va);
        fields.emplace_back("value_combinatorial", vc);
        fields.emplace_back("equal", mismatch ? "false" : "true");
    } else {
        char* raw = nullptr;
        const qtc_status sv = call_kind(ev, r, r.route, &raw);
        if (sv != QTC_OK) {
            qtc_evaluator_free(ev);
            return fail(sv);
        }
        fields.emplace_back("value", take(raw));
    }
    if (r.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        fields.emplace_back("timing_ms", std::to_string(ms));
    }
    qtc_evaluator_free(ev);

    emit(fields, r.format);
    return mismatch ? 1 : 0;
}

struct VerifyRequest {
    std::string suite = "all";
    long max_weight = 5;
    int max_n = 3;
    int trials = 3;
    unsigned long long seed = 0;
    std::string format = "plain";
};

int run_verify_cmd(const VerifyRequest& r) {
    char* raw = nullptr;
    const qtc_status st =
        qtc_verify(r.suite.c_str(), r.max_weight, r.max_n, r.trials, r.seed, &raw);
    if (st != QTC_OK && st != QTC_VERIFY_FAILED) return fail(st);

    const json report = json::parse(take(raw));
    if (r.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else if (r.format == "csv") {
        std::cout << "group,checks,failures,first_failure\n";
        for (const auto& g : report.at("groups")) {
            const std::string first =
                g.contains("first_failure") ? g.at("first_failure").get<std::string>() : "";
            std::cout << csv_escape(g.at("name").get<std::string>()) << ","
                      << g.at("checks").get<long>() << "," << g.at("failures").get<long>() << ","
                      << csv_escape(first) << "\n";
        }
    } else {
        std::cout << "suite: " << report.at("suite").get<std::string>()
                  << "  max_weight: " << report.at("max_weight").get<long>()
                  << "  max_n: " << report.at("max_n").get<int>()
                  << "  trials: " << report.at("trials").get<int>()
                  << "  seed: " << report.at("seed").get<unsigned long long>() << "\n";
        for (const auto& g : report.at("groups")) {
            std::cout << g.at("name").get<std::string>() << ": "
                      << g.at("checks").get<long>() << " checks, "
                      << g.at("failures").get<long>() << " failures\n";
            if (g.contains("first_failure"))
                std::cout << "  first: " << g.at("first_failure").get<std::string>() << "\n";
        }
        std::cout << "TOTAL: " << report.at("total_checks").get<long>() << " checks, "
                  << report.at("total_failures").get<long>() << " failures, "
                  << (report.at("all_passed").get<bool>() ? "PASS" : "FAIL") << "\n";
    }
    return static_cast<int>(st);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact qt-combinatorial numbers: compute values and cross-verify formulas"};
    app.require_subcommand(1);

    ComputeRequest creq;
    CLI::App* compute = app.add_subcommand(
        "compute", "evaluate one quantity; route 'both' cross-checks the two formulas");
    compute
        ->add_option("kind", creq.kind,
                     "one of: w, W, binom, bracket, catalan, lah, psi")
        ->required()
        ->check(CLI::IsMember({"w", "W", "binom", "bracket", "catalan", "lah", "psi"}));
    compute->add_option("--lambda", creq.lambda, "outer shape, e.g. 3,1");
    compute->add_option("--mu", creq.mu, "inner shape");
    compute->add_option("--n", creq.n, "ambient dimension");
    compute->add_option("--z", creq.z,
                        "variables: rationals for w/W, integer exponents for binom/bracket");
    compute->add_option("--s", creq.s, "bracket scale factors (default: all 1)");
    compute->add_option("--a", creq.a, "first parameter for kind W");
    compute->add_option("--b", creq.b, "second parameter for kind W");
    compute->add_option("--q", creq.q, "q as an exact rational")->required();
    compute->add_option("--t", creq.t, "t as an exact rational")->required();
    compute->add_option("--route", creq.route, "algebraic, combinatorial, or both");
    compute->add_option("--format", creq.format, "plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    compute->add_flag("--timing", creq.timing, "append elapsed milliseconds");

    VerifyRequest vreq;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite over a grid");
    verify->add_option("--suite", vreq.suite, "all, w, binom, bracket, catalan, lah, lemmas");
    verify->add_option("--max-weight", vreq.max_weight, "largest shape weight (default 5)");
    verify->add_option("--max-n", vreq.max_n, "largest dimension (default 3)");
    verify->add_option("--trials", vreq.trials, "random points per grid cell (default 3)");
    verify->add_option("--seed", vreq.seed, "random seed (default 0)");
    verify->add_option("--format", vreq.format, "plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_usage(e.what());
    }

    if (compute->parsed()) return run_compute(creq);
    return run_verify_cmd(vreq);
}

#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "onerow/suites.hpp"

namespace onerow::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kArithmetic = 3 };

struct RunConfig {
    std::string command;
    std::string family = "D";
    int n = 1;
    int r = 0;
    std::string T;  // empty: t^2/q for C
    std::string format = "text";
    std::uint64_t seed = 2024;
    std::string suite = "all";
    long budget = kDefaultCorrelationBudget;
    std::string via = "tableau";
    std::string corrupt;
    int samples = 25;
    bool n_set = false, r_set = false;
};

using nlohmann::ordered_json;

inline Family parse_family(const std::string& s) {
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw UsageError("family must be C or D");
}

inline std::vector<int> to_ints(const Exps& e) { return std::vector<int>(e.begin(), e.end()); }

inline ordered_json poly_json(const LaurentPoly<Scalar>& p) {
    ordered_json terms = ordered_json::array();
    for (auto& [e, c] : p.terms()) terms.push_back({{"exponent", to_ints(e)}, {"coefficient", to_text(c)}});
    return terms;
}

inline LaurentPoly<Scalar> compute_poly(const RunConfig& cfg, Family fam) {
    auto P = symbolic_params();
    const int n = cfg.n, r = cfg.r;
    if (fam == Family::D) {
        if (cfg.via == "tableau") return tableau_poly_D(n, r, P);
        if (cfg.via == "lassalle") return lassalle_invert(Family::D, n, r, P);
        return phi_principal(Family::D, n, r, P, Enumeration::increasing, cfg.budget);
    }
    const bool special = cfg.T.empty();
    Scalar T = special ? Scalar(Scalar::t() * Scalar::t() / Scalar::q()) : parse_scalar(cfg.T);
    const bool is_special = T == Scalar(Scalar::t() * Scalar::t() / Scalar::q());
    if (cfg.via == "tableau") return is_special ? tableau_poly_C_special(n, r, P) : tableau_poly_C_general(n, r, T, P);
    if (cfg.via == "lassalle") return lassalle_invert(n, r, T, P);
    if (!is_special) throw UsageError("--via walgebra gives type C only at T = t^2/q");
    return phi_principal(Family::C, n, r, P, Enumeration::increasing, cfg.budget);
}

inline int compute_cmd(const RunConfig& cfg, std::ostream& out) {
    Family fam = parse_family(cfg.family);
    if (fam == Family::D && !cfg.T.empty()) throw UsageError("--T applies to family C only");
    auto p = compute_poly(cfg, fam);
    if (cfg.format == "json") {
        ordered_json j{{"schema", 1},
                       {"command", "compute"},
                       {"family", family_name(fam)},
                       {"n", cfg.n},
                       {"r", cfg.r},
                       {"T", fam == Family::C ? (cfg.T.empty() ? std::string("t^2/q") : cfg.T) : std::string()},
                       {"via", cfg.via},
                       {"text", to_text(p)},
                       {"terms", poly_json(p)}};
        if (fam == Family::D) j.erase("T");
        out << j.dump(2) << "\n";
    } else if (cfg.format == "latex") {
        out << to_latex(p) << "\n";
    } else {
        out << to_text(p) << "\n";
    }
    return kOk;
}

inline int tableaux_cmd(const RunConfig& cfg, std::ostream& out) {
    Alphabet a(parse_family(cfg.family), cfg.n);
    if (cfg.r < 0) throw UsageError("r must be >= 0");
    auto ts = enumerate(a, cfg.r);
    if (cfg.format == "json") {
        ordered_json rows = ordered_json::array();
        for (auto& t : ts) {
            std::vector<std::string> letters;
            for (int pos = 0; pos < a.size(); ++pos)
                for (int k = 0; k < t.theta[pos]; ++k) letters.push_back(a.letter(pos));
            rows.push_back({{"letters", letters}, {"theta", t.theta}, {"weight", to_ints(weight(t))}});
        }
        ordered_json j{{"schema", 1},
                       {"command", "tableaux"},
                       {"family", family_name(a.family)},
                       {"n", cfg.n},
                       {"r", cfg.r},
                       {"count", ts.size()},
                       {"closed_form_count", tableau_count(a, cfg.r)},
                       {"tableaux", rows}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    if (cfg.format != "text") throw UsageError("tableaux supports --format json or text");
    for (auto& t : ts) {
        std::string line;
        for (int pos = 0; pos < a.size(); ++pos)
            for (int k = 0; k < t.theta[pos]; ++k) line += (line.empty() ? "" : " ") + a.letter(pos);
        out << (line.empty() ? "(empty)" : line) << "\n";
    }
    return kOk;
}

inline int verify_cmd(const RunConfig& cfg, std::ostream& out) {
    SuiteConfig sc;
    sc.seed = cfg.seed;
    sc.samples = cfg.samples;
    sc.budget = cfg.budget;
    if (cfg.n_set) sc.n_max = cfg.n;
    if (cfg.r_set) sc.r_max = cfg.r;
    if (!cfg.T.empty()) {
        sc.T = parse_scalar(cfg.T);
        sc.T_label = cfg.T;
    }
    if (!cfg.corrupt.empty()) {
        sc.corrupt = parse_identity(cfg.corrupt);
        if (!sc.corrupt) throw UsageError("unknown identity '" + cfg.corrupt + "'");
    }
    if (cfg.suite != "all" && std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
        throw UsageError("unknown suite '" + cfg.suite + "'");
    if (cfg.format == "latex") throw UsageError("verify supports --format json or text");
    auto recs = run_suite(cfg.suite, sc);
    long failed = 0;
    for (auto& r : recs) failed += !r.pass;
    if (cfg.format == "json") {
        ordered_json inst = ordered_json::array();
        for (auto& r : recs) {
            ordered_json o{{"suite", r.suite}, {"key", r.key}, {"pass", r.pass}};
            if (!r.detail.empty()) o["detail"] = r.detail;
            inst.push_back(o);
        }
        ordered_json j{{"schema", 1},
                       {"command", "verify"},
                       {"suite", cfg.suite},
                       {"seed", cfg.seed},
                       {"bounds", {{"n", sc.n_max}, {"r", sc.r_max}, {"samples", sc.samples}, {"budget", sc.budget}}},
                       {"passed", static_cast<long>(recs.size()) - failed},
                       {"failed", failed},
                       {"instances", inst}};
        out << j.dump(2) << "\n";
    } else {
        for (auto& r : recs)
            out << (r.pass ? "PASS " : "FAIL ") << r.suite << " " << r.key << (r.detail.empty() || r.pass ? "" : "  " + r.detail)
                << "\n";
        out << (recs.size() - failed) << " passed, " << failed << " failed\n";
    }
    return failed ? kVerifyFailed : kOk;
}

// Lines of key=value (blank lines and # comments skipped) become --key value.
inline std::vector<std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::vector<std::string> args;
    std::string line;
    while (std::getline(in, line)) {
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
        args.push_back("--" + trim(line.substr(0, eq)));
        args.push_back(trim(line.substr(eq + 1)));
    }
    return args;
}

// Config-file values are placed right after the subcommand so explicit flags override them.
inline std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::vector<std::string> out, from_file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file");
            from_file = read_config(args[++i]);
        } else if (args[i].rfind("--config=", 0) == 0) {
            from_file = read_config(args[i].substr(9));
        } else {
            out.push_back(args[i]);
        }
    }
    if (from_file.empty()) return out;
    std::size_t at = out.empty() ? 0 : 1;
    out.insert(out.begin() + static_cast<long>(at), from_file.begin(), from_file.end());
    return out;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"One-row Macdonald polynomials of types C and D"};
    app.name("onerow");
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    auto add_common = [&](CLI::App* sub, bool with_nr_bounds) {
        sub->add_option("--family", cfg.family, "C or D")->check(CLI::IsMember({"C", "D", "c", "d"}));
        auto* on = sub->add_option("--n", cfg.n, with_nr_bounds ? "largest rank checked" : "rank");
        auto* orr = sub->add_option("--r", cfg.r, with_nr_bounds ? "largest row length checked" : "row length");
        on->check(CLI::Range(1, 64));
        orr->check(CLI::Range(0, 256));
        sub->add_option("--T", cfg.T, "type C parameter: T, t^2/q, t^k, a/b, ...");
        sub->add_option("--format", cfg.format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
        sub->add_option("--budget", cfg.budget, "term-count cap for correlation sums")->check(CLI::PositiveNumber);
        sub->add_option("--config", "key=value file mirroring the flags");
        return std::pair{on, orr};
    };

    auto* compute = app.add_subcommand("compute", "print a one-row polynomial");
    add_common(compute, false);
    compute->add_option("--via", cfg.via, "tableau, lassalle or walgebra")
        ->check(CLI::IsMember({"tableau", "lassalle", "walgebra"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    auto [vn, vr] = add_common(verify, true);
    std::string suites = "all";
    for (auto& s : suite_names()) suites += ", " + s;
    verify->add_option("--suite", cfg.suite, suites);
    verify->add_option("--seed", cfg.seed, "sampling seed");
    verify->add_option("--samples", cfg.samples, "instances per identity")->check(CLI::NonNegativeNumber);
    verify->add_option("--corrupt", cfg.corrupt, "scale one identity's right side by (1+q) (negative control)");

    auto* tableaux = app.add_subcommand("tableaux", "list one-row tableaux");
    add_common(tableaux, false);

    try {
        std::vector<std::string> args;
        for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
        args = expand_config(std::move(args));
        std::reverse(args.begin(), args.end());  // CLI11 consumes the vector from the back
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    cfg.n_set = vn->count() > 0;
    cfg.r_set = vr->count() > 0;

    try {
        if (compute->parsed()) return compute_cmd(cfg, out);
        if (tableaux->parsed()) return tableaux_cmd(cfg, out);
        return verify_cmd(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ArithmeticError& e) {
        err << "arithmetic error: " << e.what() << "\n";
        return kArithmetic;
    } catch (const NonPolynomialResult& e) {
        err << "arithmetic error: " << e.what() << "\n";
        return kArithmetic;
    }
}

}  // namespace onerow::cli

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "identities.hpp"
#include "koornwinder.hpp"
#include "text.hpp"
#include "walgebra.hpp"

namespace onerow {

// Verification suites shared by the command-line tool and the acceptance runner.
// Polynomial suites run over Q(q^{1/2}, t^{1/2}, T^{1/2}); identity suites run at sampled rationals.

struct SuiteConfig {
    int n_max = 3;
    int r_max = 4;
    int samples = 25;
    std::uint64_t seed = 2024;
    long budget = kDefaultCorrelationBudget;
    std::optional<IdentityId> corrupt;
    std::optional<Scalar> T;  // restricts the general-T checks to one value
    std::string T_label = "T";
};

struct SuiteRecord {
    std::string suite;
    std::string key;
    bool pass = false;
    std::string detail;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"classical", "thm22",   "transformII", "transformIII", "lassalleD",
                                                "lassalleC", "eigen",   "principal",   "soukan"};
    return names;
}

inline std::vector<std::pair<std::string, Scalar>> general_T_values(const SuiteConfig& cfg) {
    if (cfg.T) return {{cfg.T_label, *cfg.T}};
    return {{"T", Scalar::T()}, {"t^3", Scalar::t().pow(3)}, {"5/7", Scalar(rat(5, 7))}};
}

namespace detail {

inline std::string nr_key(const std::string& prefix, int n, int r) {
    return prefix + "n=" + std::to_string(n) + " r=" + std::to_string(r);
}

inline std::string m_text(const std::vector<int>& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

// Runs fn and turns arithmetic failures into a failing record.
inline SuiteRecord guarded(const std::string& suite, const std::string& key, const std::function<bool()>& fn) {
    SuiteRecord rec{suite, key, false, ""};
    try {
        rec.pass = fn();
    } catch (const ArithmeticError& e) {
        rec.detail = std::string("arithmetic error: ") + e.what();
    } catch (const NonPolynomialResult& e) {
        rec.detail = std::string("non-polynomial result: ") + e.what();
    }
    return rec;
}

inline std::vector<int> one_row(int n, int r) {
    std::vector<int> l(n, 0);
    l[0] = r;
    return l;
}

inline const std::vector<std::pair<BigRat, BigRat>>& transform_points() {
    static const std::vector<std::pair<BigRat, BigRat>> pts{
        {rat(2, 7), rat(3, 5)}, {rat(3, 8), rat(2, 9)}, {rat(5, 11), rat(7, 13)}};
    return pts;
}

template <class Fn>
void for_each_m(int n, int m_max, Fn&& fn) {
    std::vector<int> m(n, 0);
    auto rec = [&](auto& self, int i) -> void {
        if (i == n) {
            fn(m);
            return;
        }
        for (m[i] = 0; m[i] <= m_max; ++m[i]) self(self, i + 1);
    };
    rec(rec, 0);
}

inline std::vector<SuiteRecord> identity_records(const std::string& suite, const std::vector<IdentityId>& ids,
                                                 const SuiteConfig& cfg) {
    std::vector<SuiteRecord> out;
    VerifyOptions opts{cfg.corrupt};
    for (auto id : ids) {
        for (auto& res : run_identity_suite(id, cfg.samples, cfg.seed, opts)) {
            char idx[16];
            std::snprintf(idx, sizeof idx, "#%03d", res.index);
            std::string detail = res.params + (res.error.empty() ? "" : " (" + res.error + ")");
            out.push_back({suite, identity_name(id) + idx, res.residual_is_zero && res.error.empty(), detail});
        }
    }
    return out;
}

inline std::vector<SuiteRecord> transform_records(bool third, const SuiteConfig& cfg) {
    const std::string suite = third ? "transformIII" : "transformII";
    std::vector<SuiteRecord> out;
    for (int n = 2; n <= std::max(2, cfg.n_max); ++n)
        for (int K = 0; K <= 3; ++K)
            for_each_m(n, 2, [&](const std::vector<int>& m) {
                for (auto& [q, t] : transform_points()) {
                    Params<BigRat> P{BigRat(0), BigRat(0), q, t};
                    std::string key = "n=" + std::to_string(n) + " K=" + std::to_string(K) + " m=" + m_text(m) +
                                      " q=" + to_string(q) + " t=" + to_string(t);
                    out.push_back(guarded(suite, key, [&] {
                        if (third) return is_zero(verify_transform_III(n, K, m, P));
                        bool ok = is_zero(verify_transform_II(n, K, m, P));
                        if (n == 2) ok = ok && is_zero(verify_transform_II_two(K, m[0], m[1], P));
                        return ok;
                    }));
                }
            });
    return out;
}

}  // namespace detail

inline std::vector<SuiteRecord> suite_classical(const SuiteConfig& cfg) {
    using I = IdentityId;
    return detail::identity_records(
        "classical", {I::watson, I::saalschutz, I::sears_III15, I::sears_III16, I::sears_2_10_4, I::sum_6phi5, I::ns_lemma},
        cfg);
}

inline std::vector<SuiteRecord> suite_thm22(const SuiteConfig& cfg) {
    return detail::identity_records("thm22", {IdentityId::thm_2_2, IdentityId::thm_2_2_sum}, cfg);
}

inline std::vector<SuiteRecord> suite_transformII(const SuiteConfig& cfg) { return detail::transform_records(false, cfg); }
inline std::vector<SuiteRecord> suite_transformIII(const SuiteConfig& cfg) { return detail::transform_records(true, cfg); }

inline std::vector<SuiteRecord> suite_lassalleD(const SuiteConfig& cfg) {
    auto P = symbolic_params();
    std::vector<SuiteRecord> out;
    for (int n = 1; n <= cfg.n_max; ++n)
        for (int r = 0; r <= cfg.r_max; ++r)
            out.push_back(detail::guarded("lassalleD", detail::nr_key("D ", n, r), [&] {
                return tableau_poly_D(n, r, P) == lassalle_invert(Family::D, n, r, P);
            }));
    return out;
}

inline std::vector<SuiteRecord> suite_lassalleC(const SuiteConfig& cfg) {
    auto P = symbolic_params();
    Scalar special = Scalar::t() * Scalar::t() / Scalar::q();
    std::vector<SuiteRecord> out;
    for (int n = 1; n <= cfg.n_max; ++n)
        for (int r = 0; r <= cfg.r_max; ++r)
            out.push_back(detail::guarded("lassalleC", detail::nr_key("C T=t^2/q ", n, r), [&] {
                auto cs = tableau_poly_C_special(n, r, P);
                return cs == lassalle_invert(Family::C, n, r, P) && cs == tableau_poly_C_general(n, r, special, P);
            }));
    for (auto& [label, T] : general_T_values(cfg)) {
        std::map<int, LaurentPoly<Scalar>> memo;
        for (int n = std::min(2, cfg.n_max); n <= cfg.n_max; ++n) {
            memo.clear();
            std::function<LaurentPoly<Scalar>(int)> fam = [&](int k) -> LaurentPoly<Scalar> {
                auto it = memo.find(k);
                if (it == memo.end()) it = memo.emplace(k, tableau_poly_C_general(n, k, T, P)).first;
                return it->second;
            };
            for (int r = 0; r <= cfg.r_max; ++r)
                out.push_back(detail::guarded("lassalleC", detail::nr_key("C T=" + label + " ", n, r), [&] {
                    return lassalle_expand(n, r, T, fam, P) == g_series(n, r, P);
                }));
        }
    }
    return out;
}

inline std::vector<SuiteRecord> suite_eigen(const SuiteConfig& cfg) {
    auto P = symbolic_params();
    std::vector<SuiteRecord> out;
    auto check = [&](KoornwinderOperator<Scalar>& op, const std::string& key, int n, int r,
                     const std::function<LaurentPoly<Scalar>()>& make) {
        out.push_back(detail::guarded("eigen", key, [&] {
            auto p = make();
            Scalar d = koornwinder_eigenvalue(detail::one_row(n, r), op.params()).d_lambda;
            return op.apply(p) == p.scaled(d) && triangularity_check(p, r);
        }));
    };
    KoornwinderOperator<Scalar> opD(koornwinder_params_D(P));
    for (int n = 1; n <= cfg.n_max; ++n)
        for (int r = 0; r <= cfg.r_max; ++r)
            check(opD, detail::nr_key("D ", n, r), n, r, [&] { return tableau_poly_D(n, r, P); });
    KoornwinderOperator<Scalar> opC(koornwinder_params_C(Scalar(Scalar::t() * Scalar::t() / Scalar::q()), P));
    for (int n = 1; n <= cfg.n_max; ++n)
        for (int r = 0; r <= cfg.r_max; ++r)
            check(opC, detail::nr_key("C T=t^2/q ", n, r), n, r, [&] { return tableau_poly_C_special(n, r, P); });
    for (auto& [label, T] : general_T_values(cfg)) {
        KoornwinderOperator<Scalar> opT(koornwinder_params_C(T, P));
        for (int n = std::min(2, cfg.n_max); n <= cfg.n_max; ++n)
            for (int r = 0; r <= cfg.r_max; ++r)
                check(opT, detail::nr_key("C T=" + label + " ", n, r), n, r,
                      [&] { return tableau_poly_C_general(n, r, T, P); });
    }
    return out;
}

inline std::vector<SuiteRecord> suite_principal(const SuiteConfig& cfg) {
    auto P = symbolic_params();
    Scalar ws = Scalar::t() / Scalar::u();  // (t^2/q)^{1/2}
    Scalar w = Scalar::w(), T = Scalar::T();
    std::vector<SuiteRecord> out;
    for (int r = 0; r <= cfg.r_max; ++r)
        out.push_back(detail::guarded("principal", detail::nr_key("D ", 1, r), [&] {
            LaurentPoly<Scalar> expect(1);
            expect.add_term({r}, Scalar(1));
            expect.add_term({-r}, Scalar(1));
            if (r == 0) expect = LaurentPoly<Scalar>::constant(1, Scalar(1));
            return tableau_poly_D(1, r, P) == expect;
        }));
    for (int n = 2; n <= std::max(2, cfg.n_max); ++n)
        for (int r = 0; r <= cfg.r_max; ++r) {
            out.push_back(detail::guarded("principal", detail::nr_key("D ", n, r), [&] {
                return substitute(tableau_poly_D(n, r, P), principal_point(n, Scalar(1), P)) == principal_closed_D(n, r, P);
            }));
            out.push_back(detail::guarded("principal", detail::nr_key("C T=t^2/q ", n, r), [&] {
                return substitute(tableau_poly_C_special(n, r, P), principal_point(n, ws, P)) ==
                       principal_closed_C(n, r, Scalar(ws * ws), ws, P);
            }));
            out.push_back(detail::guarded("principal", detail::nr_key("C T=T ", n, r), [&] {
                return substitute(tableau_poly_C_general(n, r, T, P), principal_point(n, w, P)) ==
                       principal_closed_C(n, r, T, w, P);
            }));
        }
    return out;
}

inline std::vector<SuiteRecord> suite_soukan(const SuiteConfig& cfg) {
    auto P = symbolic_params();
    std::vector<SuiteRecord> out;
    for (auto f : {Family::C, Family::D})
        for (int l = 1; l <= cfg.n_max; ++l)
            for (int r = 0; r <= cfg.r_max; ++r)
                out.push_back(detail::guarded("soukan", detail::nr_key(family_name(f) + " ", l, r), [&] {
                    auto full = phi_principal(f, l, r, P, Enumeration::full, cfg.budget);
                    auto incr = phi_principal(f, l, r, P, Enumeration::increasing, cfg.budget);
                    auto target = f == Family::C ? tableau_poly_C_special(l, r, P) : tableau_poly_D(l, r, P);
                    return full == incr && full == target;
                }));
    return out;
}

// Throws UsageError for an unknown suite name.
inline std::vector<SuiteRecord> run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (cfg.n_max < 1 || cfg.r_max < 0 || cfg.samples < 0) throw UsageError("suite bounds must be n >= 1, r >= 0, samples >= 0");
    if (name == "all") {
        std::vector<SuiteRecord> out;
        for (auto& s : suite_names()) {
            auto part = run_suite(s, cfg);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (name == "classical") return suite_classical(cfg);
    if (name == "thm22") return suite_thm22(cfg);
    if (name == "transformII") return suite_transformII(cfg);
    if (name == "transformIII") return suite_transformIII(cfg);
    if (name == "lassalleD") return suite_lassalleD(cfg);
    if (name == "lassalleC") return suite_lassalleC(cfg);
    if (name == "eigen") return suite_eigen(cfg);
    if (name == "principal") return suite_principal(cfg);
    if (name == "soukan") return suite_soukan(cfg);
    throw UsageError("unknown suite '" + name + "'");
}

}  // namespace onerow

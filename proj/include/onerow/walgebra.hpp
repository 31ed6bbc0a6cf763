#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "field.hpp"
#include "macdonald.hpp"
#include "tableaux.hpp"

namespace onerow {

inline constexpr long kDefaultCorrelationBudget = 50000;

// gamma(z) = (1 - th^2 z)(1 - z/qh^2) / ((1 - z)(1 - z th^2/qh^2))
template <class F>
F gamma_base(const F& z, const F& qh, const F& th) {
    F th2 = th * th, qh2 = qh * qh;
    F d1 = one_minus(z), d2 = one_minus(F(z * th2 / qh2));
    if (onerow::is_zero(d1) || onerow::is_zero(d2)) throw ArithmeticError("gamma: pole");
    F num = one_minus(F(th2 * z)) * one_minus(F(z / qh2));
    return F(num / (d1 * d2));
}

// Conjugate-pair constants. `corrected` makes the correlation function z-symmetric
// and equal to the tableau polynomials; `printed` is the alternative C constant
// q^{2i-2l-2} t^{-2i+2l} with a non-mirrored second row, kept for comparison.
enum class GammaConvention { corrected, printed };

struct GammaTable {
    Alphabet alphabet;
    GammaConvention convention = GammaConvention::corrected;

    // (qh exponent, th exponent) of the constant for a conjugate pair with index i,
    // in the order a before b (ahead = true) or b before a.
    std::pair<int, int> conjugate_exponents(int i, bool ahead) const {
        const int l = alphabet.rank;
        const bool C = alphabet.family == Family::C;
        if (convention == GammaConvention::corrected) {
            return C ? std::pair{2 * i - 2 * l, -2 * i + 2 * l + 2} : std::pair{2 * i - 2 * l + 2, -2 * i + 2 * l - 2};
        }
        if (C) return ahead ? std::pair{2 * i - 2 * l - 2, -2 * i + 2 * l} : std::pair{-2 * i + 2 * l + 2, 2 * i - 2 * l};
        return ahead ? std::pair{2 * i - 2 * l + 2, -2 * i + 2 * l - 2} : std::pair{-2 * i + 2 * l - 2, 2 * i - 2 * l + 2};
    }
};

// Coefficient between letters a (at z) and b (at w), letters given by alphabet position.
// Non-conjugate pairs and the D pair (l, lbar) follow position order.
template <class F>
F gamma_pair(const GammaTable& gt, int a, int b, const F& z, const F& w, const F& qh, const F& th) {
    if (a == b) return F(1);
    const Alphabet& al = gt.alphabet;
    const bool ahead = a < b;
    F ratio = ahead ? F(w / z) : F(z / w);
    F g = gamma_base(ratio, qh, th);
    if (al.conjugate(a) != b) return g;
    auto [eq, et] = gt.conjugate_exponents(al.index(a), ahead);
    F c = int_pow(qh, eq) * int_pow(th, et);
    return F(g * gamma_base(F(c * ratio), qh, th));
}

enum class Enumeration { full, increasing };

template <class F>
struct CorrelationSpec {
    GammaTable table;
    std::vector<F> z;
    F qh, th;
};

template <class F>
struct CorrelationResult {
    LaurentPoly<F> poly;
    std::vector<std::vector<int>> support;  // letter sequences of the nonvanishing terms, in enumeration order
};

namespace detail {

inline long correlation_term_count(int letters, int r, Enumeration how) {
    if (how == Enumeration::full) {
        long n = 1;
        for (int k = 0; k < r; ++k) {
            n *= letters;
            if (n > (1L << 40)) return n;
        }
        return n;
    }
    return binomial(r + letters - 1, r);
}

}  // namespace detail

// Sum over letter sequences eps_1..eps_r of x_{eps_1}...x_{eps_r} prod_{i<j} gamma_{eps_i eps_j}(z_i, z_j),
// collected by x-exponent. Subtrees whose partial product vanishes are skipped.
template <class F>
CorrelationResult<F> correlation_F(const CorrelationSpec<F>& spec, Enumeration how = Enumeration::full,
                                   long budget = kDefaultCorrelationBudget) {
    const Alphabet& al = spec.table.alphabet;
    const int L = al.size(), l = al.rank, r = static_cast<int>(spec.z.size());
    long count = detail::correlation_term_count(L, r, how);
    if (count > budget)
        throw BudgetError("correlation sum has " + std::to_string(count) + " terms, budget is " + std::to_string(budget));

    // cache[(i * r + j) * L * L + a * L + b] for i < j
    std::vector<std::optional<F>> cache(static_cast<std::size_t>(r) * r * L * L);
    auto pair = [&](int i, int j, int a, int b) -> const F& {
        auto& slot = cache[(static_cast<std::size_t>(i) * r + j) * L * L + a * L + b];
        if (!slot) slot = gamma_pair(spec.table, a, b, spec.z[i], spec.z[j], spec.qh, spec.th);
        return *slot;
    };

    CorrelationResult<F> out{LaurentPoly<F>(l), {}};
    std::vector<int> eps(r);
    std::vector<F> partial(r + 1, F(1));
    Exps wt(l, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == r) {
            out.poly.add_term(wt, partial[r]);
            out.support.push_back(eps);
            return;
        }
        int start = (how == Enumeration::increasing && k > 0) ? eps[k - 1] : 0;
        for (int a = start; a < L; ++a) {
            F c = partial[k];
            for (int i = 0; i < k && !onerow::is_zero(c); ++i) c *= pair(i, k, eps[i], a);
            if (onerow::is_zero(c)) continue;
            eps[k] = a;
            partial[k + 1] = c;
            int& x = wt[al.index(a) - 1];
            x += al.is_barred(a) ? -1 : 1;
            self(self, k + 1);
            x -= al.is_barred(a) ? -1 : 1;
        }
    };
    rec(rec, 0);
    return out;
}

// Principal specialization z_i = q^{r-i}, qh = q^{1/2}, th = q^{1/2} t^{-1/2}.
template <class F>
CorrelationSpec<F> principal_spec(Family family, int l, int r, const Params<F>& P,
                                  GammaConvention conv = GammaConvention::corrected) {
    if (r < 0) throw UsageError("r must be >= 0");
    CorrelationSpec<F> s{GammaTable{Alphabet(family, l), conv}, {}, P.u, F(P.u / P.v)};
    for (int i = 1; i <= r; ++i) s.z.push_back(int_pow(P.q, r - i));
    return s;
}

template <class F>
LaurentPoly<F> phi_principal(Family family, int l, int r, const Params<F>& P, Enumeration how = Enumeration::full,
                             long budget = kDefaultCorrelationBudget, GammaConvention conv = GammaConvention::corrected) {
    return correlation_F(principal_spec(family, l, r, P, conv), how, budget).poly;
}

// Occupancy vectors of the nonvanishing principal terms, sorted.
template <class F>
std::vector<std::vector<int>> phi_support(Family family, int l, int r, const Params<F>& P,
                                          Enumeration how = Enumeration::full, long budget = kDefaultCorrelationBudget) {
    auto res = correlation_F(principal_spec(family, l, r, P), how, budget);
    std::vector<std::vector<int>> out;
    for (auto& eps : res.support) {
        std::vector<int> theta(2 * l, 0);
        for (int a : eps) ++theta[a];
        out.push_back(theta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
LaurentPoly<F> soukan_residual(Family family, int l, int r, const Params<F>& P, Enumeration how = Enumeration::full,
                               long budget = kDefaultCorrelationBudget) {
    auto phi = phi_principal(family, l, r, P, how, budget);
    auto target = family == Family::C ? tableau_poly_C_special(l, r, P) : tableau_poly_D(l, r, P);
    return phi - target;
}

}  // namespace onerow

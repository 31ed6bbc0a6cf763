#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "qseries.hpp"
#include "tableaux.hpp"

namespace onerow {

namespace detail {

template <class F>
F tq_mono(const Params<F>& P, long a, long b) {
    return int_pow(P.t, a) * int_pow(P.q, b);
}

template <class F>
F tq_ratio(const Params<F>& P, long k) {  // (t;q)_k / (q;q)_k
    return qpoch(P.t, k, P.q) / qpoch(P.q, k, P.q);
}

// theta_l + theta_{l+1} + ... + theta_{bar(l+1)} in alphabet order; theta_n alone for l = n.
inline long span_sum(const OneRowTableau& tab, int l) {
    const Alphabet& a = tab.alphabet;
    const int lo = l - 1, hi = l + 1 <= a.rank ? a.barred(l + 1) : a.rank - 1;
    long s = 0;
    for (int p = lo; p <= hi; ++p) s += tab.theta[p];
    return s;
}

template <class F>
F base_coefficient(const OneRowTableau& tab, int r, const Params<F>& P) {
    F c = qpoch(P.q, r, P.q) / qpoch(P.t, r, P.q);
    for (int x : tab.theta) c *= tq_ratio(P, x);
    return c;
}

}  // namespace detail

// G_r: sum over all weak compositions of r into 2n parts.
template <class F>
LaurentPoly<F> g_series(int n, int r, const Params<F>& P) {
    if (n < 1) throw UsageError("g_series needs n >= 1");
    if (r < 0) throw UsageError("g_series needs r >= 0");
    Alphabet alpha(Family::C, n);
    LaurentPoly<F> out(n);
    for_each_tableau(alpha, r, [&](const OneRowTableau& tab) {
        F c(1);
        for (int x : tab.theta) c *= detail::tq_ratio(P, x);
        out.add_term(weight(tab), c);
    });
    return out;
}

// Factor of the D formula attached to one l: with X = t^{n-l} q^{S'}, Y = t^{n-l-1} q^{S'+1}
// (S' = theta_{l+1} + ... + theta_{bar(l+1)}) it reads
// (X)_k (q^{theta_l} Y)_k / ((Y)_k (q^{theta_l} X)_k), k = theta_{bar l}.
template <class F>
F d_factor(const OneRowTableau& tab, int l, const Params<F>& P) {
    const int n = tab.alphabet.rank;
    const long s = detail::span_sum(tab, l), sp = s - tab.theta[l - 1];
    const long k = tab.theta[tab.alphabet.barred(l)];
    auto m = [&](long a, long b) { return detail::tq_mono(P, a, b); };
    return qpoch(m(n - l, sp), k, P.q) * qpoch(m(n - l - 1, s + 1), k, P.q) /
           (qpoch(m(n - l - 1, sp + 1), k, P.q) * qpoch(m(n - l, s), k, P.q));
}

// Same factor rewritten so that theta_l and theta_{bar l} enter symmetrically.
template <class F>
F d_factor_symmetric(const OneRowTableau& tab, int l, const Params<F>& P) {
    const int n = tab.alphabet.rank;
    const long sp = detail::span_sum(tab, l) - tab.theta[l - 1];
    const long a = tab.theta[l - 1], b = tab.theta[tab.alphabet.barred(l)];
    const F X = detail::tq_mono(P, n - l, sp), Y = detail::tq_mono(P, n - l - 1, sp + 1);
    const F& q = P.q;
    return qpoch(X, a, q) * qpoch(X, b, q) * qpoch(Y, a + b, q) / (qpoch(Y, a, q) * qpoch(Y, b, q) * qpoch(X, a + b, q));
}

template <class F>
F tableau_coefficient_D(const OneRowTableau& tab, int r, const Params<F>& P) {
    F c = detail::base_coefficient(tab, r, P);
    for (int l = 1; l <= tab.alphabet.rank - 1; ++l) c *= d_factor(tab, l, P);
    return c;
}

template <class F>
F tableau_coefficient_C_special(const OneRowTableau& tab, int r, const Params<F>& P) {
    const int n = tab.alphabet.rank;
    F c = detail::base_coefficient(tab, r, P);
    auto m = [&](long a, long b) { return detail::tq_mono(P, a, b); };
    for (int l = 1; l <= n; ++l) {
        const long s = detail::span_sum(tab, l), sp = s - tab.theta[l - 1];
        const long k = tab.theta[tab.alphabet.barred(l)];
        c *= qpoch(m(n - l + 1, s), k, P.q) * qpoch(m(n - l + 2, sp - 1), k, P.q) /
             (qpoch(m(n - l + 2, s - 1), k, P.q) * qpoch(m(n - l + 1, sp), k, P.q));
    }
    return c;
}

template <class F>
F tableau_coefficient_C_general(const OneRowTableau& tab, int r, const F& T, const Params<F>& P) {
    const Alphabet& A = tab.alphabet;
    const int n = A.rank;
    const auto& th = tab.theta;
    const F& q = P.q;
    auto m = [&](long a, long b) { return detail::tq_mono(P, a, b); };
    const long tn = th[n - 1], tnb = th[n];
    const long diff = tn > tnb ? tn - tnb : tnb - tn;
    F c = qpoch(q, r, q) / qpoch(P.t, r, q);
    for (int p = 0; p < A.size(); ++p)
        if (p != n - 1 && p != n) c *= detail::tq_ratio(P, th[p]);
    c *= detail::tq_ratio(P, diff);
    for (int l = 1; l <= n - 1; ++l) {
        long s = diff;
        for (int p = l - 1; p <= n - 2; ++p) s += th[p];
        for (int p = n + 1; p <= A.barred(l + 1); ++p) s += th[p];
        const long sp = s - th[l - 1], k = th[A.barred(l)];
        c *= qpoch(m(n - l - 1, s + 1), k, q) * qpoch(m(n - l, sp), k, q) /
             (qpoch(m(n - l, s), k, q) * qpoch(m(n - l - 1, sp + 1), k, q));
    }
    const long th0 = std::min(tn, tnb);
    c *= qpoch(T, th0, q) * qpoch(m(n, r - 2 * th0), 2 * th0, q) /
         (qpoch(q, th0, q) * qpoch(F(T * m(n - 1, r - th0)), th0, q) * qpoch(m(n - 1, r - 2 * th0 + 1), th0, q));
    return c;
}

namespace detail {

template <class F, class Coef>
LaurentPoly<F> tableau_sum(Family fam, int n, int r, Coef&& coef) {
    if (n < 1) throw UsageError("rank must be >= 1");
    if (r < 0) throw UsageError("row length must be >= 0");
    LaurentPoly<F> out(n);
    for_each_tableau(Alphabet(fam, n), r, [&](const OneRowTableau& tab) { out.add_term(weight(tab), coef(tab)); });
    return out;
}

}  // namespace detail

template <class F>
LaurentPoly<F> tableau_poly_D(int n, int r, const Params<F>& P) {
    return detail::tableau_sum<F>(Family::D, n, r, [&](const OneRowTableau& t) { return tableau_coefficient_D(t, r, P); });
}

template <class F>
LaurentPoly<F> tableau_poly_C_special(int n, int r, const Params<F>& P) {
    return detail::tableau_sum<F>(Family::C, n, r,
                                  [&](const OneRowTableau& t) { return tableau_coefficient_C_special(t, r, P); });
}

template <class F>
LaurentPoly<F> tableau_poly_C_general(int n, int r, const F& T, const Params<F>& P) {
    return detail::tableau_sum<F>(Family::C, n, r,
                                  [&](const OneRowTableau& t) { return tableau_coefficient_C_general(t, r, T, P); });
}

// Coefficient of G_{r-2i} when P_(r) is written through the G's (T = 1 gives type D).
template <class F>
F lassalle_inverse_coefficient(int n, int r, int i, const F& T, const Params<F>& P) {
    const F &q = P.q, &t = P.t;
    auto m = [&](long a, long b) { return detail::tq_mono(P, a, b); };
    return qpoch(q, r, q) / qpoch(t, r, q) * int_pow(t, i) * qpoch(F(T / t), i, q) * qpoch(m(n, r - i), i, q) /
           (qpoch(q, i, q) * qpoch(F(T * m(n - 1, r - i)), i, q)) * one_minus(m(n, r - 2 * i)) / one_minus(m(n, r - i));
}

// Coefficient of P_{r-2i} in the expansion of G_r.
template <class F>
F lassalle_expansion_coefficient(int n, int r, int i, const F& T, const Params<F>& P) {
    const F &q = P.q, &t = P.t;
    auto m = [&](long a, long b) { return detail::tq_mono(P, a, b); };
    return detail::tq_ratio(P, r - 2 * i) * int_pow(T, i) * qpoch(F(t / T), i, q) * qpoch(m(n, r - 2 * i), i, q) /
           (qpoch(q, i, q) * qpoch(F(T * m(n - 1, r - 2 * i + 1)), i, q));
}

template <class F>
LaurentPoly<F> lassalle_invert(int n, int r, const F& T, const Params<F>& P) {
    if (r < 0) throw UsageError("row length must be >= 0");
    LaurentPoly<F> out(n);
    for (int i = 0; 2 * i <= r; ++i) out += g_series(n, r - 2 * i, P).scaled(lassalle_inverse_coefficient(n, r, i, T, P));
    return out;
}

template <class F>
LaurentPoly<F> lassalle_invert(Family fam, int n, int r, const Params<F>& P, std::optional<F> T = std::nullopt) {
    if (fam == Family::D) return lassalle_invert(n, r, F(1), P);
    return lassalle_invert(n, r, T ? *T : F(P.t * P.t / P.q), P);
}

// sum_i c_i P_{r-2i}; `family(k)` supplies P_(k).
template <class F>
LaurentPoly<F> lassalle_expand(int n, int r, const F& T, const std::function<LaurentPoly<F>(int)>& family,
                               const Params<F>& P) {
    if (r < 0) throw UsageError("row length must be >= 0");
    LaurentPoly<F> out(n);
    for (int i = 0; 2 * i <= r; ++i) out += family(r - 2 * i).scaled(lassalle_expansion_coefficient(n, r, i, T, P));
    return out;
}

// ------------------------------------------------------------ principal specialization

// (s t^{n-1}, ..., s t, s)
template <class F>
std::vector<F> principal_point(int n, const F& scale, const Params<F>& P) {
    std::vector<F> x(n);
    F c = scale;
    for (int i = n - 1; i >= 0; --i) {
        x[i] = c;
        c *= P.t;
    }
    return x;
}

template <class F>
F principal_closed_D(int n, int r, const Params<F>& P) {
    if (n < 2) throw UsageError("closed form needs n >= 2 (its denominator vanishes at n = 1)");
    const F &q = P.q, &t = P.t;
    return int_pow(t, -static_cast<long>(r) * (n - 1)) * qpoch(int_pow(t, n), r, q) * qpoch(int_pow(t, 2 * (n - 1)), r, q) /
           (qpoch(t, r, q) * qpoch(int_pow(t, n - 1), r, q));
}

// T^{-r/2} t^{-r(n-1)} (t^n)_r (t^{2(n-1)} T^2)_r / ((t)_r (t^{n-1} T)_r), with w = T^{1/2}.
template <class F>
F principal_closed_C(int n, int r, const F& T, const F& w, const Params<F>& P) {
    if (!(w * w == T)) throw UsageError("principal_closed_C: w is not a square root of T");
    const F &q = P.q, &t = P.t;
    return int_pow(w, -r) * int_pow(t, -static_cast<long>(r) * (n - 1)) * qpoch(int_pow(t, n), r, q) *
           qpoch(F(int_pow(t, 2 * (n - 1)) * T * T), r, q) / (qpoch(t, r, q) * qpoch(F(int_pow(t, n - 1) * T), r, q));
}

// The general-T form as printed, kept for the record: (t^{2(n-1)} T)_r / ((t)_r (t^n T)_r).
template <class F>
F principal_closed_C_printed(int n, int r, const F& T, const F& w, const Params<F>& P) {
    const F &q = P.q, &t = P.t;
    return int_pow(w, -r) * int_pow(t, -static_cast<long>(r) * (n - 1)) * qpoch(int_pow(t, n), r, q) *
           qpoch(F(int_pow(t, 2 * (n - 1)) * T), r, q) / (qpoch(t, r, q) * qpoch(F(int_pow(t, n) * T), r, q));
}

}  // namespace onerow

#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace onerow {

// (z;q)_k, including negative k via (z;q)_k = 1/(zq^k;q)_{-k}.
template <class F>
F qpoch(const F& z, long k, const F& q) {
    F r(1);
    if (k >= 0) {
        F qj(1);
        for (long j = 0; j < k; ++j) {
            r *= one_minus(qj * z);
            qj *= q;
        }
        return r;
    }
    F qinv = F(1) / q, qj = qinv;
    for (long j = 1; j <= -k; ++j) {
        F f = one_minus(qj * z);
        if (is_zero(f)) throw ArithmeticError("qpoch: vanishing denominator factor");
        r *= f;
        qj *= qinv;
    }
    return F(1) / r;
}

template <class F>
F qpoch_multi(const std::vector<F>& zs, long k, const F& q) {
    F r(1);
    for (auto& z : zs) r *= qpoch(z, k, q);
    return r;
}

// A series parameter. A root pair stands for the two parameters +s^{1/2}, -s^{1/2}
// of a very-well-poised series; together they contribute (s;q^2)_n, so no
// square root of s is ever needed.
template <class F>
struct HypParam {
    F value;
    bool root_pair = false;

    static HypParam plain(F x) { return {std::move(x), false}; }
    static HypParam pair(F s) { return {std::move(s), true}; }
    int count() const { return root_pair ? 2 : 1; }
};

enum class SeriesKind { phi, very_well_poised };

// phi: upper/lower are a_1..a_{r+1} / b_1..b_r.
// very_well_poised: upper = {a} followed by a_4..a_{r+1}; lower is implied by
// the template [a, q a^{1/2}, -q a^{1/2}, a_4, ...; a^{1/2}, -a^{1/2}, aq/a_4, ...].
template <class F>
struct HypSeriesSpec {
    std::vector<HypParam<F>> upper, lower;
    F base, argument;
    SeriesKind kind = SeriesKind::phi;
};

template <class F>
HypSeriesSpec<F> phi_series(std::vector<F> upper, std::vector<F> lower, F q, F z) {
    HypSeriesSpec<F> s{{}, {}, std::move(q), std::move(z), SeriesKind::phi};
    for (auto& x : upper) s.upper.push_back(HypParam<F>::plain(std::move(x)));
    for (auto& x : lower) s.lower.push_back(HypParam<F>::plain(std::move(x)));
    return s;
}

template <class F>
HypSeriesSpec<F> vwp_series(F a, std::vector<HypParam<F>> params, F q, F z) {
    HypSeriesSpec<F> s{{HypParam<F>::plain(std::move(a))}, {}, std::move(q), std::move(z), SeriesKind::very_well_poised};
    for (auto& p : params) s.upper.push_back(std::move(p));
    return s;
}

// Expands the very-well-poised template into plain phi parameter lists.
template <class F>
HypSeriesSpec<F> expand_template(const HypSeriesSpec<F>& s) {
    if (s.kind == SeriesKind::phi) return s;
    if (s.upper.empty() || s.upper[0].root_pair) throw UsageError("very-well-poised series needs a plain a_1");
    const F& a = s.upper[0].value;
    const F& q = s.base;
    HypSeriesSpec<F> out{{}, {}, q, s.argument, SeriesKind::phi};
    out.upper.push_back(HypParam<F>::plain(a));
    out.upper.push_back(HypParam<F>::pair(q * q * a));  // +-q a^{1/2}
    out.lower.push_back(HypParam<F>::pair(a));          // +-a^{1/2}
    for (std::size_t i = 1; i < s.upper.size(); ++i) {
        const auto& p = s.upper[i];
        out.upper.push_back(p);
        if (p.root_pair)
            out.lower.push_back(HypParam<F>::pair(q * q * a * a / p.value));
        else
            out.lower.push_back(HypParam<F>::plain(q * a / p.value));
    }
    return out;
}

namespace detail {

// Factor contributed at index k (going from term k to k+1) by one parameter.
template <class F>
F step_factor(const HypParam<F>& p, const F& qk, const F& q2k) {
    return p.root_pair ? one_minus(q2k * p.value) : one_minus(qk * p.value);
}

}  // namespace detail

inline constexpr long kMaxSeriesTerms = 1024;

// Smallest N with some upper parameter equal to q^{-N} (q^{-2N} for a pair).
template <class F>
std::optional<long> termination_index(const HypSeriesSpec<F>& s) {
    std::optional<long> best;
    for (auto& p : s.upper) {
        F step = p.root_pair ? F(s.base * s.base) : s.base;
        F y = p.value;
        for (long k = 0; k <= kMaxSeriesTerms && (!best || k < *best); ++k) {
            if (y == F(1)) {
                best = k;
                break;
            }
            y *= step;
        }
    }
    return best;
}

// Exact terminating sum; stops once an upper Pochhammer vanishes.
template <class F>
F series_eval(const HypSeriesSpec<F>& spec) {
    HypSeriesSpec<F> s = expand_template(spec);
    const F& q = s.base;
    F num(1), den(1), sum(0), qk(1), q2k(1);
    for (long k = 0;; ++k) {
        if (k == 64 && !termination_index(s)) throw UsageError("series does not terminate");
        sum += num / den;
        for (auto& p : s.upper) num *= detail::step_factor(p, qk, q2k);
        if (is_zero(num)) return sum;
        num *= s.argument;
        F dq = one_minus(qk * q);  // (q;q) factor
        for (auto& p : s.lower) dq *= detail::step_factor(p, qk, q2k);
        if (is_zero(dq)) throw ArithmeticError("series: lower Pochhammer vanishes before termination");
        den *= dq;
        qk *= q;
        q2k *= q * q;
    }
}

// (a_4 ... a_{r+1}) z = (+-(a_1 q)^{1/2})^{r-3}; with r-3 odd both signs are
// covered by comparing squares. A root pair multiplies in as -s.
template <class F>
bool is_vwp_balanced(const HypSeriesSpec<F>& s) {
    if (s.kind != SeriesKind::very_well_poised) throw UsageError("balancing check needs a very-well-poised series");
    const F& a = s.upper.at(0).value;
    F prod(1);
    int params = 3;
    for (std::size_t i = 1; i < s.upper.size(); ++i) {
        const auto& p = s.upper[i];
        prod *= p.root_pair ? F(-p.value) : p.value;
        params += p.count();
    }
    int k = params - 1 - 3;  // r - 3
    F lhs = prod * s.argument;
    F aq = a * s.base;
    if (k % 2 == 0) return lhs == int_pow(aq, k / 2);
    return lhs * lhs == int_pow(aq, k);
}

}  // namespace onerow

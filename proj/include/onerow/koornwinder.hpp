#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "laurent_coef.hpp"
#include "macdonald.hpp"

namespace onerow {

// Koornwinder operator data. The operator only sees the quartic
// prod_k (1 - a_k x) and alpha = (abcd/q)^{1/2}, so both are stored directly;
// the tuple (a, b, c, d) is kept when known.
template <class F>
struct KoornwinderParams {
    std::array<F, 5> quartic;  // coefficients of x^0..x^4
    F alpha, q, t;
    std::optional<std::array<F, 4>> abcd;

    static KoornwinderParams from_tuple(const std::array<F, 4>& p, const F& alpha, const F& q, const F& t) {
        if (!(alpha * alpha * q == p[0] * p[1] * p[2] * p[3])) throw UsageError("alpha^2 != abcd/q");
        std::array<F, 5> c{F(1), F(0), F(0), F(0), F(0)};
        for (auto& a : p)
            for (int k = 4; k >= 1; --k) c[k] -= a * c[k - 1];
        return {c, alpha, q, t, p};
    }

    template <class G, class Fn>
    KoornwinderParams<G> map(Fn fn) const {
        KoornwinderParams<G> r{{fn(quartic[0]), fn(quartic[1]), fn(quartic[2]), fn(quartic[3]), fn(quartic[4])},
                               fn(alpha), fn(q), fn(t), std::nullopt};
        if (abcd) r.abcd = std::array<G, 4>{fn((*abcd)[0]), fn((*abcd)[1]), fn((*abcd)[2]), fn((*abcd)[3])};
        return r;
    }
};

// (a, b, c, d) = (-b^{1/2}, a b^{1/2}, -q^{1/2} b^{1/2}, q^{1/2} a b^{1/2}), alpha = ab.
template <class F>
KoornwinderParams<F> bc_specialize(const F& a, const F& b, const F& sqrt_b, const Params<F>& P) {
    if (!(sqrt_b * sqrt_b == b)) throw UsageError("bc_specialize: not a square root of b");
    return KoornwinderParams<F>::from_tuple({-sqrt_b, a * sqrt_b, -P.u * sqrt_b, P.u * a * sqrt_b}, a * b, P.q, P.t);
}

inline KoornwinderParams<Scalar> bc_specialize(const Scalar& a, const Scalar& b, const Params<Scalar>& P) {
    auto s = b.sqrt();
    if (!s) throw UsageError("bc_specialize: b has no square root in Q(q^{1/2}, t^{1/2}, T^{1/2})");
    return bc_specialize(a, b, *s, P);
}

inline KoornwinderParams<BigRat> bc_specialize(const BigRat& a, const BigRat& b, const Params<BigRat>& P) {
    auto s = exact_root(b, 2);
    if (!s) throw UsageError("bc_specialize: b is not a rational square");
    return bc_specialize(a, b, *s, P);
}

// For a = 1 the operator depends on b only: quartic (1 - b x^2)(1 - q b x^2), alpha = b.
template <class F>
KoornwinderParams<F> bc_specialize_sqrt_free(const F& b, const Params<F>& P) {
    return {{F(1), F(0), F(-(F(1) + P.q) * b), F(0), F(P.q * b * b)}, b, P.q, P.t, std::nullopt};
}

// Type D: (a, b) = (1, 1). Type C with parameter T: (a, b) = (1, T).
template <class F>
KoornwinderParams<F> koornwinder_params_D(const Params<F>& P) {
    return bc_specialize(F(1), F(1), F(1), P);
}

template <class F>
KoornwinderParams<F> koornwinder_params_C(const F& T, const Params<F>& P) {
    return bc_specialize_sqrt_free(T, P);
}

// --------------------------------------------------------------- eigenvalue

template <class F>
struct EigenvalueData {
    F d_lambda;
    std::vector<F> s;  // alpha t^{n-j} q^{lambda_j}
};

// <x; y> = x + 1/x - y - 1/y.
template <class F>
F angle_pair(const F& x, const F& y) {
    return x + F(1) / x - y - F(1) / y;
}

template <class F>
EigenvalueData<F> koornwinder_eigenvalue(const std::vector<int>& lambda, const KoornwinderParams<F>& kp) {
    const int n = static_cast<int>(lambda.size());
    EigenvalueData<F> out{F(0), {}};
    for (int j = 1; j <= n; ++j) {
        F base = kp.alpha * int_pow(kp.t, n - j);
        F s = base * int_pow(kp.q, lambda[j - 1]);
        out.s.push_back(s);
        out.d_lambda += angle_pair(s, base);
    }
    return out;
}

// The product form sum_j <alpha^2 t^{2n-2j} q^{lambda_j}> <q^{lambda_j}>, <x> = x^{1/2} - x^{-1/2};
// needs u = q^{1/2}.
template <class F>
F koornwinder_eigenvalue_product_form(const std::vector<int>& lambda, const KoornwinderParams<F>& kp, const F& u) {
    if (!(u * u == kp.q)) throw UsageError("u is not a square root of q");
    const int n = static_cast<int>(lambda.size());
    F d(0);
    for (int j = 1; j <= n; ++j) {
        F root = kp.alpha * int_pow(kp.t, n - j) * int_pow(u, lambda[j - 1]);  // sqrt(alpha^2 t^{2n-2j} q^lambda)
        F ul = int_pow(u, lambda[j - 1]);
        d += (root - F(1) / root) * (ul - F(1) / ul);
    }
    return d;
}

// --------------------------------------------------------------- the operator

namespace detail {

template <class F>
struct Binomial {  // 1 - c x^a
    F c;
    Exps a;
    LaurentPoly<F> poly() const {
        LaurentPoly<F> p = LaurentPoly<F>::constant(static_cast<int>(a.size()), F(1));
        p.add_term(a, -c);
        return p;
    }
};

inline Exps unit_vec(int n, int i, int k) {
    Exps e(n, 0);
    e[i] = k;
    return e;
}

inline Exps combo(int n, int i, int si, int j, int sj) {
    Exps e(n, 0);
    e[i] += si;
    e[j] += sj;
    return e;
}

inline Exps negated(Exps e) {
    for (auto& x : e) x = -x;
    return e;
}

}  // namespace detail

// Direct application over the fraction field in x: every summand is brought
// over the common denominator
//   prod_i (1 - x_i^2)(1 - q x_i^2)(1 - q x_i^-2) prod_{i<j} (1 - x_i x_j)(1 - x_i/x_j),
// summed, and divided back exactly. Throws NonPolynomialResult when the
// division does not clear.
template <class F>
LaurentPoly<F> koornwinder_apply_direct(const LaurentPoly<F>& f, const KoornwinderParams<F>& kp) {
    using detail::Binomial;
    const int n = f.rank();
    if (n < 1) throw UsageError("Koornwinder operator needs at least one variable");
    const F &q = kp.q, &t = kp.t;

    std::vector<Binomial<F>> common;
    for (int i = 0; i < n; ++i) {
        common.push_back({F(1), detail::unit_vec(n, i, 2)});
        common.push_back({q, detail::unit_vec(n, i, 2)});
        common.push_back({q, detail::unit_vec(n, i, -2)});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            common.push_back({F(1), detail::combo(n, i, 1, j, 1)});
            common.push_back({F(1), detail::combo(n, i, 1, j, -1)});
        }

    LaurentPoly<F> total(n);
    for (int i = 0; i < n; ++i) {
        for (int s : {1, -1}) {
            // shifted f - f, with x_i -> q^s x_i
            LaurentPoly<F> diff(n);
            for (auto& [e, c] : f.terms())
                if (e[i]) diff.add_term(e, c * (int_pow(q, static_cast<long>(s) * e[i]) - F(1)));
            if (diff.is_zero()) continue;

            LaurentPoly<F> num(n);
            for (int k = 0; k <= 4; ++k)
                if (!onerow::is_zero(kp.quartic[k])) num.add_term(detail::unit_vec(n, i, s * k), kp.quartic[k]);
            std::vector<Binomial<F>> den{{F(1), detail::unit_vec(n, i, 2 * s)}, {q, detail::unit_vec(n, i, 2 * s)}};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                num *= Binomial<F>{t, detail::combo(n, i, s, j, 1)}.poly();
                num *= Binomial<F>{t, detail::combo(n, i, s, j, -1)}.poly();
                den.push_back({F(1), detail::combo(n, i, s, j, 1)});
                den.push_back({F(1), detail::combo(n, i, s, j, -1)});
            }
            num *= diff;

            std::vector<bool> used(common.size(), false);
            for (auto& d : den) {
                bool found = false;
                for (std::size_t k = 0; k < common.size() && !found; ++k) {
                    if (used[k]) continue;
                    if (common[k].a == d.a && common[k].c == d.c) {
                        used[k] = found = true;
                    } else if (common[k].a == detail::negated(d.a) && common[k].c * d.c == F(1)) {
                        // 1 - c x^a = -c x^a (1 - c^{-1} x^{-a})
                        num = num.shifted(detail::negated(d.a)).scaled(F(-(F(1) / d.c)));
                        used[k] = found = true;
                    }
                }
                if (!found) throw std::logic_error("Koornwinder operator: unmatched denominator factor");
            }
            for (std::size_t k = 0; k < common.size(); ++k)
                if (!used[k]) num *= common[k].poly();
            total += num;
        }
    }
    for (auto& b : common) {
        LaurentPoly<F> quo(n);
        if (!divide_exact(total, b.poly(), quo))
            throw NonPolynomialResult("Koornwinder operator: denominator does not clear (input not symmetric?)");
        total = std::move(quo);
    }
    return total.scaled(F(1) / (kp.alpha * int_pow(t, n - 1)));
}

// Applies the operator through the orbit decomposition p = sum c_mu m_mu + R.
// D(m_mu) is computed once per mu (and cached) in the cheapest exact ring that
// holds the operator's parameters; R, if nonzero, goes through the direct path.
template <class F>
class KoornwinderOperator {
public:
    explicit KoornwinderOperator(KoornwinderParams<F> kp) : kp_(std::move(kp)) {
        if constexpr (std::is_same_v<F, Scalar>) {
            auto conv = [](const Scalar& x) {
                auto c = LaurentCoef::from_scalar(x);
                if (!c) throw std::invalid_argument("not Laurent");
                return *c;
            };
            try {
                fast_ = kp_.template map<LaurentCoef>(conv);
            } catch (const std::invalid_argument&) {
                fast_.reset();
            }
        }
    }

    const KoornwinderParams<F>& params() const { return kp_; }

    // D(m_mu) as (dominant exponent, coefficient) pairs.
    const std::vector<std::pair<Exps, F>>& orbit_image(int rank, const Exps& mu) {
        auto key = std::make_pair(rank, mu);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<std::pair<Exps, F>> parts;
        if constexpr (std::is_same_v<F, Scalar>) {
            if (fast_) {
                auto img = koornwinder_apply_direct(orbit_sum<LaurentCoef>(rank, mu), *fast_);
                auto dec = orbit_decompose(img);
                if (!dec.remainder.is_zero()) throw NonPolynomialResult("Koornwinder operator: image of an orbit sum is not symmetric");
                for (auto& [e, c] : dec.parts) parts.push_back({e, c.to_scalar()});
                return cache_.emplace(key, std::move(parts)).first->second;
            }
        }
        auto img = koornwinder_apply_direct(orbit_sum<F>(rank, mu), kp_);
        auto dec = orbit_decompose(img);
        if (!dec.remainder.is_zero()) throw NonPolynomialResult("Koornwinder operator: image of an orbit sum is not symmetric");
        parts = std::move(dec.parts);
        return cache_.emplace(key, std::move(parts)).first->second;
    }

    LaurentPoly<F> apply(const LaurentPoly<F>& p) {
        const int n = p.rank();
        auto dec = orbit_decompose(p);
        std::map<Exps, F, LexDesc> acc;
        for (auto& [mu, c] : dec.parts) {
            for (auto& [nu, e] : orbit_image(n, mu)) {
                auto [it, fresh] = acc.try_emplace(nu, c * e);
                if (!fresh) it->second += c * e;
            }
        }
        LaurentPoly<F> out(n);
        for (auto& [nu, c] : acc) {
            if (onerow::is_zero(c)) continue;
            for (auto& img : hyperoctahedral_orbit(nu)) out.add_term(img, c);
        }
        if (!dec.remainder.is_zero()) out += koornwinder_apply_direct(dec.remainder, kp_);
        return out;
    }

private:
    KoornwinderParams<F> kp_;
    std::optional<KoornwinderParams<LaurentCoef>> fast_;
    std::map<std::pair<int, Exps>, std::vector<std::pair<Exps, F>>> cache_;
};

template <class F>
LaurentPoly<F> koornwinder_apply(const LaurentPoly<F>& p, const KoornwinderParams<F>& kp) {
    KoornwinderOperator<F> op(kp);
    return op.apply(p);
}

// Dominance below (r, 0, ..., 0) and a monic leading coefficient.
template <class F>
bool triangularity_check(const LaurentPoly<F>& p, int r) {
    const int n = p.rank();
    Exps top(n, 0);
    if (n > 0) top[0] = r;
    if (!(p.coeff(top) == F(1))) return false;
    for (auto& [e, c] : p.terms()) {
        Exps d = dominant(e);
        long s = 0;
        for (int x : d) {
            s += x;
            if (s > r) return false;
        }
    }
    return true;
}

}  // namespace onerow

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace onerow {

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// Other coefficient rings expose is_zero() as a member.
template <class F>
    requires requires(const F& x) { x.is_zero(); }
bool is_zero(const F& x) {
    return x.is_zero();
}

using Exps = std::vector<int>;

// Decreasing lexicographic order: x1^3 comes before x1^-3.
struct LexDesc {
    bool operator()(const Exps& a, const Exps& b) const { return b < a; }
};

template <class F>
class LaurentPoly {
public:
    using Map = std::map<Exps, F, LexDesc>;

    explicit LaurentPoly(int rank = 1) : rank_(rank) {
        if (rank < 0) throw UsageError("negative rank");
    }

    static LaurentPoly constant(int rank, const F& c) { return monomial(rank, Exps(rank, 0), c); }
    static LaurentPoly monomial(int rank, const Exps& e, const F& c) {
        LaurentPoly p(rank);
        p.add_term(e, c);
        return p;
    }
    static LaurentPoly variable(int rank, int i, int power = 1) {
        Exps e(rank, 0);
        e.at(i) = power;
        return monomial(rank, e, F(1));
    }

    int rank() const { return rank_; }
    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    F coeff(const Exps& e) const {
        check_exps(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0) : it->second;
    }

    void add_term(const Exps& e, const F& c) {
        check_exps(e);
        if (onerow::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (fresh) return;
        it->second += c;
        if (onerow::is_zero(it->second)) terms_.erase(it);
    }

    LaurentPoly& operator+=(const LaurentPoly& b) {
        check_rank(b);
        for (auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& b) {
        check_rank(b);
        for (auto& [e, c] : b.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const { return scaled(F(-1)); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_rank(b);
        LaurentPoly r(a.rank_);
        Exps e(a.rank_);
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    LaurentPoly scaled(const F& c) const {
        LaurentPoly r(rank_);
        if (onerow::is_zero(c)) return r;
        for (auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
        return r;
    }
    // Multiply by the monomial x^s.
    LaurentPoly shifted(const Exps& s) const {
        check_exps(s);
        LaurentPoly r(rank_);
        for (auto& [e, x] : terms_) {
            Exps f = e;
            for (int i = 0; i < rank_; ++i) f[i] += s[i];
            r.terms_.emplace_hint(r.terms_.end(), std::move(f), x);
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        for (; i != a.terms_.end(); ++i, ++j)
            if (i->first != j->first || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    template <class G, class Fn>
    LaurentPoly<G> map_coeffs(Fn fn) const {
        LaurentPoly<G> r(rank_);
        for (auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

    void check_rank(const LaurentPoly& b) const {
        if (b.rank_ != rank_)
            throw UsageError("rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(b.rank_));
    }

private:
    int rank_;
    Map terms_;

    void check_exps(const Exps& e) const {
        if (static_cast<int>(e.size()) != rank_)
            throw UsageError("exponent vector of length " + std::to_string(e.size()) + " for rank " +
                             std::to_string(rank_));
    }
};

template <class F>
F int_pow(const F& x, long k) {
    if (k < 0) {
        if (onerow::is_zero(x)) throw ArithmeticError("zero value with a negative exponent");
        return int_pow(F(F(1) / x), -k);
    }
    F r(1), b = x;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

template <class F>
F substitute(const LaurentPoly<F>& p, const std::vector<F>& values) {
    if (static_cast<int>(values.size()) != p.rank()) throw UsageError("substitute: wrong number of values");
    F s(0);
    for (auto& [e, c] : p.terms()) {
        F m = c;
        for (int i = 0; i < p.rank(); ++i)
            if (e[i]) m *= int_pow(values[i], e[i]);
        s += m;
    }
    return s;
}

// Dominant representative under signed permutations: |e| sorted decreasingly.
inline Exps dominant(Exps e) {
    for (auto& x : e) x = std::abs(x);
    std::sort(e.begin(), e.end(), std::greater<int>());
    return e;
}

inline bool is_dominant(const Exps& e) { return dominant(e) == e; }

// All distinct images of mu under sign changes and permutations.
inline std::vector<Exps> hyperoctahedral_orbit(const Exps& mu) {
    Exps base = dominant(mu);
    std::sort(base.begin(), base.end());
    std::set<Exps> out;
    const int n = static_cast<int>(base.size());
    do {
        std::vector<int> nz;
        for (int i = 0; i < n; ++i)
            if (base[i]) nz.push_back(i);
        for (unsigned mask = 0; mask < (1u << nz.size()); ++mask) {
            Exps e = base;
            for (std::size_t k = 0; k < nz.size(); ++k)
                if (mask >> k & 1) e[nz[k]] = -e[nz[k]];
            out.insert(e);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return {out.begin(), out.end()};
}

template <class F>
LaurentPoly<F> orbit_sum(int rank, const Exps& mu) {
    LaurentPoly<F> p(rank);
    for (auto& e : hyperoctahedral_orbit(mu)) p.add_term(e, F(1));
    return p;
}

// Invariance under every x_i -> 1/x_i and every permutation, checked on the support.
template <class F>
bool hyperoctahedral_check(const LaurentPoly<F>& p) {
    for (auto& [e, c] : p.terms()) {
        for (auto& img : hyperoctahedral_orbit(e))
            if (!(p.coeff(img) == c)) return false;
    }
    return true;
}

// Splits p = sum_mu c_mu m_mu + remainder, c_mu read at the dominant exponent.
template <class F>
struct OrbitDecomposition {
    std::vector<std::pair<Exps, F>> parts;
    LaurentPoly<F> remainder;
};

template <class F>
OrbitDecomposition<F> orbit_decompose(const LaurentPoly<F>& p) {
    OrbitDecomposition<F> d{{}, p};
    for (auto& [e, c] : p.terms()) {
        if (!is_dominant(e)) continue;
        d.parts.push_back({e, c});
        for (auto& img : hyperoctahedral_orbit(e)) d.remainder.add_term(img, -c);
    }
    return d;
}

// Exact division in the Laurent ring. The quotient's support is confined to
// the box allowed by the Newton polytopes; anything outside means "not divisible".
template <class F>
bool divide_exact(const LaurentPoly<F>& num, const LaurentPoly<F>& den, LaurentPoly<F>& quo) {
    num.check_rank(den);
    if (den.is_zero()) throw ArithmeticError("Laurent division by zero");
    const int n = num.rank();
    quo = LaurentPoly<F>(n);
    if (num.is_zero()) return true;
    auto bounds = [n](const LaurentPoly<F>& p) {
        Exps lo(n, 0), hi(n, 0);
        bool first = true;
        for (auto& [e, c] : p.terms()) {
            for (int i = 0; i < n; ++i) {
                lo[i] = first ? e[i] : std::min(lo[i], e[i]);
                hi[i] = first ? e[i] : std::max(hi[i], e[i]);
            }
            first = false;
        }
        return std::pair{lo, hi};
    };
    auto [nlo, nhi] = bounds(num);
    auto [dlo, dhi] = bounds(den);
    Exps qlo(n), qhi(n);
    for (int i = 0; i < n; ++i) {
        qlo[i] = nlo[i] - dlo[i];
        qhi[i] = nhi[i] - dhi[i];
        if (qlo[i] > qhi[i]) return false;
    }
    const auto& [dlead, dc] = *den.terms().begin();
    F dinv = F(1) / dc;
    LaurentPoly<F> rem = num;
    while (!rem.is_zero()) {
        const Exps rlead = rem.terms().begin()->first;
        const F rc = rem.terms().begin()->second;
        Exps m(n);
        for (int i = 0; i < n; ++i) {
            m[i] = rlead[i] - dlead[i];
            if (m[i] < qlo[i] || m[i] > qhi[i]) return false;
        }
        F c = rc * dinv;
        for (auto& [e, x] : den.terms()) {
            Exps f(n);
            for (int i = 0; i < n; ++i) f[i] = e[i] + m[i];
            rem.add_term(f, -(x * c));
        }
        quo.add_term(m, c);
    }
    return true;
}

}  // namespace onerow

#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sparse_poly.hpp"

namespace onerow {

namespace detail {

// Primitive integer polynomial, positive leading coefficient, not divisible
// by any generator, non-constant.
struct Atom {
    SparsePoly poly;
    std::size_t hash;
    bool prime;  // cyclotomic piece of a binomial; treated as irreducible
};
using AtomPtr = std::shared_ptr<const Atom>;

inline int atom_cmp(const Atom& a, const Atom& b) {
    if (a.hash != b.hash) return a.hash < b.hash ? -1 : 1;
    return SparsePoly::compare(a.poly, b.poly);
}

inline AtomPtr make_atom(SparsePoly p, bool prime) {
    std::size_t h = p.hash();
    return std::make_shared<const Atom>(Atom{std::move(p), h, prime});
}

struct Normalized {
    BigRat content;
    Exp3 shift;  // may be negative when built from Laurent terms
    SparsePoly prim;
};

// p = content * u^shift * prim with prim primitive over Z, positive lead, no monomial content.
inline Normalized normalize(const SparsePoly& p) {
    if (p.is_zero()) throw ArithmeticError("normalize of zero polynomial");
    Exp3 sh = p.min_exponents();
    BigInt g = 0, l = 1;
    for (auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    }
    BigRat content(g, l);
    content.canonicalize();
    if (sgn(p.lead().coef) < 0) content = -content;
    std::vector<SparsePoly::Term> ts;
    ts.reserve(p.size());
    BigRat inv = 1 / content;
    for (auto& t : p.terms()) {
        Exp3 e = SparsePoly::unpack(t.key) - sh;
        ts.push_back({SparsePoly::pack(e), t.coef * inv});
    }
    return {content, sh, SparsePoly::from_terms(std::move(ts))};
}

struct LaurentTerm {
    Exp3 e;
    BigRat c;
};

inline Normalized normalize_laurent(const std::vector<LaurentTerm>& ts) {
    Exp3 lo{0, 0, 0};
    bool first = true;
    for (auto& t : ts) {
        if (is_zero(t.c)) continue;
        for (int i = 0; i < 3; ++i) lo[i] = first ? t.e[i] : std::min(lo[i], t.e[i]);
        first = false;
    }
    std::vector<SparsePoly::Term> pts;
    for (auto& t : ts)
        if (!is_zero(t.c)) pts.push_back({SparsePoly::pack(t.e - lo), t.c});
    Normalized n = normalize(SparsePoly::from_terms(std::move(pts)));
    n.shift = n.shift + lo;
    return n;
}

// Dense integer coefficient lists of the cyclotomic polynomials Phi_d, d | N.
inline std::map<int, std::vector<BigInt>> cyclotomics(int N) {
    std::map<int, std::vector<BigInt>> out;
    for (int d = 1; d <= N; ++d) {
        if (N % d) continue;
        std::vector<BigInt> num(d + 1, 0);  // x^d - 1
        num[0] = -1;
        num[d] = 1;
        for (auto& [e, phi] : out) {
            if (d % e) continue;
            // exact division by the monic phi
            std::vector<BigInt> quo(num.size() - phi.size() + 1, 0);
            for (int k = static_cast<int>(num.size()) - 1; k >= static_cast<int>(phi.size()) - 1; --k) {
                BigInt c = num[k];
                int pos = k - static_cast<int>(phi.size()) + 1;
                quo[pos] = c;
                for (std::size_t j = 0; j < phi.size(); ++j) num[pos + j] -= c * phi[j];
            }
            num = quo;
        }
        out[d] = num;
    }
    return out;
}

inline int gcd3(const Exp3& e) { return std::gcd(std::gcd(std::abs(e[0]), std::abs(e[1])), std::abs(e[2])); }

}  // namespace detail

// Element of Q(u, v, w), u = q^{1/2}, v = t^{1/2}, w = T^{1/2}.
// Stored as c * u^m0 v^m1 w^m2 * prod atom_i^{e_i} with e_i != 0; zero iff c == 0.
class Scalar {
public:
    Scalar() : c_(0) {}
    Scalar(long n) : c_(n) {}  // NOLINT: integers convert implicitly, like in formulas
    Scalar(const BigRat& c) : c_(c) {}  // NOLINT
    explicit Scalar(const SparsePoly& p) : c_(p.is_zero() ? 0 : 1) {
        if (!p.is_zero()) absorb(p, 1);
    }

    static Scalar monomial(const BigRat& c, const Exp3& e) {
        Scalar s(c);
        if (!s.is_zero()) s.m_ = e;
        return s;
    }
    static Scalar u() { return monomial(1, {1, 0, 0}); }
    static Scalar v() { return monomial(1, {0, 1, 0}); }
    static Scalar w() { return monomial(1, {0, 0, 1}); }
    static Scalar q() { return monomial(1, {2, 0, 0}); }
    static Scalar t() { return monomial(1, {0, 2, 0}); }
    static Scalar T() { return monomial(1, {0, 0, 2}); }

    static Scalar fraction(const SparsePoly& num, const SparsePoly& den) {
        if (den.is_zero()) throw ArithmeticError("zero denominator");
        if (num.is_zero()) return {};
        Scalar s(1);
        s.absorb(num, 1);
        s.absorb(den, -1);
        return s;
    }

    bool is_zero() const { return sgn(c_) == 0; }
    bool is_constant() const { return f_.empty() && m_ == Exp3{0, 0, 0}; }
    bool is_monomial() const { return f_.empty(); }
    const BigRat& coefficient() const { return c_; }
    const Exp3& monomial_exponent() const { return m_; }
    std::size_t atom_count() const { return f_.size(); }
    bool has_atom_denominator() const {
        for (auto& [a, e] : f_)
            if (e < 0) return true;
        return false;
    }

    Scalar operator-() const {
        Scalar r = *this;
        r.c_ = -r.c_;
        return r;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Scalar r;
        r.c_ = a.c_ * b.c_;
        r.m_ = a.m_ + b.m_;
        r.f_ = merge_factors(a.f_, b.f_, 1);
        return r;
    }

    Scalar inverse() const {
        if (is_zero()) throw ArithmeticError("division by the zero Scalar");
        Scalar r;
        r.c_ = 1 / c_;
        r.m_ = -1 * m_;
        r.f_ = f_;
        for (auto& fe : r.f_) fe.second = -fe.second;
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return add(a, -b); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    // Cross-multiplication: after removing the common factored part, the
    // two remaining numerator*other-denominator products are compared as polynomials.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.m_ == b.m_ && same_factors(a.f_, b.f_)) return a.c_ == b.c_;
        auto [pa, pb] = cofactors(a, b);
        return pa == pb;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        if (is_zero()) return k == 0 ? Scalar(1) : Scalar();
        Scalar r;
        r.c_ = onerow::pow(c_, k);
        r.m_ = static_cast<int>(k) * m_;
        r.f_ = f_;
        for (auto& fe : r.f_) fe.second *= static_cast<int>(k);
        return r;
    }

    // Square root inside Q(u, v, w) when the factored form is visibly a square.
    std::optional<Scalar> sqrt() const {
        if (is_zero()) return Scalar();
        auto rc = exact_root(c_, 2);
        if (!rc) return std::nullopt;
        for (int x : m_)
            if (x % 2) return std::nullopt;
        Scalar r(*rc);
        r.m_ = {m_[0] / 2, m_[1] / 2, m_[2] / 2};
        for (auto& [a, e] : f_) {
            if (e % 2) return std::nullopt;
            r.f_.push_back({a, e / 2});
        }
        return r;
    }

    // Expanded numerator and denominator (not reduced; den has positive lead).
    SparsePoly num() const { return expand_side(true); }
    SparsePoly den() const { return expand_side(false); }

    // Numerator/denominator with every denominator atom that divides the
    // expanded numerator cancelled. Canonical when denominator atoms are irreducible.
    std::pair<SparsePoly, SparsePoly> reduced() const {
        if (is_zero()) return {SparsePoly(), SparsePoly(1)};
        SparsePoly n = expand_side(true);
        SparsePoly d(BigRat(c_.get_den()));
        Exp3 neg{std::max(-m_[0], 0), std::max(-m_[1], 0), std::max(-m_[2], 0)};
        d = d.shifted(neg);
        for (auto& [a, e] : f_) {
            if (e >= 0) continue;
            int k = -e;
            SparsePoly quo;
            while (k > 0 && n.divide_exact(a->poly, quo)) {
                n = std::move(quo);
                --k;
            }
            if (k) d *= a->poly.pow(k);
        }
        return {n, d};
    }

    BigRat eval(const BigRat& u, const BigRat& v, const BigRat& w) const {
        if (is_zero()) return 0;
        BigRat r = c_ * onerow::pow(u, m_[0]) * onerow::pow(v, m_[1]) * onerow::pow(w, m_[2]);
        for (auto& [a, e] : f_) {
            BigRat x = a->poly.eval(u, v, w);
            if (onerow::is_zero(x) && e < 0) throw ArithmeticError("pole when evaluating Scalar");
            r *= onerow::pow(x, e);
        }
        return r;
    }

    // 1 - c * u^e0 v^e1 w^e2 (Laurent exponents), factored.
    static Scalar one_minus(const BigRat& c, const Exp3& e) {
        if (e == Exp3{0, 0, 0}) return Scalar(BigRat(1 - c));
        Scalar r(1);
        r.absorb_laurent({{Exp3{0, 0, 0}, BigRat(1)}, {e, BigRat(-c)}}, 1);
        return r;
    }
    static Scalar one_minus(const Scalar& z) {
        if (z.is_monomial()) return one_minus(z.c_, z.m_);
        return Scalar(1) - z;
    }

private:
    using Factors = std::vector<std::pair<detail::AtomPtr, int>>;

    BigRat c_;
    Exp3 m_{0, 0, 0};
    Factors f_;

    static bool same_factors(const Factors& a, const Factors& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].second != b[i].second || detail::atom_cmp(*a[i].first, *b[i].first) != 0) return false;
        return true;
    }

    static Factors merge_factors(const Factors& a, const Factors& b, int sb) {
        Factors r;
        r.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int c = i == a.size() ? 1 : j == b.size() ? -1 : detail::atom_cmp(*a[i].first, *b[j].first);
            if (c < 0) {
                r.push_back(a[i++]);
            } else if (c > 0) {
                r.push_back({b[j].first, sb * b[j].second});
                ++j;
            } else {
                int e = a[i].second + sb * b[j].second;
                if (e) r.push_back({a[i].first, e});
                ++i;
                ++j;
            }
        }
        return r;
    }

    void insert_atom(const detail::AtomPtr& a, int e) {
        if (!e) return;
        auto it = std::lower_bound(f_.begin(), f_.end(), a,
                                   [](const auto& fe, const detail::AtomPtr& x) { return detail::atom_cmp(*fe.first, *x) < 0; });
        if (it != f_.end() && detail::atom_cmp(*it->first, *a) == 0) {
            it->second += e;
            if (!it->second) f_.erase(it);
        } else {
            f_.insert(it, {a, e});
        }
    }

    void take(const detail::Normalized& n, int e) {
        c_ *= onerow::pow(n.content, e);
        m_ = m_ + e * n.shift;
    }

    // Multiply *this by p^e (p nonzero polynomial, u/v/w exponents >= 0).
    void absorb(const SparsePoly& p, int e) {
        detail::Normalized n = detail::normalize(p);
        take(n, e);
        absorb_primitive(n.prim, e);
    }

    void absorb_laurent(const std::vector<detail::LaurentTerm>& ts, int e) {
        detail::Normalized n = detail::normalize_laurent(ts);
        take(n, e);
        absorb_primitive(n.prim, e);
    }

    void absorb_primitive(const SparsePoly& prim, int e) {
        if (prim.is_constant()) return;
        if (prim.size() != 2) {
            insert_atom(detail::make_atom(prim, false), e);
            return;
        }
        // prim = A m1 (1 - y), y = gamma * m2/m1; split 1 - y0^N into cyclotomic pieces.
        const auto& t1 = prim.terms()[0];
        const auto& t2 = prim.terms()[1];
        Exp3 e1 = SparsePoly::unpack(t1.key), d = SparsePoly::unpack(t2.key) - e1;
        BigRat gamma = -t2.coef / t1.coef;
        int g = detail::gcd3(d), N = 1;
        BigRat g0 = gamma;
        for (int k = g; k >= 1; --k) {
            if (g % k) continue;
            if (auto r = exact_root(gamma, static_cast<unsigned>(k))) {
                N = k;
                g0 = *r;
                break;
            }
        }
        Exp3 d0{d[0] / N, d[1] / N, d[2] / N};
        c_ *= onerow::pow(BigRat(-t1.coef), e);
        m_ = m_ + e * e1;
        for (auto& [k, phi] : detail::cyclotomics(N)) {
            std::vector<detail::LaurentTerm> ts;
            BigRat gp(1);
            for (std::size_t j = 0; j < phi.size(); ++j) {
                if (phi[j] != 0) ts.push_back({static_cast<int>(j) * d0, BigRat(phi[j]) * gp});
                gp *= g0;
            }
            detail::Normalized n = detail::normalize_laurent(ts);
            take(n, e);
            if (!n.prim.is_constant()) insert_atom(detail::make_atom(n.prim, true), e);
        }
    }

    static SparsePoly expand(const BigRat& c, const Exp3& m, const Factors& fs, const Factors* minus) {
        SparsePoly p = SparsePoly::monomial(c, m);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            int e = fs[i].second - (minus ? (*minus)[i].second : 0);
            if (e > 0) p *= fs[i].first->poly.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    SparsePoly expand_side(bool numerator) const {
        if (is_zero()) return numerator ? SparsePoly() : SparsePoly(1);
        Exp3 m;
        for (int i = 0; i < 3; ++i) m[i] = numerator ? std::max(m_[i], 0) : std::max(-m_[i], 0);
        BigRat c = numerator ? BigRat(c_.get_num()) : BigRat(c_.get_den());
        SparsePoly p = SparsePoly::monomial(c, m);
        for (auto& [a, e] : f_) {
            int k = numerator ? e : -e;
            if (k > 0) p *= a->poly.pow(static_cast<unsigned>(k));
        }
        return p;
    }

    // Aligns both factor lists on their union and splits off the common part.
    struct Split {
        Factors common, fa, fb;  // common: min exponent; fa/fb: own exponents (aligned)
        Exp3 m_common;
    };

    static Split split(const Scalar& a, const Scalar& b) {
        Split s;
        for (int i = 0; i < 3; ++i) s.m_common[i] = std::min(a.m_[i], b.m_[i]);
        std::size_t i = 0, j = 0;
        while (i < a.f_.size() || j < b.f_.size()) {
            int c = i == a.f_.size() ? 1 : j == b.f_.size() ? -1 : detail::atom_cmp(*a.f_[i].first, *b.f_[j].first);
            detail::AtomPtr at;
            int ea = 0, eb = 0;
            if (c < 0) {
                at = a.f_[i].first, ea = a.f_[i].second, ++i;
            } else if (c > 0) {
                at = b.f_[j].first, eb = b.f_[j].second, ++j;
            } else {
                at = a.f_[i].first, ea = a.f_[i].second, eb = b.f_[j].second, ++i, ++j;
            }
            int mn = std::min(ea, eb);
            s.common.push_back({at, mn});
            s.fa.push_back({at, ea});
            s.fb.push_back({at, eb});
        }
        return s;
    }

    static std::pair<SparsePoly, SparsePoly> cofactors(const Scalar& a, const Scalar& b) {
        Split s = split(a, b);
        return {expand(a.c_, a.m_ - s.m_common, s.fa, &s.common), expand(b.c_, b.m_ - s.m_common, s.fb, &s.common)};
    }

    static Scalar add(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.m_ == b.m_ && same_factors(a.f_, b.f_)) {
            Scalar r = a;
            r.c_ += b.c_;
            if (r.is_zero()) return {};
            return r;
        }
        Split s = split(a, b);
        SparsePoly sum = expand(a.c_, a.m_ - s.m_common, s.fa, &s.common) +
                         expand(b.c_, b.m_ - s.m_common, s.fb, &s.common);
        if (sum.is_zero()) return {};
        Scalar r(1);
        r.m_ = s.m_common;
        for (auto& fe : s.common)
            if (fe.second) r.f_.push_back(fe);
        detail::Normalized n = detail::normalize(sum);
        r.take(n, 1);
        SparsePoly prim = std::move(n.prim);
        // cancel against denominator atoms of the common part
        for (auto& fe : r.f_) {
            SparsePoly quo;
            while (fe.second < 0 && !prim.is_constant() && prim.divide_exact(fe.first->poly, quo)) {
                prim = std::move(quo);
                ++fe.second;
            }
        }
        r.f_.erase(std::remove_if(r.f_.begin(), r.f_.end(), [](const auto& fe) { return fe.second == 0; }),
                   r.f_.end());
        r.absorb_primitive(prim, 1);
        return r;
    }
};

}  // namespace onerow

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigrat.hpp"

namespace onerow {

// Exponents of the generators u = q^{1/2}, v = t^{1/2}, w = T^{1/2}.
using Exp3 = std::array<int, 3>;

inline Exp3 operator+(const Exp3& a, const Exp3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Exp3 operator-(const Exp3& a, const Exp3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Exp3 operator*(int k, const Exp3& a) { return {k * a[0], k * a[1], k * a[2]}; }

// Polynomial in u, v, w with rational coefficients. Terms are kept in
// strictly decreasing graded-lex order (u > v > w); zero has no terms.
class SparsePoly {
public:
    // Packed exponent: total degree | e_u | e_v | e_w, 16 bits each, so that
    // integer comparison is graded lex and monomial product is key addition.
    using Key = std::uint64_t;
    struct Term {
        Key key;
        BigRat coef;
    };

    static constexpr int kMaxExp = 0x3fff;

    static Key pack(const Exp3& e) {
        for (int x : e)
            if (x < 0 || x > kMaxExp) throw ArithmeticError("generator exponent out of range");
        Key deg = static_cast<Key>(e[0] + e[1] + e[2]);
        return (deg << 48) | (static_cast<Key>(e[0]) << 32) | (static_cast<Key>(e[1]) << 16) |
               static_cast<Key>(e[2]);
    }
    static Exp3 unpack(Key k) {
        return {static_cast<int>((k >> 32) & 0xffff), static_cast<int>((k >> 16) & 0xffff),
                static_cast<int>(k & 0xffff)};
    }
    static bool key_divides(Key a, Key b) {
        Exp3 ea = unpack(a), eb = unpack(b);
        return ea[0] <= eb[0] && ea[1] <= eb[1] && ea[2] <= eb[2];
    }

    SparsePoly() = default;
    explicit SparsePoly(const BigRat& c) {
        if (!onerow::is_zero(c)) terms_.push_back({0, c});
    }
    explicit SparsePoly(long c) : SparsePoly(BigRat(c)) {}

    static SparsePoly monomial(const BigRat& c, const Exp3& e) {
        SparsePoly p;
        if (!onerow::is_zero(c)) p.terms_.push_back({pack(e), c});
        return p;
    }
    // Generator 0, 1, 2 = u, v, w.
    static SparsePoly gen(int i) {
        Exp3 e{0, 0, 0};
        e[i] = 1;
        return monomial(BigRat(1), e);
    }

    // Builds from arbitrary terms (any order, duplicates and zeros allowed).
    static SparsePoly from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
        SparsePoly p;
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().key == t.key)
                p.terms_.back().coef += t.coef;
            else
                p.terms_.push_back(std::move(t));
        }
        p.drop_zeros();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
    std::size_t size() const { return terms_.size(); }
    const Term& lead() const { return terms_.front(); }
    const Term& trail() const { return terms_.back(); }

    BigRat constant_value() const {
        if (terms_.empty() || terms_.back().key != 0) return BigRat(0);
        return terms_.back().coef;
    }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().key >> 48); }
    int degree_in(int var) const {
        int d = -1;
        for (auto& t : terms_) d = std::max(d, unpack(t.key)[var]);
        return d;
    }
    Exp3 min_exponents() const {
        if (terms_.empty()) return {0, 0, 0};
        Exp3 m = unpack(terms_[0].key);
        for (auto& t : terms_) {
            Exp3 e = unpack(t.key);
            for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const SparsePoly& s = a.size() <= b.size() ? a : b;
        const SparsePoly& l = a.size() <= b.size() ? b : a;
        if (s.size() == 1) return l.times_term(s.terms_[0].key, s.terms_[0].coef);
        std::unordered_map<Key, BigRat> acc;
        acc.reserve(s.size() * l.size());
        BigRat prod;
        for (auto& x : s.terms_) {
            for (auto& y : l.terms_) {
                mpq_mul(prod.get_mpq_t(), x.coef.get_mpq_t(), y.coef.get_mpq_t());
                auto [it, fresh] = acc.try_emplace(x.key + y.key, prod);
                if (!fresh) it->second += prod;
            }
        }
        std::vector<Term> ts;
        ts.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (!onerow::is_zero(c)) ts.push_back({k, std::move(c)});
        std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
        SparsePoly r;
        r.terms_ = std::move(ts);
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
    SparsePoly& operator-=(const SparsePoly& b) { return *this = *this - b; }
    SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

    SparsePoly scaled(const BigRat& c) const {
        if (onerow::is_zero(c)) return {};
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }
    // Multiply by the monomial u^e0 v^e1 w^e2 (e >= 0).
    SparsePoly shifted(const Exp3& e) const { return times_term(pack(e), BigRat(1)); }

    SparsePoly pow(unsigned k) const {
        SparsePoly r(1), base = *this;
        while (k) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return r;
    }

    BigRat eval(const BigRat& u, const BigRat& v, const BigRat& w) const {
        BigRat s(0);
        for (auto& t : terms_) {
            Exp3 e = unpack(t.key);
            s += t.coef * onerow::pow(u, e[0]) * onerow::pow(v, e[1]) * onerow::pow(w, e[2]);
        }
        return s;
    }

    // Exact division; returns false (leaving quotient unspecified) when d does not divide *this.
    bool divide_exact(const SparsePoly& d, SparsePoly& quotient) const {
        if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
        quotient = SparsePoly();
        if (is_zero()) return true;
        if (!key_divides(d.lead().key, lead().key) || !key_divides(d.trail().key, trail().key)) return false;
        for (int i = 0; i < 3; ++i)
            if (d.degree_in(i) > degree_in(i)) return false;
        SparsePoly rem = *this;
        std::vector<Term> qs;
        const Key dlead = d.lead().key;
        while (!rem.is_zero()) {
            const Key rk = rem.lead().key;
            if (!key_divides(dlead, rk)) return false;
            Key mk = rk - dlead;
            BigRat c = rem.lead().coef / d.lead().coef;
            rem = rem - d.times_term(mk, c);
            qs.push_back({mk, std::move(c)});
        }
        quotient.terms_ = std::move(qs);
        return true;
    }

    std::size_t hash() const {
        std::size_t h = terms_.size();
        for (auto& t : terms_) {
            h = h * 1000003u ^ std::hash<Key>{}(t.key);
            h = h * 1000003u ^ mpz_get_ui(t.coef.get_num_mpz_t()) ^ (mpz_get_ui(t.coef.get_den_mpz_t()) << 7);
            if (sgn(t.coef) < 0) h ^= 0x9e3779b97f4a7c15ull;
        }
        return h;
    }

    // Total order used for canonical sorting of factor lists.
    static int compare(const SparsePoly& a, const SparsePoly& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.terms_[i].key != b.terms_[i].key) return a.terms_[i].key < b.terms_[i].key ? -1 : 1;
            int c = cmp(a.terms_[i].coef, b.terms_[i].coef);
            if (c) return c < 0 ? -1 : 1;
        }
        return 0;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return compare(a, b) == 0; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

private:
    std::vector<Term> terms_;

    void drop_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return onerow::is_zero(t.coef); }),
                     terms_.end());
    }

    SparsePoly times_term(Key k, const BigRat& c) const {
        SparsePoly r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Exp3 e = unpack(t.key), f = unpack(k);
            for (int i = 0; i < 3; ++i)
                if (e[i] + f[i] > kMaxExp) throw ArithmeticError("generator exponent out of range");
            r.terms_.push_back({t.key + k, t.coef * c});
        }
        return r;
    }

    static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
        SparsePoly r;
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a.terms_[i].key > b.terms_[j].key)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || b.terms_[j].key > a.terms_[i].key) {
                r.terms_.push_back({b.terms_[j].key, subtract ? BigRat(-b.terms_[j].coef) : b.terms_[j].coef});
                ++j;
            } else {
                BigRat c = subtract ? BigRat(a.terms_[i].coef - b.terms_[j].coef)
                                    : BigRat(a.terms_[i].coef + b.terms_[j].coef);
                if (!onerow::is_zero(c)) r.terms_.push_back({a.terms_[i].key, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

}  // namespace onerow

#pragma once

#include <optional>

#include "scalar.hpp"

namespace onerow {

// Laurent polynomial in (u, v, w) over Q: u^shift * poly, with poly free of
// monomial content. A cheap coefficient ring for computations whose
// intermediate values never need a non-monomial denominator.
class LaurentCoef {
public:
    LaurentCoef() = default;
    LaurentCoef(long c) : LaurentCoef(BigRat(c)) {}  // NOLINT
    LaurentCoef(const BigRat& c) : p_(c) {}           // NOLINT
    LaurentCoef(SparsePoly p, const Exp3& shift) : p_(std::move(p)), s_(shift) { normalize(); }

    static LaurentCoef monomial(const BigRat& c, const Exp3& e) { return {SparsePoly(c), e}; }

    // Fails unless x is a Laurent polynomial.
    static std::optional<LaurentCoef> from_scalar(const Scalar& x) {
        if (x.is_zero()) return LaurentCoef();
        auto [n, d] = x.reduced();
        if (d.size() != 1) return std::nullopt;
        const auto& dt = d.lead();
        Exp3 e = SparsePoly::unpack(dt.key);
        return LaurentCoef(n.scaled(1 / dt.coef), -1 * e);
    }
    Scalar to_scalar() const {
        if (is_zero()) return {};
        return Scalar(p_) * Scalar::monomial(1, s_);
    }

    bool is_zero() const { return p_.is_zero(); }
    bool is_monomial() const { return p_.size() == 1; }
    const SparsePoly& poly() const { return p_; }
    const Exp3& shift() const { return s_; }

    LaurentCoef operator-() const { return {-p_, s_}; }

    friend LaurentCoef operator+(const LaurentCoef& a, const LaurentCoef& b) { return combine(a, b, false); }
    friend LaurentCoef operator-(const LaurentCoef& a, const LaurentCoef& b) { return combine(a, b, true); }
    friend LaurentCoef operator*(const LaurentCoef& a, const LaurentCoef& b) {
        if (a.is_zero() || b.is_zero()) return {};
        LaurentCoef r;
        r.p_ = a.p_ * b.p_;
        r.s_ = a.s_ + b.s_;
        return r;  // product of content-free polynomials is content-free
    }
    // Only monomial divisors are units of this ring.
    friend LaurentCoef operator/(const LaurentCoef& a, const LaurentCoef& b) {
        if (b.is_zero()) throw ArithmeticError("division by zero");
        if (!b.is_monomial()) throw ArithmeticError("LaurentCoef: division by a non-monomial");
        const auto& t = b.p_.lead();
        LaurentCoef r = a;
        r.p_ = r.p_.scaled(1 / t.coef);
        r.s_ = a.s_ - b.s_ - SparsePoly::unpack(t.key);
        return r;
    }

    LaurentCoef& operator+=(const LaurentCoef& b) { return *this = *this + b; }
    LaurentCoef& operator-=(const LaurentCoef& b) { return *this = *this - b; }
    LaurentCoef& operator*=(const LaurentCoef& b) { return *this = *this * b; }
    LaurentCoef& operator/=(const LaurentCoef& b) { return *this = *this / b; }

    friend bool operator==(const LaurentCoef& a, const LaurentCoef& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.s_ == b.s_ && a.p_ == b.p_;
    }
    friend bool operator!=(const LaurentCoef& a, const LaurentCoef& b) { return !(a == b); }

private:
    SparsePoly p_;
    Exp3 s_{0, 0, 0};

    void normalize() {
        if (p_.is_zero()) {
            s_ = {0, 0, 0};
            return;
        }
        Exp3 m = p_.min_exponents();
        if (m == Exp3{0, 0, 0}) return;
        const SparsePoly::Key k = SparsePoly::pack(m);
        std::vector<SparsePoly::Term> ts;
        ts.reserve(p_.size());
        for (auto& t : p_.terms()) ts.push_back({t.key - k, t.coef});  // no borrow: m divides every term
        p_ = SparsePoly::from_terms(std::move(ts));
        s_ = s_ + m;
    }

    static LaurentCoef combine(const LaurentCoef& a, const LaurentCoef& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        Exp3 s{std::min(a.s_[0], b.s_[0]), std::min(a.s_[1], b.s_[1]), std::min(a.s_[2], b.s_[2])};
        SparsePoly pa = a.s_ == s ? a.p_ : a.p_.shifted(a.s_ - s);
        SparsePoly pb = b.s_ == s ? b.p_ : b.p_.shifted(b.s_ - s);
        return {subtract ? pa - pb : pa + pb, s};
    }
};

inline bool is_zero(const LaurentCoef& x) { return x.is_zero(); }

}  // namespace onerow

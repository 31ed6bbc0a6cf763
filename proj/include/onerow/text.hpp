#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "laurent.hpp"

namespace onerow {

namespace detail {

inline const char* kGenNames[3] = {"q^{1/2}", "t^{1/2}", "T^{1/2}"};

inline std::string monomial_text(const Exp3& e) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += kGenNames[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

inline std::string xmono_text(const Exps& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

inline bool all_zero(const Exps& e) {
    for (int x : e)
        if (x) return false;
    return true;
}

}  // namespace detail

// Terms in decreasing graded-lex order, e.g. "q^{1/2}^2*t^{1/2} - 3/2".
inline std::string to_text(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : p.terms()) {
        bool neg = sgn(t.coef) < 0;
        BigRat a = neg ? BigRat(-t.coef) : t.coef;
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string m = detail::monomial_text(SparsePoly::unpack(t.key));
        if (m.empty())
            s += to_string(a);
        else if (a == 1)
            s += m;
        else
            s += to_string(a) + "*" + m;
    }
    return s;
}

inline std::string to_text(const BigRat& x) { return to_string(x); }

inline std::string to_text(const Scalar& x) {
    if (x.is_constant()) return to_string(x.coefficient());
    auto [n, d] = x.reduced();
    if (d == SparsePoly(1)) return "(" + to_text(n) + ")";
    return "(" + to_text(n) + ")/(" + to_text(d) + ")";
}

namespace detail {

inline bool is_negative_constant(const BigRat& c) { return sgn(c) < 0; }
inline bool is_negative_constant(const Scalar& c) { return c.is_constant() && sgn(c.coefficient()) < 0; }
inline bool is_plain_constant(const BigRat&) { return true; }
inline bool is_plain_constant(const Scalar& c) { return c.is_constant(); }

}  // namespace detail

template <class F>
std::string to_text(const LaurentPoly<F>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        bool neg = detail::is_negative_constant(c);
        F a = neg ? F(-c) : c;
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string m = detail::xmono_text(e);
        std::string ct = to_text(a);
        if (m.empty())
            s += ct;
        else if (detail::is_plain_constant(a) && ct == "1")
            s += m;
        else
            s += ct + "*" + m;
    }
    return s;
}

// ---------------------------------------------------------------- LaTeX

namespace detail {

inline std::string latex_monomial(const Exp3& e) {
    static const char* base[3] = {"q", "t", "T"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (!e[i]) continue;
        s += base[i];
        if (e[i] == 2) continue;
        if (e[i] % 2 == 0)
            s += "^{" + std::to_string(e[i] / 2) + "}";
        else
            s += "^{" + std::to_string(e[i]) + "/2}";
    }
    return s;
}

inline std::string latex_rat(const BigRat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

}  // namespace detail

inline std::string to_latex(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : p.terms()) {
        bool neg = sgn(t.coef) < 0;
        BigRat a = neg ? BigRat(-t.coef) : t.coef;
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string m = detail::latex_monomial(SparsePoly::unpack(t.key));
        if (m.empty())
            s += detail::latex_rat(a);
        else
            s += (a == 1 ? "" : detail::latex_rat(a)) + m;
    }
    return s;
}

inline std::string to_latex(const BigRat& x) { return detail::latex_rat(x); }

inline std::string to_latex(const Scalar& x) {
    if (x.is_constant()) return detail::latex_rat(x.coefficient());
    auto [n, d] = x.reduced();
    if (d == SparsePoly(1)) return "\\left(" + to_latex(n) + "\\right)";
    return "\\frac{" + to_latex(n) + "}{" + to_latex(d) + "}";
}

template <class F>
std::string to_latex(const LaurentPoly<F>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        bool neg = detail::is_negative_constant(c);
        F a = neg ? F(-c) : c;
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string m;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            m += "x_{" + std::to_string(i + 1) + "}";
            if (e[i] != 1) m += "^{" + std::to_string(e[i]) + "}";
        }
        std::string ct = to_latex(a);
        if (m.empty())
            s += ct;
        else if (detail::is_plain_constant(a) && ct == "1")
            s += m;
        else
            s += ct + " " + m;
    }
    return s;
}

// ---------------------------------------------------------------- parsing
//
// Accepts the printed grammar plus a few conveniences: q, t, T stand for
// u^2, v^2, w^2; '/' divides by anything free of x; '^' takes an integer.

class TextParser {
public:
    TextParser(std::string_view src, int rank) : s_(src), rank_(rank) {}

    LaurentPoly<Scalar> parse_all() {
        LaurentPoly<Scalar> r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int rank_;

    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("parse error at " + std::to_string(pos_) + ": " + what + " in '" + std::string(s_) + "'");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat_literal(std::string_view lit) {
        if (s_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    BigInt digits() {
        skip_ws();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected digits");
        return BigInt(std::string(s_.substr(b, pos_ - b)));
    }
    long small_int() {
        bool neg = eat('-');
        BigInt d = digits();
        if (!d.fits_slong_p()) fail("exponent too large");
        return neg ? -d.get_si() : d.get_si();
    }

    LaurentPoly<Scalar> constant(const Scalar& c) const { return LaurentPoly<Scalar>::constant(rank_, c); }

    static std::optional<Scalar> as_scalar(const LaurentPoly<Scalar>& p) {
        if (p.is_zero()) return Scalar();
        if (p.size() != 1 || !detail::all_zero(p.terms().begin()->first)) return std::nullopt;
        return p.terms().begin()->second;
    }

    LaurentPoly<Scalar> expr() {
        skip_ws();
        LaurentPoly<Scalar> r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    LaurentPoly<Scalar> term() {
        LaurentPoly<Scalar> r = unary();
        for (;;) {
            if (eat('*')) {
                r = r * unary();
            } else if (eat('/')) {
                auto d = as_scalar(unary());
                if (!d) fail("division by an expression in x");
                if (d->is_zero()) throw ArithmeticError("division by zero in input");
                r = r.scaled(Scalar(1) / *d);
            } else {
                return r;
            }
        }
    }

    LaurentPoly<Scalar> unary() {
        if (eat('-')) return -unary();
        return power();
    }

    LaurentPoly<Scalar> power() {
        LaurentPoly<Scalar> b = primary();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            long k = 0;
            if (eat('{')) {
                k = small_int();
                if (!eat('}')) fail("expected '}'");
            } else {
                k = small_int();
            }
            if (b.size() == 1) {
                auto& [e, c] = *b.terms().begin();
                Exps f = e;
                for (auto& x : f) x *= static_cast<int>(k);
                return LaurentPoly<Scalar>::monomial(rank_, f, c.pow(k));
            }
            if (k < 0) fail("negative power of a sum");
            LaurentPoly<Scalar> r = constant(Scalar(1));
            for (long i = 0; i < k; ++i) r *= b;
            return r;
        }
        return b;
    }

    LaurentPoly<Scalar> primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly<Scalar> r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(Scalar(BigRat(digits())));
        if (c == 'x') {
            ++pos_;
            BigInt i = digits();
            if (i < 1 || i > rank_) fail("variable index out of range");
            return LaurentPoly<Scalar>::variable(rank_, static_cast<int>(i.get_si()) - 1);
        }
        int g = c == 'q' ? 0 : c == 't' ? 1 : c == 'T' ? 2 : -1;
        if (g < 0) fail(std::string("unexpected '") + c + "'");
        ++pos_;
        Exp3 e{0, 0, 0};
        e[g] = eat_literal("^{1/2}") ? 1 : 2;
        return constant(Scalar::monomial(1, e));
    }
};

inline LaurentPoly<Scalar> parse_laurent(std::string_view s, int rank) { return TextParser(s, rank).parse_all(); }

inline Scalar parse_scalar(std::string_view s) {
    auto p = parse_laurent(s, 0);
    if (p.is_zero()) return {};
    return p.terms().begin()->second;
}

inline SparsePoly parse_sparse_poly(std::string_view s) {
    Scalar x = parse_scalar(s);
    auto [n, d] = x.reduced();
    if (!d.is_constant()) throw UsageError("not a polynomial: '" + std::string(s) + "'");
    return n.scaled(1 / d.constant_value());
}

}  // namespace onerow

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace onerow {

// GMP keeps mpq_class canonical: reduced, positive denominator, zero is 0/1.
using BigRat = mpq_class;
using BigInt = mpz_class;

inline BigRat rat(long num, long den = 1) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }

inline std::string to_string(const BigRat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigRat parse_rat(std::string_view s) {
    std::string str(s);
    auto slash = str.find('/');
    BigInt num, den = 1;
    auto parse_int = [](const std::string& part, BigInt& out) {
        if (part.empty() || out.set_str(part, 10) != 0)
            throw UsageError("not a rational: '" + part + "'");
    };
    if (slash == std::string::npos) {
        parse_int(str, num);
    } else {
        parse_int(str.substr(0, slash), num);
        parse_int(str.substr(slash + 1), den);
    }
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat pow(const BigRat& x, long k) {
    if (k < 0) {
        if (is_zero(x)) throw ArithmeticError("zero to a negative power");
        BigRat inv = 1 / x;
        return pow(inv, -k);
    }
    BigRat r(1);
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// k-th root in Q, if it exists.
inline std::optional<BigRat> exact_root(const BigRat& x, unsigned k) {
    if (k == 1) return x;
    if (sgn(x) < 0 && k % 2 == 0) return std::nullopt;
    BigInt n = x.get_num(), d = x.get_den(), rn, rd;
    bool neg = sgn(n) < 0;
    if (neg) n = -n;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
    BigRat r(neg ? BigInt(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace onerow

#pragma once

#include "laurent.hpp"

namespace onerow {

// Base parameters with their square roots: q = u^2, t = v^2.
// Symbolic: u, v are generators of Q(u, v, w). Sampled: exact rationals.
template <class F>
struct Params {
    F u, v, q, t;
};

inline Params<Scalar> symbolic_params() { return {Scalar::u(), Scalar::v(), Scalar::q(), Scalar::t()}; }

inline Params<BigRat> sampled_params(const BigRat& u, const BigRat& v) { return {u, v, u * u, v * v}; }

inline Scalar one_minus(const Scalar& z) { return Scalar::one_minus(z); }
inline BigRat one_minus(const BigRat& z) { return BigRat(1 - z); }

inline BigRat to_rational(const BigRat& x) { return x; }

inline Scalar pow(const Scalar& x, long k) { return x.pow(k); }

}  // namespace onerow

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "combinatorics.hpp"
#include "qseries.hpp"
#include "text.hpp"

namespace onerow {

enum class IdentityId {
    watson,        // 8W7 -> balanced 4phi3
    saalschutz,    // balanced 3phi2 sum
    sears_III15,   // balanced 4phi3, (a, ef/ab, ef/ac) form
    sears_III16,   // balanced 4phi3 reversed in n
    sears_2_10_4,  // balanced 4phi3, a^n form
    sum_6phi5,     // terminating 6W5 sum
    ns_lemma,      // 12W11-type reduction with two root pairs
    thm_2_2,       // 12W11 -> non-balanced 4phi3 (needs af = a2 a3)
    thm_2_2_sum,   // same left side, double-sum right side
};

inline const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids{IdentityId::watson,      IdentityId::saalschutz,  IdentityId::sears_III15,
                                             IdentityId::sears_III16, IdentityId::sears_2_10_4, IdentityId::sum_6phi5,
                                             IdentityId::ns_lemma,    IdentityId::thm_2_2,     IdentityId::thm_2_2_sum};
    return ids;
}

inline std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::watson: return "watson";
        case IdentityId::saalschutz: return "saalschutz";
        case IdentityId::sears_III15: return "sears_III15";
        case IdentityId::sears_III16: return "sears_III16";
        case IdentityId::sears_2_10_4: return "sears_2_10_4";
        case IdentityId::sum_6phi5: return "sum_6phi5";
        case IdentityId::ns_lemma: return "ns_lemma";
        case IdentityId::thm_2_2: return "thm_2_2";
        case IdentityId::thm_2_2_sum: return "thm_2_2_sum";
    }
    return "?";
}

inline std::optional<IdentityId> parse_identity(std::string_view s) {
    for (auto id : all_identities())
        if (identity_name(id) == s) return id;
    if (s == "6phi5") return IdentityId::sum_6phi5;
    return std::nullopt;
}

template <class F>
struct TransformInstance {
    IdentityId id;
    std::map<std::string, F> values;  // always contains "q"
    std::map<std::string, long> ints;
    std::vector<F> extra;  // ns_lemma: the free parameters a_1..a_r
};

// Test hook: multiplies the named identity's right side by (1 + q).
struct VerifyOptions {
    std::optional<IdentityId> corrupt;
};

// LHS - RHS, exact. Zero for every admissible instance.
template <class F>
F verify_identity(const TransformInstance<F>& inst, const VerifyOptions& opts = {}) {
    auto val = [&](const char* k) -> F {
        auto it = inst.values.find(k);
        if (it == inst.values.end()) throw UsageError(std::string("missing parameter ") + k);
        return it->second;
    };
    auto num = [&](const char* k) -> long {
        auto it = inst.ints.find(k);
        if (it == inst.ints.end()) throw UsageError(std::string("missing integer ") + k);
        if (it->second < 0) throw UsageError(std::string("negative ") + k);
        return it->second;
    };
    using P = HypParam<F>;
    const F q = val("q");
    auto qp = [&](long k) { return int_pow(q, k); };
    auto poch = [&](std::vector<F> zs, long k) { return qpoch_multi(zs, k, q); };
    F lhs, rhs;

    switch (inst.id) {
        case IdentityId::watson: {
            F a = val("a"), b = val("b"), c = val("c"), d = val("d"), e = val("e");
            long n = num("n");
            lhs = series_eval(vwp_series(a, {P::plain(b), P::plain(c), P::plain(d), P::plain(e), P::plain(qp(-n))}, q,
                                         F(a * a * qp(n + 2) / (b * c * d * e))));
            rhs = poch({a * q, a * q / (d * e)}, n) / poch({a * q / d, a * q / e}, n) *
                  series_eval(phi_series<F>({qp(-n), d, e, a * q / (b * c)}, {a * q / b, a * q / c, d * e * qp(-n) / a}, q, q));
            break;
        }
        case IdentityId::saalschutz: {
            F a = val("a"), b = val("b"), c = val("c");
            long n = num("n");
            lhs = series_eval(phi_series<F>({a, b, qp(-n)}, {c, a * b * qp(1 - n) / c}, q, q));
            rhs = poch({c / a, c / b}, n) / poch({c, c / (a * b)}, n);
            break;
        }
        case IdentityId::sears_III15:
        case IdentityId::sears_III16:
        case IdentityId::sears_2_10_4: {
            F a = val("a"), b = val("b"), c = val("c"), d = val("d"), e = val("e");
            long n = num("n");
            F f = a * b * c * qp(1 - n) / (d * e);
            if (auto it = inst.values.find("f"); it != inst.values.end() && !(it->second == f))
                throw UsageError("sears: 4phi3 is not balanced (def != abc q^{1-n})");
            lhs = series_eval(phi_series<F>({qp(-n), a, b, c}, {d, e, f}, q, q));
            if (inst.id == IdentityId::sears_2_10_4) {
                rhs = int_pow(a, n) * poch({e / a, f / a}, n) / poch({e, f}, n) *
                      series_eval(phi_series<F>({qp(-n), a, d / b, d / c}, {d, a * qp(1 - n) / e, a * qp(1 - n) / f}, q, q));
            } else if (inst.id == IdentityId::sears_III15) {
                rhs = poch({a, e * f / (a * b), e * f / (a * c)}, n) / poch({e, f, e * f / (a * b * c)}, n) *
                      series_eval(phi_series<F>({qp(-n), e / a, f / a, e * f / (a * b * c)},
                                                {e * f / (a * b), e * f / (a * c), qp(1 - n) / a}, q, q));
            } else {
                F sign = n % 2 ? F(-1) : F(1);
                rhs = sign * qp(-n * (n - 1) / 2) * poch({a, b, c}, n) / poch({d, e, f}, n) *
                      series_eval(phi_series<F>({qp(-n), qp(1 - n) / d, qp(1 - n) / e, qp(1 - n) / f},
                                                {qp(1 - n) / a, qp(1 - n) / b, qp(1 - n) / c}, q, q));
            }
            break;
        }
        case IdentityId::sum_6phi5: {
            F a = val("a"), b = val("b"), c = val("c");
            long n = num("n");
            lhs = series_eval(vwp_series(a, {P::plain(b), P::plain(c), P::plain(qp(-n))}, q, F(a * qp(n + 1) / (b * c))));
            rhs = poch({a * q, a * q / (b * c)}, n) / poch({a * q / b, a * q / c}, n);
            break;
        }
        case IdentityId::ns_lemma: {
            F a = val("a"), f = val("f"), z = val("z");
            long th = num("theta");
            std::vector<P> ps{P::plain(qp(-th)), P::plain(qp(th) * a * f)};
            for (auto& x : inst.extra) ps.push_back(P::plain(x));
            ps.push_back(P::pair(a * q / f));
            ps.push_back(P::pair(a * q * q / f));
            lhs = series_eval(vwp_series(a, ps, q, z));
            F s(0);
            for (long m = 0; m <= th; ++m) {
                std::vector<P> inner{P::plain(qp(-m)), P::plain(qp(m) * a * q / f)};
                for (auto& x : inst.extra) inner.push_back(P::plain(x));
                s += poch({q / f, qp(-th), a * q / f}, m) / poch({q, qp(2 - th) / (f * f), a * q}, m) * qp(m) *
                     series_eval(vwp_series(a, inner, q, z));
            }
            rhs = poch({a * q, f * f / q}, th) / poch({a * f, f}, th) * s;
            break;
        }
        case IdentityId::thm_2_2:
        case IdentityId::thm_2_2_sum: {
            F a = val("a"), f = val("f"), a2 = val("a2");
            F a3 = a * f / a2;
            if (auto it = inst.values.find("a3"); it != inst.values.end() && !(it->second == a3))
                throw UsageError("thm_2_2 needs af = a2 a3");
            long th = num("theta");
            lhs = series_eval(vwp_series(a,
                                         {P::plain(qp(-th)), P::plain(qp(th) * a * f), P::plain(f), P::plain(a2),
                                          P::plain(a3), P::pair(a * q / f), P::pair(a * q * q / f)},
                                         q, F(q / f)));
            if (inst.id == IdentityId::thm_2_2) {
                rhs = poch({a * q, a * f / a2}, th) / poch({a * f, a * q / a2}, th) *
                      series_eval(phi_series<F>({qp(-th), qp(-th) * a2 / a, f, a2},
                                                {qp(1 - th) * a2 / (a * f), qp(1 - th) / f, a * q / a3}, q, F(q * q / (f * f))));
            } else {
                F s(0);
                for (long j = 0; j <= th; ++j)
                    s += poch({a * f / a2, f}, th - j) / poch({a * q / a2, q}, th - j) * poch({f, a2}, j) /
                         poch({q, a * q / a3}, j);
                rhs = poch({a * q, q}, th) / poch({a * f, f}, th) * s;
            }
            break;
        }
    }
    if (opts.corrupt && *opts.corrupt == inst.id) rhs *= F(1) + q;
    return lhs - rhs;
}

// ------------------------------------------------------------ sampling

namespace detail {

inline const std::array<int, 14> kPrimes{7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};

// Small fractions with pairwise distinct prime denominators within one instance.
class RatPool {
public:
    explicit RatPool(std::mt19937_64& rng) : rng_(rng) {
        order_.assign(kPrimes.begin(), kPrimes.end());
        std::shuffle(order_.begin(), order_.end(), rng_);
    }
    BigRat next() {
        int p = order_.at(next_++ % order_.size());
        int k = std::uniform_int_distribution<int>(1, p - 1)(rng_);
        return rat(k, p);
    }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

private:
    std::mt19937_64& rng_;
    std::vector<int> order_;
    std::size_t next_ = 0;
};

}  // namespace detail

inline TransformInstance<BigRat> sample_instance(IdentityId id, std::mt19937_64& rng) {
    detail::RatPool pool(rng);
    TransformInstance<BigRat> inst{id, {}, {}, {}};
    inst.values["q"] = pool.next();
    auto take = [&](std::initializer_list<const char*> names) {
        for (auto n : names) inst.values[n] = pool.next();
    };
    switch (id) {
        case IdentityId::watson:
            take({"a", "b", "c", "d", "e"});
            inst.ints["n"] = pool.integer(0, 4);
            break;
        case IdentityId::saalschutz:
        case IdentityId::sum_6phi5:
            take({"a", "b", "c"});
            inst.ints["n"] = pool.integer(0, 5);
            break;
        case IdentityId::sears_III15:
        case IdentityId::sears_III16:
        case IdentityId::sears_2_10_4:
            take({"a", "b", "c", "d", "e"});
            inst.ints["n"] = pool.integer(0, 5);
            break;
        case IdentityId::ns_lemma: {
            take({"a", "f", "z"});
            inst.ints["theta"] = pool.integer(0, 4);
            long r = pool.integer(0, 2);
            for (long i = 0; i < r; ++i) inst.extra.push_back(pool.next());
            break;
        }
        case IdentityId::thm_2_2:
        case IdentityId::thm_2_2_sum:
            take({"a", "f", "a2"});
            inst.values["a3"] = inst.values["a"] * inst.values["f"] / inst.values["a2"];
            inst.ints["theta"] = pool.integer(0, 5);
            break;
    }
    return inst;
}

inline std::string describe(const TransformInstance<BigRat>& inst) {
    std::string s;
    for (auto& [k, v] : inst.values) s += (s.empty() ? "" : ", ") + k + "=" + to_string(v);
    for (auto& [k, v] : inst.ints) s += ", " + k + "=" + std::to_string(v);
    for (std::size_t i = 0; i < inst.extra.size(); ++i)
        s += ", a" + std::to_string(i + 1) + "=" + to_string(inst.extra[i]);
    return s;
}

struct IdentityResult {
    IdentityId id;
    int index;
    std::uint64_t seed;
    bool residual_is_zero;
    std::string params;
    std::string error;  // non-empty when no pole-free sample was found
};

// Per-instance seeds depend only on (seed, id, index), so results do not depend on run order.
inline std::uint64_t instance_seed(std::uint64_t seed, IdentityId id, int index) {
    std::uint64_t x = seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(id) * 0xbf58476d1ce4e5b9ull +
                      static_cast<std::uint64_t>(index) * 0x94d049bb133111ebull;
    x ^= x >> 31;
    x *= 0xd6e8feb86cd8ed5bull;
    return x ^ (x >> 29);
}

inline IdentityResult run_identity_instance(IdentityId id, int index, std::uint64_t seed, const VerifyOptions& opts = {}) {
    std::uint64_t s = instance_seed(seed, id, index);
    std::mt19937_64 rng(s);
    std::string last;
    for (int attempt = 0; attempt < 20; ++attempt) {
        auto inst = sample_instance(id, rng);
        try {
            BigRat r = verify_identity(inst, opts);
            return {id, index, s, is_zero(r), describe(inst), ""};
        } catch (const ArithmeticError& e) {
            last = describe(inst) + ": " + e.what();  // pole: resample
        }
    }
    return {id, index, s, false, last, "no pole-free sample in 20 attempts"};
}

inline std::vector<IdentityResult> run_identity_suite(IdentityId id, int count, std::uint64_t seed,
                                                      const VerifyOptions& opts = {}) {
    std::vector<IdentityResult> out;
    for (int i = 0; i < count; ++i) out.push_back(run_identity_instance(id, i, seed, opts));
    return out;
}

// ------------------------------------------------- transformations II, III

namespace detail {

template <class F>
F tq(const Params<F>& P, long a, long b) {
    return int_pow(P.t, a) * int_pow(P.q, b);
}

// (t)_phi (t)_{phi+m} / ((q)_phi (q)_{phi+m})
template <class F>
F pair_ratio(const Params<F>& P, long phi, long m) {
    return qpoch(P.t, phi, P.q) * qpoch(P.t, phi + m, P.q) / (qpoch(P.q, phi, P.q) * qpoch(P.q, phi + m, P.q));
}

inline long range_sum(const std::vector<int>& v, int lo, int hi) {  // 1-based inclusive
    long s = 0;
    for (int k = lo; k <= hi; ++k) s += v.at(k - 1);
    return s;
}

inline void check_transform_args(int n, int K, const std::vector<int>& m) {
    if (n < 2) throw UsageError("transformation needs n >= 2");
    if (K < 0) throw UsageError("K must be >= 0");
    if (static_cast<int>(m.size()) != n) throw UsageError("m must have n entries");
    for (int x : m)
        if (x < 0) throw UsageError("m_i must be >= 0");
}

}  // namespace detail

// Common right side: sum over phi_1 + ... + phi_n = K.
template <class F>
F transform_rhs(int n, int K, const std::vector<int>& m, const Params<F>& P) {
    detail::check_transform_args(n, K, m);
    F s(0);
    for_each_composition(K, n, [&](const std::vector<int>& phi) {
        F c(1);
        for (int j = 0; j < n; ++j) c *= detail::pair_ratio(P, phi[j], m[j]);
        s += c;
    });
    return s;
}

template <class F>
F transform_II_lhs(int n, int K, const std::vector<int>& m, const Params<F>& P) {
    using detail::range_sum;
    using detail::tq;
    detail::check_transform_args(n, K, m);
    const F& q = P.q;
    const long M = range_sum(m, 1, n);
    F s(0);
    for_each_composition(K, n, [&](const std::vector<int>& c) {  // phi_1..phi_{n-1}, i
        std::vector<int> phi(c.begin(), c.end() - 1);
        const long i = c.back();
        F x(1);
        for (int l = 1; l <= n - 1; ++l) {
            const long f = phi[l - 1];
            const long P2 = 2 * range_sum(phi, l + 1, n - 1);
            x *= detail::pair_ratio(P, f, m[l - 1]);
            x *= qpoch(tq(P, n - l - 1, f + P2 + range_sum(m, l, n) + 1), f, q) *
                 qpoch(tq(P, n - l, P2 + range_sum(m, l + 1, n)), f, q) /
                 (qpoch(tq(P, n - l, f + P2 + range_sum(m, l, n)), f, q) *
                  qpoch(tq(P, n - l - 1, P2 + range_sum(m, l + 1, n) + 1), f, q));
        }
        x *= qpoch(P.t, m[n - 1], q) / qpoch(q, m[n - 1], q);
        x *= qpoch(P.t, i, q) * qpoch(tq(P, n, 2 * K + M - 2 * i), i, q) /
             (qpoch(q, i, q) * qpoch(tq(P, n - 1, 2 * K + M - 2 * i + 1), i, q));
        s += x;
    });
    return s;
}

template <class F>
F verify_transform_II(int n, int K, const std::vector<int>& m, const Params<F>& P) {
    return transform_II_lhs(n, K, m, P) - transform_rhs(n, K, m, P);
}

// The n = 2 case written out as a single sum over phi_1 + i = K.
template <class F>
F verify_transform_II_two(int K, int m1, int m2, const Params<F>& P) {
    const F &q = P.q, &t = P.t;
    auto tq = [&](long a, long b) { return detail::tq(P, a, b); };
    F s(0);
    for (int f = 0; f <= K; ++f) {
        const int i = K - f;
        s += qpoch(t, m1 + f, q) * qpoch(t, m2, q) *
             qpoch_multi<F>({t, tq(0, m1 + m2 + f + 1), tq(1, m2)}, f, q) *
             qpoch_multi<F>({t, tq(2, 2 * K + m1 + m2 - 2 * i)}, i, q) /
             (qpoch(q, m1 + f, q) * qpoch(q, m2, q) * qpoch_multi<F>({q, tq(1, m1 + m2 + f), tq(0, m2 + 1)}, f, q) *
              qpoch_multi<F>({q, tq(1, 2 * K + m1 + m2 - 2 * i + 1)}, i, q));
    }
    return s - transform_rhs(2, K, {m1, m2}, P);
}

// Which exponent the induction step's reindexed sum uses. `derived` is the
// reading that equals the left side of transformation II; the two flags
// reproduce the alternatives that appear in print.
struct ReindexedReading {
    bool tail_denominator_uses_phi_sum = false;  // phi_{l,n} instead of m_{l,n}
    bool inner_uses_m_2_to_n_minus_1 = false;    // m_{2,n-1} instead of m_{2,n}
};

// The left side of transformation II after one application of the 12W11
// reduction, summed over j, phi_2..phi_{n-1}.
template <class F>
F transform_II_reindexed(int n, int K, const std::vector<int>& m, const Params<F>& P, ReindexedReading reading = {}) {
    using detail::range_sum;
    using detail::tq;
    detail::check_transform_args(n, K, m);
    if (n < 3) throw UsageError("reindexed form needs n >= 3");
    const F& q = P.q;
    F total(0);
    for (int j = 0; j <= K; ++j) {
        for_each_composition(K - j, n - 1, [&](const std::vector<int>& c) {  // phi_2..phi_{n-1}, slack
            std::vector<int> phi(n, 0);                                       // 1-based view, phi[1] unused
            for (int l = 2; l <= n - 1; ++l) phi[l - 1] = c[l - 2];
            F x = detail::pair_ratio(P, j, m[0]);
            for (int l = 3; l <= n - 1; ++l) {
                const long f = phi[l - 1];
                const long P2 = 2 * range_sum(phi, l + 1, n - 1);
                const long tail = reading.tail_denominator_uses_phi_sum ? range_sum(phi, l, n - 1) : range_sum(m, l, n);
                x *= detail::pair_ratio(P, f, m[l - 1]);
                x *= qpoch(tq(P, n - l - 1, f + P2 + range_sum(m, l, n) + 1), f, q) *
                     qpoch(tq(P, n - l, P2 + range_sum(m, l + 1, n)), f, q) /
                     (qpoch(tq(P, n - l, f + P2 + tail), f, q) * qpoch(tq(P, n - l - 1, P2 + range_sum(m, l + 1, n) + 1), f, q));
            }
            const long f = phi[1];
            const long Phi2 = range_sum(phi, 2, n - 1), Phi3 = range_sum(phi, 3, n - 1);
            const long rest = K - j - Phi2;
            const long m2 = reading.inner_uses_m_2_to_n_minus_1 ? range_sum(m, 2, n - 1) : range_sum(m, 2, n);
            x *= qpoch(P.t, f + m[1], q) * qpoch(P.t, m[n - 1], q) * qpoch(P.t, f, q) *
                 qpoch(tq(P, n - 1, 2 * Phi2 + m2), rest, q) * qpoch(P.t, rest, q) /
                 (qpoch(q, f + m[1], q) * qpoch(q, m[n - 1], q) * qpoch(q, f, q) *
                  qpoch(tq(P, n - 2, 2 * Phi2 + range_sum(m, 2, n) + 1), rest, q) * qpoch(q, rest, q));
            x *= qpoch(tq(P, n - 2, 2 * Phi3 + range_sum(m, 3, n)), f, q) *
                 qpoch(tq(P, n - 3, f + 2 * Phi3 + range_sum(m, 2, n) + 1), f, q) /
                 (qpoch(tq(P, n - 3, 2 * Phi3 + range_sum(m, 3, n) + 1), f, q) *
                  qpoch(tq(P, n - 2, f + 2 * Phi3 + range_sum(m, 2, n)), f, q));
            total += x;
        });
    }
    return total;
}

enum class TransformIIIForm {
    corrected,  // phi_l + 2 phi_{l+1,n} + m_{l,n}
    printed,    // phi_l + phi_{l+1,n} + m_{l,n}; fails from K = 2
};

template <class F>
F transform_III_lhs(int n, int K, const std::vector<int>& m, const Params<F>& P,
                    TransformIIIForm form = TransformIIIForm::corrected) {
    using detail::range_sum;
    using detail::tq;
    detail::check_transform_args(n, K, m);
    const F &q = P.q, &t = P.t;
    const long M = range_sum(m, 1, n);
    const long cf = form == TransformIIIForm::corrected ? 2 : 1;
    F s(0);
    for_each_composition(K, n + 1, [&](const std::vector<int>& c) {  // phi_1..phi_n, i
        std::vector<int> phi(c.begin(), c.end() - 1);
        const long i = c.back();
        F x(1);
        for (int k = 0; k < n; ++k) x *= detail::pair_ratio(P, phi[k], m[k]);
        x *= int_pow(F(t * t / q), i) * qpoch(F(q / t), i, q) * qpoch(tq(P, n, 2 * K + M - 2 * i), i, q) /
             (qpoch(q, i, q) * qpoch(tq(P, n + 1, 2 * K + M - 2 * i), i, q));
        for (int l = 1; l <= n; ++l) {
            const long f = phi[l - 1];
            const long Pt = range_sum(phi, l + 1, n);
            x *= qpoch(tq(P, n - l + 1, f + cf * Pt + range_sum(m, l, n)), f, q) *
                 qpoch(tq(P, n - l + 2, 2 * Pt + range_sum(m, l + 1, n) - 1), f, q) /
                 (qpoch(tq(P, n - l + 2, f + cf * Pt + range_sum(m, l, n) - 1), f, q) *
                  qpoch(tq(P, n - l + 1, 2 * Pt + range_sum(m, l + 1, n)), f, q));
        }
        s += x;
    });
    return s;
}

template <class F>
F verify_transform_III(int n, int K, const std::vector<int>& m, const Params<F>& P,
                       TransformIIIForm form = TransformIIIForm::corrected) {
    return transform_III_lhs(n, K, m, P, form) - transform_rhs(n, K, m, P);
}

}  // namespace onerow

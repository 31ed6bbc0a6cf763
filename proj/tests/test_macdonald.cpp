#include <gtest/gtest.h>

#include "onerow/macdonald.hpp"
#include "onerow/text.hpp"

using namespace onerow;

namespace {

BigRat R(long n, long d = 1) { return rat(n, d); }

Params<BigRat> sampled() { return sampled_params(R(2, 3), R(5, 7)); }  // q = 4/9, t = 25/49

Params<BigRat> golden_params() { return {BigRat(0), BigRat(0), R(2, 7), R(3, 5)}; }

LaurentPoly<Scalar> xr_plus_xmr(int r) {
    LaurentPoly<Scalar> p(1);
    p.add_term({r}, Scalar(1));
    p.add_term({-r}, Scalar(1));
    return p;
}

// One-row A_1 polynomial in y = (x1/x2)^{1/2} times the one in z = (x1 x2)^{1/2},
// collected as a Laurent polynomial in (x1, x2).
LaurentPoly<BigRat> a1_pair_product(int r, const Params<BigRat>& P) {
    auto w = [&](int k) -> BigRat { return qpoch(P.t, k, P.q) / qpoch(P.q, k, P.q); };
    BigRat pre = qpoch(P.q, r, P.q) / qpoch(P.t, r, P.q);
    LaurentPoly<BigRat> out(2);
    for (int m1 = 0; m1 <= r; ++m1)
        for (int n1 = 0; n1 <= r; ++n1) {
            int a = 2 * m1 - r, b = 2 * n1 - r;  // mu1 - mu2, nu1 - nu2
            out.add_term({(a + b) / 2, (b - a) / 2}, pre * pre * w(m1) * w(r - m1) * w(n1) * w(r - n1));
        }
    return out;
}

}  // namespace

TEST(GSeries, Examples) {
    auto P = symbolic_params();
    EXPECT_EQ(to_text(g_series(1, 0, P)), "1");
    auto g1 = g_series(1, 1, P);
    Scalar c = (Scalar(1) - Scalar::t()) / (Scalar(1) - Scalar::q());
    EXPECT_EQ(g1.size(), 2u);
    EXPECT_EQ(g1.coeff({1}), c);
    EXPECT_EQ(g1.coeff({-1}), c);
    auto g2 = g_series(1, 2, P);
    EXPECT_EQ(g2.coeff({0}), c * c);  // only theta_1 = theta_1bar = 1 reaches weight 0
    EXPECT_THROW(g_series(0, 1, P), UsageError);
}

// Coefficient of z^r in prod_i (t x_i z; q)_inf (t z/x_i; q)_inf / ((x_i z; q)_inf (z/x_i; q)_inf),
// expanded via (tw;q)_inf/(w;q)_inf = sum_k (t)_k/(q)_k w^k, compared with the composition sum.
TEST(GSeries, MatchesProductExpansion) {
    auto P = sampled();
    for (int n = 1; n <= 2; ++n) {
        for (int r = 0; r <= 4; ++r) {
            std::vector<LaurentPoly<BigRat>> byDeg(r + 1, LaurentPoly<BigRat>(n));  // series in z, truncated
            byDeg[0] = LaurentPoly<BigRat>::constant(n, BigRat(1));
            for (int i = 0; i < n; ++i) {
                for (int sign : {1, -1}) {
                    std::vector<LaurentPoly<BigRat>> next(r + 1, LaurentPoly<BigRat>(n));
                    for (int d = 0; d <= r; ++d)
                        for (int k = 0; d + k <= r; ++k) {
                            BigRat c = qpoch(P.t, k, P.q) / qpoch(P.q, k, P.q);
                            next[d + k] += byDeg[d] * LaurentPoly<BigRat>::variable(n, i, sign * k).scaled(c);
                        }
                    byDeg = std::move(next);
                }
            }
            EXPECT_EQ(byDeg[r], g_series(n, r, P)) << n << " " << r;
        }
    }
}

TEST(TableauD, SmallCases) {
    auto P = symbolic_params();
    EXPECT_EQ(tableau_poly_D(1, 0, P), LaurentPoly<Scalar>::constant(1, Scalar(1)));
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(tableau_poly_D(1, r, P), xr_plus_xmr(r));
    EXPECT_EQ(to_text(tableau_poly_D(1, 3, P)), "x1^3 + x1^-3");
    EXPECT_EQ(to_text(tableau_poly_D(3, 0, P)), "1");
}

TEST(TableauD, D2IsA1TimesA1) {
    auto P = sampled();
    for (int r = 0; r <= 4; ++r)
        EXPECT_EQ(to_text(tableau_poly_D(2, r, P)), to_text(a1_pair_product(r, P))) << r;
}

TEST(TableauD, GoldenValues) {
    auto d = tableau_poly_D(3, 3, golden_params());
    EXPECT_EQ(d.size(), 44u);
    EXPECT_EQ(d.coeff({-3, 0, 0}), 1);
    EXPECT_EQ(d.coeff({-2, -1, 0}), R(134, 233));
    EXPECT_EQ(d.coeff({-2, 0, 1}), R(134, 233));
    auto c = tableau_poly_C_special(2, 3, golden_params());
    EXPECT_EQ(c.size(), 16u);
    EXPECT_EQ(c.coeff({1, 0}), R(-197047, 2678102));
    auto g = tableau_poly_C_general(3, 2, R(5, 7), golden_params());
    EXPECT_EQ(g.coeff({0, 0, 0}), R(10494, 6583));
    EXPECT_EQ(g.coeff({1, 1, 0}), R(18, 29));
}

TEST(TableauD, MonicAndSymmetric) {
    auto P = symbolic_params();
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 3; ++r) {
            auto p = tableau_poly_D(n, r, P);
            Exps top(n, 0);
            top[0] = r;
            EXPECT_EQ(p.coeff(top), Scalar(1));
            EXPECT_TRUE(hyperoctahedral_check(p)) << n << " " << r;
        }
}

TEST(TableauD, FactorRewriting) {
    auto P = symbolic_params();
    for (int n = 2; n <= 3; ++n)
        for (int r = 0; r <= 3; ++r)
            for_each_tableau(Alphabet(Family::D, n), r, [&](const OneRowTableau& tab) {
                for (int l = 1; l <= n - 1; ++l) EXPECT_EQ(d_factor(tab, l, P), d_factor_symmetric(tab, l, P));
            });
}

TEST(Lassalle, DSymbolic) {
    auto P = symbolic_params();
    for (int n = 1; n <= 2; ++n)
        for (int r = 0; r <= 3; ++r) EXPECT_EQ(tableau_poly_D(n, r, P), lassalle_invert(Family::D, n, r, P)) << n << r;
    EXPECT_EQ(to_text(lassalle_invert(Family::D, 1, 2, P)), "x1^2 + x1^-2");
}

TEST(Lassalle, CSpecialSymbolic) {
    auto P = symbolic_params();
    for (int n = 1; n <= 2; ++n)
        for (int r = 0; r <= 3; ++r) {
            auto cs = tableau_poly_C_special(n, r, P);
            EXPECT_EQ(cs, lassalle_invert(Family::C, n, r, P)) << n << r;
            EXPECT_EQ(cs, tableau_poly_C_general(n, r, Scalar(Scalar::t() * Scalar::t() / Scalar::q()), P));
        }
}

TEST(Lassalle, CSpecialOneVariable) {
    // n = 1: x^{-r} 2phi1[t^2/q, q^{-r}; t^{-2} q^{2-r}; q, (q x / t)^2] evaluated at x values
    auto P = sampled();
    for (int r = 0; r <= 4; ++r) {
        auto p = tableau_poly_C_special(1, r, P);
        for (BigRat x : {R(3, 11), R(5, 2)}) {
            auto s = phi_series<BigRat>({P.t * P.t / P.q, int_pow(P.q, -r)}, {int_pow(P.t, -2) * int_pow(P.q, 2 - r)}, P.q,
                                        BigRat((P.q * x / P.t) * (P.q * x / P.t)));
            EXPECT_EQ(substitute(p, {x}), int_pow(x, -r) * series_eval(s)) << r;
        }
    }
    EXPECT_EQ(to_text(tableau_poly_C_special(1, 1, symbolic_params())), "x1 + x1^-1");
}

TEST(Lassalle, GeneralTExpansion) {
    auto P = symbolic_params();
    Scalar Ts[] = {Scalar::T(), Scalar::t().pow(3), Scalar(R(5, 7))};
    for (auto& T : Ts)
        for (int r = 0; r <= 3; ++r) {
            std::function<LaurentPoly<Scalar>(int)> fam = [&](int k) { return tableau_poly_C_general(2, k, T, P); };
            EXPECT_EQ(lassalle_expand(2, r, T, fam, P), g_series(2, r, P)) << r;
        }
}

TEST(Lassalle, GeneralTRowOneIsTIndependent) {
    auto P = symbolic_params();
    EXPECT_EQ(tableau_poly_C_general(2, 1, Scalar::T(), P), tableau_poly_C_general(2, 1, Scalar(R(5, 7)), P));
    EXPECT_EQ(to_text(tableau_poly_C_general(3, 0, Scalar::T(), P)), "1");
}

TEST(Lassalle, ExpandRowOne) {
    auto P = symbolic_params();
    std::function<LaurentPoly<Scalar>(int)> m = [&](int k) { return orbit_sum<Scalar>(2, {k, 0}); };
    EXPECT_EQ(lassalle_expand(2, 1, Scalar::T(), m, P), g_series(2, 1, P));
}

TEST(Principal, Examples) {
    auto P = symbolic_params();
    Scalar t = Scalar::t();
    auto x = principal_point(2, Scalar(1), P);
    EXPECT_EQ(substitute(tableau_poly_D(2, 1, P), x), (Scalar(1) + t).pow(2) / t);
    EXPECT_EQ(principal_closed_D(2, 1, P), (Scalar(1) + t).pow(2) / t);
    EXPECT_EQ(substitute(tableau_poly_D(1, 3, P), {Scalar(1)}), Scalar(2));
    EXPECT_THROW(principal_closed_D(1, 2, P), UsageError);
    EXPECT_EQ(principal_closed_C(2, 0, Scalar::T(), Scalar::w(), P), Scalar(1));
}

TEST(Principal, ClosedFormsSmall) {
    auto P = symbolic_params();
    Scalar w = Scalar::w(), T = Scalar::T();
    Scalar ws = Scalar::t() / Scalar::u();  // sqrt(t^2/q)
    for (int r = 0; r <= 3; ++r) {
        EXPECT_EQ(substitute(tableau_poly_D(2, r, P), principal_point(2, Scalar(1), P)), principal_closed_D(2, r, P));
        EXPECT_EQ(substitute(tableau_poly_C_special(2, r, P), principal_point(2, ws, P)),
                  principal_closed_C(2, r, Scalar(ws * ws), ws, P));
        EXPECT_EQ(substitute(tableau_poly_C_general(2, r, T, P), principal_point(2, w, P)), principal_closed_C(2, r, T, w, P));
    }
}

TEST(Principal, PrintedGeneralFormDiffers) {
    auto P = symbolic_params();
    Scalar w = Scalar::w(), T = Scalar::T();
    EXPECT_NE(principal_closed_C_printed(2, 1, T, w, P), principal_closed_C(2, 1, T, w, P));
}

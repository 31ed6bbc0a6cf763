#include <gtest/gtest.h>

#include "onerow/text.hpp"
#include "onerow/walgebra.hpp"

using namespace onerow;

namespace {

BigRat R(long n, long d = 1) { return rat(n, d); }

std::vector<std::vector<int>> tableau_thetas(Family f, int l, int r) {
    std::vector<std::vector<int>> out;
    for (auto& t : enumerate(Alphabet(f, l), r)) out.push_back(t.theta);
    return out;
}

}  // namespace

TEST(Gamma, Base) {
    EXPECT_EQ(gamma_base(R(0), R(2, 3), R(5, 7)), R(1));
    BigRat z = R(3, 11);
    EXPECT_EQ(gamma_base(z, R(2, 3), R(1)), R(1));  // t = q makes th = 1
    EXPECT_THROW(gamma_base(R(1), R(2, 3), R(5, 7)), ArithmeticError);
    EXPECT_THROW(gamma_base(BigRat(R(4, 9) / R(25, 49)), R(2, 3), R(5, 7)), ArithmeticError);
    Scalar u = Scalar::u(), v = Scalar::v();
    EXPECT_EQ(gamma_base(Scalar(0), u, v), Scalar(1));
    EXPECT_THROW(gamma_base(Scalar(1), u, v), ArithmeticError);
}

TEST(Gamma, PairCases) {
    GammaTable gt{Alphabet(Family::C, 2)};
    BigRat z = R(3, 13), w = R(5, 17), qh = R(2, 3), th = R(5, 7);
    const Alphabet& a = gt.alphabet;
    int one = a.unbarred(1), two = a.unbarred(2), onebar = a.barred(1);
    EXPECT_EQ(gamma_pair(gt, one, one, z, w, qh, th), R(1));
    EXPECT_EQ(gamma_pair(gt, one, two, z, w, qh, th), gamma_base(BigRat(w / z), qh, th));
    EXPECT_EQ(gamma_pair(gt, two, one, z, w, qh, th), gamma_base(BigRat(z / w), qh, th));
    // conjugate pair i = 1, l = 2: constant qh^{-2} th^{4}
    BigRat c = int_pow(qh, -2) * int_pow(th, 4);
    EXPECT_EQ(gamma_pair(gt, one, onebar, z, w, qh, th),
              gamma_base(BigRat(w / z), qh, th) * gamma_base(BigRat(c * w / z), qh, th));
    EXPECT_EQ(gamma_pair(gt, onebar, one, z, w, qh, th),
              gamma_base(BigRat(z / w), qh, th) * gamma_base(BigRat(c * z / w), qh, th));
    GammaTable printed{Alphabet(Family::C, 2), GammaConvention::printed};
    BigRat cp = int_pow(qh, -4) * int_pow(th, 2);
    EXPECT_EQ(gamma_pair(printed, one, onebar, z, w, qh, th),
              gamma_base(BigRat(w / z), qh, th) * gamma_base(BigRat(cp * w / z), qh, th));
}

TEST(Correlation, SmallLengths) {
    auto P = symbolic_params();
    for (auto f : {Family::C, Family::D})
        for (int l = 1; l <= 3; ++l) {
            EXPECT_EQ(to_text(phi_principal(f, l, 0, P)), "1");
            EXPECT_EQ(phi_principal(f, l, 1, P), orbit_sum<Scalar>(l, [&] {
                          Exps e(l, 0);
                          e[0] = 1;
                          return e;
                      }()));
        }
}

TEST(Correlation, OneVariableLengthTwo) {
    // four sequences: 11, 1 1bar, 1bar 1, 1bar 1bar
    auto P = sampled_params(R(2, 3), R(5, 7));
    auto spec = principal_spec(Family::C, 1, 2, P);
    auto res = correlation_F(spec);
    const auto& s = spec;
    BigRat cross = gamma_pair(s.table, 0, 1, s.z[0], s.z[1], s.qh, s.th) + gamma_pair(s.table, 1, 0, s.z[0], s.z[1], s.qh, s.th);
    EXPECT_EQ(res.poly.coeff({2}), R(1));
    EXPECT_EQ(res.poly.coeff({-2}), R(1));
    EXPECT_EQ(res.poly.coeff({0}), cross);
    EXPECT_EQ(res.poly, tableau_poly_C_special(1, 2, P));
}

TEST(Correlation, SymmetricInZ) {
    auto P = sampled_params(R(2, 3), R(5, 7));
    for (auto f : {Family::C, Family::D}) {
        CorrelationSpec<BigRat> s{GammaTable{Alphabet(f, 2)}, {R(3, 13), R(5, 17), R(7, 19)}, P.u, BigRat(P.u / P.v)};
        auto base = correlation_F(s).poly;
        auto s1 = s;
        std::swap(s1.z[0], s1.z[1]);
        auto s2 = s;
        std::swap(s2.z[1], s2.z[2]);
        EXPECT_EQ(correlation_F(s1).poly, base);
        EXPECT_EQ(correlation_F(s2).poly, base);
    }
}

TEST(Correlation, PrintedTableBreaksSymmetry) {
    auto P = sampled_params(R(2, 3), R(5, 7));
    CorrelationSpec<BigRat> s{GammaTable{Alphabet(Family::C, 2), GammaConvention::printed},
                              {R(3, 13), R(5, 17)}, P.u, BigRat(P.u / P.v)};
    auto s1 = s;
    std::swap(s1.z[0], s1.z[1]);
    EXPECT_NE(correlation_F(s).poly, correlation_F(s1).poly);
    auto Ps = symbolic_params();
    EXPECT_FALSE(
        (phi_principal(Family::C, 2, 2, Ps, Enumeration::full, kDefaultCorrelationBudget, GammaConvention::printed) -
         tableau_poly_C_special(2, 2, Ps))
            .is_zero());
}

TEST(Correlation, Budget) {
    auto P = symbolic_params();
    EXPECT_THROW(phi_principal(Family::C, 3, 7, P, Enumeration::full, 1000), BudgetError);
    EXPECT_NO_THROW(phi_principal(Family::C, 2, 3, P, Enumeration::full, 64));
    EXPECT_THROW(phi_principal(Family::C, 2, 3, P, Enumeration::full, 63), BudgetError);
    EXPECT_NO_THROW(phi_principal(Family::C, 3, 3, P, Enumeration::increasing, 56));
}

TEST(Soukan, SymbolicResidualsVanish) {
    auto P = symbolic_params();
    for (auto f : {Family::C, Family::D})
        for (int l = 1; l <= 2; ++l)
            for (int r = 0; r <= 3; ++r) {
                EXPECT_TRUE(soukan_residual(f, l, r, P).is_zero()) << family_name(f) << l << r;
                EXPECT_TRUE(soukan_residual(f, l, r, P, Enumeration::increasing).is_zero()) << family_name(f) << l << r;
            }
    EXPECT_EQ(phi_principal(Family::D, 2, 2, P), tableau_poly_D(2, 2, P));
}

TEST(Soukan, SupportIsTableaux) {
    auto P = symbolic_params();
    for (auto f : {Family::C, Family::D})
        for (int l = 1; l <= 3; ++l)
            for (int r = 0; r <= 3; ++r) {
                auto expect = tableau_thetas(f, l, r);
                EXPECT_EQ(phi_support(f, l, r, P, Enumeration::full), expect) << family_name(f) << l << r;
                EXPECT_EQ(phi_support(f, l, r, P, Enumeration::increasing), expect) << family_name(f) << l << r;
            }
}

// Copyright 2026 The edpoly Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "edpoly/y_poly.hpp"

using namespace edpoly;

namespace {

CoefPoly random_coef(std::mt19937_64& rng, int max_terms, Exponent max_exp, long bound) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<Exponent> ex(0, max_exp);
    std::uniform_int_distribution<long> cv(-bound, bound);
    std::vector<Term> terms;
    for (int i = nt(rng); i > 0; --i) terms.push_back({ex(rng), ex(rng), BigInt(cv(rng))});
    return CoefPoly::from_terms(std::move(terms));
}

// Homogeneous coefficients of one total degree, the shape met inside the recursion.
CoefPoly random_homogeneous(std::mt19937_64& rng, Exponent deg, const BigInt& bound) {
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(static_cast<unsigned long>(rng()));
    std::vector<Term> terms;
    for (Exponent i = 0; i <= deg; ++i) {
        if (rng() % 3 == 0) continue;
        BigInt c = gr.get_z_range(2 * bound + 1) - bound;
        terms.push_back({i, deg - i, c});
    }
    return CoefPoly::from_terms(std::move(terms));
}

YPoly random_ypoly(std::mt19937_64& rng, int max_deg, int max_terms, Exponent max_exp, long bound) {
    std::uniform_int_distribution<int> dg(-1, max_deg);
    std::vector<CoefPoly> c(static_cast<std::size_t>(dg(rng) + 1));
    for (auto& x : c) x = random_coef(rng, max_terms, max_exp, bound);
    return YPoly(std::move(c));
}

const CoefPoly A = CoefPoly::a();
const CoefPoly D = CoefPoly::d();

}  // namespace

TEST(YPoly, RenderingOfBaseShapes) {
    const YPoly y = YPoly::y();
    EXPECT_EQ(YPoly().to_string(), "0");
    EXPECT_EQ(YPoly(1).to_string(), "1");
    EXPECT_EQ((y + YPoly(1)).to_string(), "y + 1");
    const YPoly p3 = -YPoly::monomial(D, 4) - YPoly::monomial(CoefPoly(2) * D, 3) + YPoly::monomial(CoefPoly(2) * A, 1) +
                     YPoly(A);
    EXPECT_EQ(p3.to_string(), "-d*y^4 - 2*d*y^3 + 2*a*y + a");
    EXPECT_EQ(YPoly::monomial(A - D, 2).to_string(), "(a - d)*y^2");
    EXPECT_EQ(YPoly(A - D).to_string(), "a - d");
    EXPECT_EQ((YPoly::monomial(A - D, 1) + YPoly(A - D)).to_string(), "(a - d)*y + (a - d)");
    EXPECT_EQ(YPoly::monomial(-3, 5).to_string(), "-3*y^5");
}

TEST(YPoly, DegreeTrimAndAccessors) {
    YPoly p(std::vector<CoefPoly>{A, CoefPoly(), CoefPoly(), CoefPoly()});
    EXPECT_EQ(p.degree(), 0);
    EXPECT_EQ(YPoly().degree(), YPoly::kMinusInfinity);
    const YPoly q = YPoly::monomial(D, 3) + YPoly::monomial(A, 1);
    EXPECT_EQ(q.low_degree(), 1);
    EXPECT_EQ(q.leading(), D);
    EXPECT_TRUE(q.coeff(17).is_zero());
}

TEST(YPoly, ArithmeticAgreesWithEvaluation) {
    std::mt19937_64 rng(2024);
    PrimeField f(1000003);
    std::uniform_int_distribution<u64> pick(0, 1000002);
    for (int trial = 0; trial < 200; ++trial) {
        const YPoly l = random_ypoly(rng, 8, 4, 4, 40);
        const YPoly r = random_ypoly(rng, 8, 4, 4, 40);
        const FieldElem a = f.from_unsigned(pick(rng)), d = f.from_unsigned(pick(rng)), y = f.from_unsigned(pick(rng));
        EXPECT_EQ((l + r).eval(a, d, y), l.eval(a, d, y) + r.eval(a, d, y));
        EXPECT_EQ((l - r).eval(a, d, y), l.eval(a, d, y) - r.eval(a, d, y));
        EXPECT_EQ((l * r).eval(a, d, y), l.eval(a, d, y) * r.eval(a, d, y));
    }
}

TEST(YPoly, KroneckerMatchesSchoolbook) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int dl = static_cast<int>(rng() % 40), dr = static_cast<int>(rng() % 40);
        const Exponent hl = static_cast<Exponent>(rng() % 25), hr = static_cast<Exponent>(rng() % 25);
        const BigInt bound = BigInt(1) << static_cast<unsigned>(rng() % 200 + 1);
        std::vector<CoefPoly> lc(static_cast<std::size_t>(dl) + 1), rc(static_cast<std::size_t>(dr) + 1);
        for (auto& c : lc) c = random_homogeneous(rng, hl, bound);
        for (auto& c : rc) c = random_homogeneous(rng, hr, bound);
        const YPoly l(std::move(lc)), r(std::move(rc));
        EXPECT_EQ(YPoly::mul_kronecker(l, r), YPoly::mul_schoolbook(l, r)) << "trial " << trial;
        EXPECT_EQ(YPoly::mul_kronecker(l, l), YPoly::mul_schoolbook(l, l)) << "square, trial " << trial;
    }
}

TEST(YPoly, KroneckerHandlesMixedDegreesAndSigns) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const YPoly l = random_ypoly(rng, 12, 6, 6, 1000000);
        const YPoly r = random_ypoly(rng, 12, 6, 6, 3);
        EXPECT_EQ(YPoly::mul_kronecker(l, r), YPoly::mul_schoolbook(l, r)) << "trial " << trial;
    }
}

TEST(YPoly, ExactDivision) {
    std::mt19937_64 rng(31);
    const YPoly y1 = YPoly::y() + YPoly(1);
    for (int trial = 0; trial < 100; ++trial) {
        const YPoly q = random_ypoly(rng, 10, 4, 4, 50);
        EXPECT_EQ(YPoly::exact_div(q * y1, y1), q);
        const YPoly den = YPoly::monomial(A - D, 2) + YPoly(D);
        EXPECT_EQ(YPoly::exact_div(q * den, den), q);
    }
    const YPoly p3 = -YPoly::monomial(D, 4) - YPoly::monomial(CoefPoly(2) * D, 3) + YPoly::monomial(CoefPoly(2) * A, 1) +
                     YPoly(A);
    EXPECT_THROW(YPoly::exact_div(p3, y1), NonExactDivision);
    EXPECT_THROW(YPoly::exact_div(y1, YPoly()), NonExactDivision);
    EXPECT_THROW(YPoly::exact_div(YPoly(1), y1), NonExactDivision);
    EXPECT_TRUE(YPoly::exact_div(YPoly(), y1).is_zero());
}

TEST(YPoly, SpecialValuesAndReduction) {
    const YPoly p = YPoly::monomial(A, 3) + YPoly::monomial(CoefPoly(7) * D, 1) + YPoly(CoefPoly(5));
    EXPECT_EQ(p.at_minus_one(), -A - CoefPoly(7) * D + CoefPoly(5));
    EXPECT_EQ(p.at_one(), A + CoefPoly(7) * D + CoefPoly(5));
    const YPoly r = p.reduce_mod(7);
    EXPECT_EQ(r.degree(), 3);
    EXPECT_TRUE(r.coeff(1).is_zero());
    EXPECT_EQ(YPoly::monomial(CoefPoly(5), 4).reduce_mod(5).degree(), YPoly::kMinusInfinity);
}

TEST(YPoly, PowerMatchesRepeatedProduct) {
    const YPoly b = YPoly::y() - YPoly(A);
    EXPECT_EQ(b.pow(0), YPoly(1));
    EXPECT_EQ(b.pow(3), b * b * b);
}

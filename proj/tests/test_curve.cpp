// Copyright 2026 The edpoly Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "edpoly/curve.hpp"
#include "edpoly/sampling.hpp"

using namespace edpoly;

namespace {

std::vector<EdwardsCurve> small_curves() {
    std::vector<EdwardsCurve> out;
    for (u64 p : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
        PrimeField f(p);
        for (u64 a = 1; a < p; ++a)
            for (u64 d = 1; d < p; ++d)
                if (a != d && (a * 7 + d * 3) % 5 == 0) out.emplace_back(f, f.from_unsigned(a), f.from_unsigned(d));
    }
    return out;
}

}  // namespace

TEST(EdwardsCurve, RejectsDegenerateParameters) {
    EXPECT_THROW(EdwardsCurve(7, 3, 3), InvalidCurve);
    EXPECT_THROW(EdwardsCurve(7, 0, 3), InvalidCurve);
    EXPECT_THROW(EdwardsCurve(7, 3, 7), InvalidCurve);
    try {
        EdwardsCurve(11, 2, 2);
        FAIL();
    } catch (const InvalidCurve& e) {
        EXPECT_STREQ(e.what(), "a and d must be distinct and non-zero");
    }
    EXPECT_THROW(EdwardsCurve(9, 1, 2), InvalidField);
}

TEST(EdwardsCurve, AdditionBasics) {
    const EdwardsCurve C(13, 1, 2);
    const EdwardsPoint O = C.identity();
    const EdwardsPoint T = C.order_two_point();
    EXPECT_EQ(ed_add(C, T, T), O);
    for (const auto& P : enumerate_points(C)) {
        EXPECT_EQ(ed_add(C, O, P), P);
        EXPECT_EQ(ed_add(C, P, C.negate(P)), O);
    }
    EXPECT_EQ(ed_scalar_mul_naive(C, C.point(0, -1), 0), O);
}

TEST(EdwardsCurve, GroupAxiomsOnCompleteCurves) {
    Rng rng(11);
    for (u64 p : {13ULL, 101ULL, 1009ULL}) {
        PrimeField f(p);
        for (int c = 0; c < 5; ++c) {
            const EdwardsCurve C = random_curve(rng, f, CurveKind::complete);
            ASSERT_TRUE(C.is_complete());
            for (int t = 0; t < 60; ++t) {
                const auto P = random_point(rng, C), Q = random_point(rng, C), R = random_point(rng, C);
                if (!P || !Q || !R) continue;
                EXPECT_TRUE(C.contains(ed_add(C, *P, *Q)));
                EXPECT_EQ(ed_add(C, *P, *Q), ed_add(C, *Q, *P));
                EXPECT_EQ(ed_add(C, ed_add(C, *P, *Q), *R), ed_add(C, *P, ed_add(C, *Q, *R)));
            }
        }
    }
}

TEST(EdwardsCurve, NonCompleteCurveCanHitZeroDenominator) {
    // d square: some pair of points makes 1 +/- d x1 x2 y1 y2 vanish.
    bool hit = false;
    for (const auto& C : small_curves()) {
        if (C.d().legendre() != 1) continue;
        const auto pts = enumerate_points(C);
        for (const auto& P : pts)
            for (const auto& Q : pts) {
                try {
                    EXPECT_TRUE(C.contains(ed_add(C, P, Q)));
                } catch (const DenominatorZero&) {
                    hit = true;
                }
            }
    }
    EXPECT_TRUE(hit);
    for (const auto& C : small_curves()) {
        if (!C.is_complete()) continue;
        const auto pts = enumerate_points(C);
        for (const auto& P : pts)
            for (const auto& Q : pts) EXPECT_NO_THROW(ed_add(C, P, Q));
    }
}

TEST(EdwardsCurve, NaiveMultiplicationAndOrder) {
    for (const auto& C : small_curves()) {
        for (const auto& P : enumerate_points(C)) {
            const auto ord = ed_order(C, P);
            EXPECT_EQ(ed_order(C, C.negate(P)), ord);
            if (!C.is_complete()) continue;
            EXPECT_EQ(ed_scalar_mul_naive(C, P, 1), P);
            EXPECT_EQ(ed_scalar_mul_naive(C, P, ord), C.identity());
            EXPECT_EQ(ed_scalar_mul_naive(C, P, 2 * ord), C.identity());
            for (unsigned long long k = 1; k < ord; ++k) EXPECT_NE(ed_scalar_mul_naive(C, P, k), C.identity());
        }
    }
}

TEST(Birational, SpecialPointsAndOnCurve) {
    for (const auto& C : small_curves()) {
        const auto W = WeierstrassCurve::from_edwards(C);
        const PrimeField& f = C.field();
        EXPECT_TRUE(to_weierstrass(C, C.identity()).infinity);
        const auto T = to_weierstrass(C, C.order_two_point());
        EXPECT_EQ(T, WeierstrassPoint::affine((C.a() + C.d()) / f(6), f.zero()));
        EXPECT_EQ(std::get<EdwardsPoint>(from_weierstrass(C, WeierstrassPoint::O())), C.identity());
        EXPECT_EQ(std::get<EdwardsPoint>(from_weierstrass(C, T)), C.order_two_point());
        for (const auto& P : enumerate_points(C)) {
            ASSERT_TRUE(C.contains(P));
            const auto Q = to_weierstrass(C, P);
            EXPECT_TRUE(W.contains(Q));
            const auto back = from_weierstrass(C, Q);
            ASSERT_TRUE(std::holds_alternative<EdwardsPoint>(back));
            EXPECT_EQ(std::get<EdwardsPoint>(back), P);
        }
    }
}

TEST(Birational, Homomorphism) {
    std::size_t checked = 0;
    for (const auto& C : small_curves()) {
        const auto W = WeierstrassCurve::from_edwards(C);
        const auto pts = enumerate_points(C);
        for (const auto& P : pts)
            for (const auto& Q : pts) {
                EdwardsPoint R;
                try {
                    R = ed_add(C, P, Q);
                } catch (const DenominatorZero&) {
                    continue;
                }
                EXPECT_EQ(to_weierstrass(C, R), ws_add(W, to_weierstrass(C, P), to_weierstrass(C, Q)));
                ++checked;
            }
    }
    EXPECT_GT(checked, 1000u);
}

TEST(Birational, ExceptionalSetAndCounts) {
    std::size_t with_four = 0, with_two = 0;
    for (const auto& C : small_curves()) {
        const auto W = WeierstrassCurve::from_edwards(C);
        const auto ex = exceptional_set(C);
        for (const auto& e : ex) {
            EXPECT_TRUE(W.contains(e.point));
            EXPECT_EQ(ws_order(W, e.point), e.order);
            const auto img = from_weierstrass(C, e.point);
            ASSERT_TRUE(std::holds_alternative<ExceptionalPoint>(img));
            EXPECT_EQ(std::get<ExceptionalPoint>(img).order, e.order);
            (e.order == 4 ? with_four : with_two) += 1;
        }
        EXPECT_EQ(ex.size(), (C.d().is_square() ? 2u : 0u) + ((C.a() * C.d()).is_square() ? 2u : 0u));
        // Every Weierstrass point is either an image or exceptional.
        const auto wpts = enumerate_points(W);
        const auto epts = enumerate_points(C);
        EXPECT_EQ(wpts.size(), epts.size() + ex.size());
        std::size_t flagged = 0;
        for (const auto& Q : wpts) flagged += std::holds_alternative<ExceptionalPoint>(from_weierstrass(C, Q));
        EXPECT_EQ(flagged, ex.size());
    }
    EXPECT_GT(with_four, 0u);
    EXPECT_GT(with_two, 0u);
}

TEST(Birational, OffCurveInputRejected) {
    const EdwardsCurve C(13, 1, 2);
    const PrimeField& f = C.field();
    const auto W = WeierstrassCurve::from_edwards(C);
    for (u64 u = 0; u < 13; ++u)
        for (u64 v = 0; v < 13; ++v) {
            const auto Q = WeierstrassPoint::affine(f.from_unsigned(u), f.from_unsigned(v));
            if (!W.contains(Q)) EXPECT_THROW(from_weierstrass(C, Q), NotOnCurve);
        }
}

TEST(Enumeration, OrderingAndLimits) {
    const EdwardsCurve C(5, 1, 2);
    const auto pts = enumerate_points(C);
    EXPECT_NE(std::find(pts.begin(), pts.end(), C.point(0, 1)), pts.end());
    EXPECT_NE(std::find(pts.begin(), pts.end(), C.point(0, 4)), pts.end());
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [](const EdwardsPoint& l, const EdwardsPoint& r) {
        return l.x.value() != r.x.value() ? l.x.value() < r.x.value() : l.y.value() < r.y.value();
    }));
    const EdwardsCurve big(10007, 1, 2);
    EXPECT_THROW(enumerate_points(big), FieldTooLarge);
    EXPECT_NO_THROW(enumerate_points(big, 20000));
    EXPECT_EQ(C.point(3, 4).to_string(), "(3 : 4)");
}

TEST(Weierstrass, ChordTangentBasics) {
    const EdwardsCurve C(23, 3, 7);
    const auto W = WeierstrassCurve::from_edwards(C);
    const PrimeField& f = C.field();
    const auto T = WeierstrassPoint::affine((C.a() + C.d()) / f(6), f.zero());
    EXPECT_TRUE(ws_add(W, T, T).infinity);
    for (const auto& Q : enumerate_points(W)) {
        EXPECT_EQ(ws_add(W, WeierstrassPoint::O(), Q), Q);
        if (!Q.infinity) EXPECT_TRUE(ws_add(W, Q, WeierstrassPoint::affine(Q.u, -Q.v)).infinity);
    }
    EXPECT_THROW(WeierstrassCurve(f, f.zero(), f.zero()), InvalidCurve);
}

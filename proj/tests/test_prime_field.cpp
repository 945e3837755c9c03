// Copyright 2026 The edpoly Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "edpoly/prime_field.hpp"

using namespace edpoly;

TEST(PrimeField, RejectsBadModuli) {
    for (u64 p : {0ULL, 1ULL, 2ULL, 3ULL, 4ULL, 9ULL, 15ULL, 1001ULL, 561ULL})
        EXPECT_THROW(PrimeField{p}, InvalidField) << p;
    EXPECT_NO_THROW(PrimeField{5});
    EXPECT_NO_THROW(PrimeField{1009});
    EXPECT_NO_THROW(PrimeField{18446744073709551557ULL});
}

TEST(PrimeField, ReducesSignedInput) {
    PrimeField f(7);
    EXPECT_EQ(f(-1).value(), 6u);
    EXPECT_EQ(f(15).value(), 1u);
    EXPECT_EQ(f(-15).value(), 6u);
    EXPECT_EQ(f(std::numeric_limits<long long>::min()).value(),
              static_cast<u64>((static_cast<__int128>(std::numeric_limits<long long>::min()) % 7 + 7) % 7));
}

TEST(PrimeField, InverseMatchesBruteForce) {
    for (u64 p : {5ULL, 7ULL, 11ULL, 97ULL}) {
        PrimeField f(p);
        for (u64 v = 1; v < p; ++v) {
            u64 brute = 0;
            for (u64 w = 1; w < p; ++w)
                if (v * w % p == 1) brute = w;
            EXPECT_EQ(f.from_unsigned(v).inverse().value(), brute);
        }
        EXPECT_THROW(f.zero().inverse(), DivisionByZero);
        EXPECT_THROW(f.one() / f.zero(), DivisionByZero);
    }
}

TEST(PrimeField, LegendreAndSqrtMatchSquareTable) {
    for (u64 p : {5ULL, 13ULL, 17ULL, 41ULL, 97ULL, 1009ULL}) {
        PrimeField f(p);
        std::set<u64> squares;
        for (u64 v = 1; v < p; ++v) squares.insert(v * v % p);
        EXPECT_EQ(f.zero().legendre(), 0);
        EXPECT_TRUE(f.zero().sqrt().has_value());
        for (u64 v = 1; v < p; ++v) {
            const FieldElem e = f.from_unsigned(v);
            const bool sq = squares.count(v) > 0;
            EXPECT_EQ(e.legendre(), sq ? 1 : -1);
            auto r = e.sqrt();
            ASSERT_EQ(r.has_value(), sq);
            if (r) {
                EXPECT_EQ(*r * *r, e);
                EXPECT_LE(r->value(), p - r->value());
            }
        }
    }
}

TEST(PrimeField, MixingFieldsThrows) {
    PrimeField f(5), g(7);
    EXPECT_THROW(f.one() + g.one(), FieldMismatch);
    EXPECT_THROW(f.one() * g.one(), FieldMismatch);
}

TEST(PrimeField, LargeModulusArithmetic) {
    const u64 p = 18446744073709551557ULL;
    PrimeField f(p);
    const FieldElem x = f.from_unsigned(p - 2);
    EXPECT_EQ((x * x).value(), 4u);
    EXPECT_EQ((x * x.inverse()).value(), 1u);
    EXPECT_EQ((x + f(3)).value(), 1u);
}

/*
   Copyright 2026 The edpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EDPOLY_SAMPLING_HPP
#define EDPOLY_SAMPLING_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "curve.hpp"
#include "prime_field.hpp"

namespace edpoly {

using Rng = std::mt19937_64;

/// Primes p with lo <= p <= hi and p > 3, ascending.
inline std::vector<u64> primes_between(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 p = std::max<u64>(lo, 5); p <= hi; ++p)
        if (detail::is_prime_u64(p)) out.push_back(p);
    return out;
}

enum class CurveKind {
    any,       // a, d distinct and non-zero
    complete,  // a square, d non-square
};

inline EdwardsCurve random_curve(Rng& rng, const PrimeField& f, CurveKind kind = CurveKind::any) {
    std::uniform_int_distribution<u64> pick(1, f.modulus() - 1);
    for (;;) {
        const FieldElem a = f.from_unsigned(pick(rng));
        const FieldElem d = f.from_unsigned(pick(rng));
        if (a == d) continue;
        if (kind == CurveKind::complete && (a.legendre() != 1 || d.legendre() != -1)) continue;
        return EdwardsCurve(f, a, d);
    }
}

/// A random affine point other than (0, 1) and (0, -1); empty when none was found
/// (a small curve may have no such point).
inline std::optional<EdwardsPoint> random_point(Rng& rng, const EdwardsCurve& C) {
    const PrimeField& f = C.field();
    std::uniform_int_distribution<u64> pick(1, f.modulus() - 1);
    const u64 attempts = std::min<u64>(8 * f.modulus(), 4096);
    for (u64 attempt = 0; attempt < attempts; ++attempt) {
        const FieldElem x = f.from_unsigned(pick(rng));
        const FieldElem x2 = x * x;
        const FieldElem den = f.one() - C.d() * x2;
        if (den.is_zero()) continue;
        auto y = ((f.one() - C.a() * x2) / den).sqrt();
        if (!y) continue;
        const FieldElem yy = (rng() & 1) ? -*y : *y;
        return EdwardsPoint{x, yy};
    }
    return std::nullopt;
}

}  // namespace edpoly

#endif  // EDPOLY_SAMPLING_HPP

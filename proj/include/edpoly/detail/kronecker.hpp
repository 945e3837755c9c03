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

// Multiplication in Z[a,d][y] by Kronecker substitution.
//
// Each operand is split into slices of fixed total (a,d)-degree D. Inside a
// slice the d-exponent is D - i, so a term c*a^i*d^(D-i)*y^k is addressed by
// the slot k*S + i alone. A slice is packed into one big integer with fixed
// width slots, every pair of slices is multiplied with a single mpz_mul, and
// the product is unpacked as balanced (signed) digits. The slot width is
// chosen so that every product coefficient c satisfies |c| < 2^(width-1).

#ifndef EDPOLY_DETAIL_KRONECKER_HPP
#define EDPOLY_DETAIL_KRONECKER_HPP

#include <gmp.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "../coef_poly.hpp"
#include "../errors.hpp"

namespace edpoly::detail {

struct SliceTerm {
    std::size_t y;
    Exponent a;
    const BigInt* c;
};

struct Slice {
    std::vector<SliceTerm> terms;
    std::size_t max_y = 0;
    std::size_t max_bits = 0;
};

inline std::map<Exponent, Slice> split_by_total_degree(std::span<const CoefPoly> poly) {
    std::map<Exponent, Slice> slices;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        for (const Term& t : poly[k].terms()) {
            Slice& s = slices[t.total()];
            s.terms.push_back(SliceTerm{k, t.a, &t.c});
            s.max_y = std::max(s.max_y, k);
            s.max_bits = std::max<std::size_t>(s.max_bits, mpz_sizeinbase(t.c.get_mpz_t(), 2));
        }
    }
    return slices;
}

inline mpz_class pack_slice(const Slice& s, std::size_t stride, std::size_t limbs_per_slot) {
    const std::size_t nlimbs = (s.max_y + 1) * stride * limbs_per_slot;
    mpz_class pos, neg;
    mp_limb_t* pp = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(nlimbs));
    mp_limb_t* np = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(nlimbs));
    std::fill_n(pp, nlimbs, mp_limb_t{0});
    std::fill_n(np, nlimbs, mp_limb_t{0});
    for (const SliceTerm& t : s.terms) {
        mpz_srcptr c = t.c->get_mpz_t();
        const std::size_t n = mpz_size(c);
        const mp_limb_t* src = mpz_limbs_read(c);
        mp_limb_t* dst = (mpz_sgn(c) > 0 ? pp : np) + (t.y * stride + t.a) * limbs_per_slot;
        std::copy(src, src + n, dst);
    }
    mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(nlimbs));
    mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(nlimbs));
    return pos - neg;
}

inline std::size_t bit_length(std::size_t v) {
    std::size_t b = 0;
    while (v) {
        ++b;
        v >>= 1;
    }
    return b;
}

/// Product of two coefficient sequences (index = y-degree) via Kronecker substitution.
inline std::vector<CoefPoly> kronecker_mul(std::span<const CoefPoly> f, std::span<const CoefPoly> g) {
    if (f.empty() || g.empty()) return {};
    const bool squaring = f.data() == g.data() && f.size() == g.size();
    const auto fs = split_by_total_degree(f);
    const auto gs = split_by_total_degree(g);
    std::vector<std::vector<Term>> acc(f.size() + g.size() - 1);

    for (const auto& [df, sf] : fs) {
        for (const auto& [dg, sg] : gs) {
            const std::size_t stride = static_cast<std::size_t>(df) + dg + 1;
            const std::size_t bits =
                sf.max_bits + sg.max_bits + bit_length(std::min(sf.terms.size(), sg.terms.size())) + 1;
            const std::size_t L = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

            mpz_class prod = pack_slice(sf, stride, L);
            if (squaring && df == dg) {
                mpz_mul(prod.get_mpz_t(), prod.get_mpz_t(), prod.get_mpz_t());
            } else {
                mpz_class other = pack_slice(sg, stride, L);
                mpz_mul(prod.get_mpz_t(), prod.get_mpz_t(), other.get_mpz_t());
            }

            const int sign = mpz_sgn(prod.get_mpz_t());
            const mp_limb_t* rp = mpz_limbs_read(prod.get_mpz_t());
            const std::size_t rn = mpz_size(prod.get_mpz_t());
            const std::size_t nslots = (sf.max_y + sg.max_y + 1) * stride;
            const Exponent total = df + dg;

            mpz_class half, full, digit;
            mpz_setbit(half.get_mpz_t(), L * GMP_NUMB_BITS - 1);
            mpz_setbit(full.get_mpz_t(), L * GMP_NUMB_BITS);
            int carry = 0;
            for (std::size_t t = 0; t < nslots; ++t) {
                const std::size_t off = t * L;
                if (off >= rn && carry == 0) break;
                const std::size_t avail = off < rn ? std::min(L, rn - off) : 0;
                mpz_t view;
                mpz_srcptr v = mpz_roinit_n(view, rp + std::min(off, rn), static_cast<mp_size_t>(avail));
                mpz_add_ui(digit.get_mpz_t(), v, static_cast<unsigned long>(carry));
                if (digit >= half) {
                    digit -= full;
                    carry = 1;
                } else {
                    carry = 0;
                }
                if (digit != 0) {
                    if (sign < 0) digit = -digit;
                    const std::size_t ydeg = t / stride;
                    const auto i = static_cast<Exponent>(t % stride);
                    acc[ydeg].push_back(Term{i, total - i, digit});
                }
            }
            if (carry != 0) throw InternalInconsistency("kronecker unpack overflow");
        }
    }

    std::vector<CoefPoly> out;
    out.reserve(acc.size());
    for (auto& terms : acc) out.push_back(CoefPoly::from_terms(std::move(terms)));
    return out;
}

}  // namespace edpoly::detail

#endif  // EDPOLY_DETAIL_KRONECKER_HPP

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

// Numeric specialization of the psi~ recursion.
//
// psi~_n(a0, d0, y0) mod p is computed by running the same recursion in
// F_p[[t]] / (t^K) with y = y0 + t. The map Z[a,d][y] -> F_p[[t]] is a ring
// homomorphism and F_p[[t]] is a domain, so exact quotients by (y+1) map to
// exact quotients. For y0 != -1 the divisor y0 + 1 + t is a unit and K = 1
// suffices; at y0 = -1 dividing by t shifts the series and costs one
// coefficient of precision, which is tracked explicitly.

#ifndef EDPOLY_SERIES_HPP
#define EDPOLY_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "divpoly_recursion.hpp"
#include "errors.hpp"
#include "prime_field.hpp"

namespace edpoly {

/// A power series in t over F_p known modulo t^precision().
class TruncatedSeries {
   public:
    TruncatedSeries() = default;
    TruncatedSeries(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {}

    u64 modulus() const noexcept { return p_; }
    std::size_t precision() const noexcept { return c_.size(); }
    const std::vector<u64>& coeffs() const noexcept { return c_; }

    /// First index with a nonzero coefficient, or precision() if none is known.
    std::size_t valuation() const noexcept {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return i;
        return c_.size();
    }

    friend TruncatedSeries operator+(const TruncatedSeries& l, const TruncatedSeries& r) {
        return l.combine(r, false);
    }
    friend TruncatedSeries operator-(const TruncatedSeries& l, const TruncatedSeries& r) {
        return l.combine(r, true);
    }
    friend TruncatedSeries operator*(const TruncatedSeries& l, const TruncatedSeries& r) {
        const u64 p = l.p_;
        const std::size_t vl = l.valuation();
        const std::size_t vr = r.valuation();
        const std::size_t prec = std::min({l.precision() + vr, r.precision() + vl, std::max(l.cap_, r.cap_)});
        std::vector<u64> out(prec, 0);
        for (std::size_t i = vl; i < l.c_.size() && i < prec; ++i) {
            if (l.c_[i] == 0) continue;
            for (std::size_t j = vr; j < r.c_.size() && i + j < prec; ++j)
                out[i + j] = (out[i + j] + detail::mulmod(l.c_[i], r.c_[j], p)) % p;
        }
        TruncatedSeries s(p, std::move(out));
        s.cap_ = std::max(l.cap_, r.cap_);
        return s;
    }

    void set_cap(std::size_t cap) noexcept { cap_ = cap; }
    std::size_t cap() const noexcept { return cap_; }

   private:
    TruncatedSeries combine(const TruncatedSeries& r, bool subtract) const {
        const std::size_t prec = std::min(precision(), r.precision());
        std::vector<u64> out(prec);
        for (std::size_t i = 0; i < prec; ++i) {
            const u64 b = subtract ? (r.c_[i] == 0 ? 0 : p_ - r.c_[i]) : r.c_[i];
            out[i] = c_[i] >= p_ - b ? c_[i] - (p_ - b) : c_[i] + b;
        }
        TruncatedSeries s(p_, std::move(out));
        s.cap_ = std::max(cap_, r.cap_);
        return s;
    }

    u64 p_ = 0;
    std::vector<u64> c_;
    std::size_t cap_ = 0;
};

/// F_p[[t]]/(t^K) with a, d fixed and y = y0 + t.
class SeriesRing {
   public:
    using value_type = TruncatedSeries;

    SeriesRing(FieldElem a, FieldElem d, FieldElem y0, std::size_t precision)
        : p_(a.modulus()), a_(a.value()), d_(d.value()), y0_(y0.value()), K_(precision) {
        if (a.modulus() != d.modulus() || a.modulus() != y0.modulus()) throw FieldMismatch();
        y_plus_one_ = (y0 + a.field().one()).value();
    }

    TruncatedSeries constant(long c) const { return scalar(PrimeField(p_)(c).value()); }
    TruncatedSeries a() const { return scalar(a_); }
    TruncatedSeries d() const { return scalar(d_); }
    TruncatedSeries y() const {
        std::vector<u64> c(K_, 0);
        c[0] = y0_;
        if (K_ > 1) c[1] = 1;
        return make(std::move(c));
    }

    TruncatedSeries div_by_y_plus_one(const TruncatedSeries& s) const {
        const auto& c = s.coeffs();
        if (y_plus_one_ != 0) {
            // (y_plus_one + t) * q = s, solved from the constant term up.
            const u64 inv = detail::powmod(y_plus_one_, p_ - 2, p_);
            std::vector<u64> q(c.size());
            u64 prev = 0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                const u64 diff = c[i] >= prev ? c[i] - prev : c[i] + (p_ - prev);
                q[i] = detail::mulmod(diff, inv, p_);
                prev = q[i];
            }
            return make(std::move(q));
        }
        if (c.empty()) throw InternalInconsistency("series precision exhausted while dividing by (y+1)");
        if (c[0] != 0) throw NonExactDivision("(y+1) does not divide the series at y = -1");
        return make(std::vector<u64>(c.begin() + 1, c.end()));
    }

    std::size_t precision() const noexcept { return K_; }

   private:
    TruncatedSeries scalar(u64 v) const {
        std::vector<u64> c(K_, 0);
        c[0] = v % p_;
        return make(std::move(c));
    }
    TruncatedSeries make(std::vector<u64> c) const {
        TruncatedSeries s(p_, std::move(c));
        s.set_cap(K_);
        return s;
    }

    u64 p_, a_, d_, y0_;
    u64 y_plus_one_ = 0;
    std::size_t K_;
};

/// psi~_n(a0, d0, y0) over F_p for arbitrary n, without symbolic expansion.
class SpecializedDivPoly {
   public:
    /// `n_hint` sizes the series precision needed when y0 = -1.
    SpecializedDivPoly(FieldElem a, FieldElem d, FieldElem y0, unsigned n_hint = 1024)
        : field_(a.field()), rec_(SeriesRing(a, d, y0, precision_for(y0, n_hint))) {}

    FieldElem value(unsigned n) {
        const TruncatedSeries& s = rec_.get(n);
        if (s.precision() == 0)
            throw InternalInconsistency("series precision exhausted for n = " + std::to_string(n));
        return field_.from_unsigned(s.coeffs()[0]);
    }

   private:
    static std::size_t precision_for(const FieldElem& y0, unsigned n_hint) {
        if (!(y0 + y0.field().one()).is_zero()) return 1;
        std::size_t bits = 0;
        for (unsigned v = n_hint; v; v >>= 1) ++bits;
        return 4 * bits + 8;
    }

    PrimeField field_;
    DivPolyRecursion<SeriesRing> rec_;
};

}  // namespace edpoly

#endif  // EDPOLY_SERIES_HPP

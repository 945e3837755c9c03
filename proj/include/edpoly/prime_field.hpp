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

#ifndef EDPOLY_PRIME_FIELD_HPP
#define EDPOLY_PRIME_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace edpoly {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

inline u64 powmod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

class FieldElem;

/// The prime field F_p with p > 3 (the characteristic-2/3 cases are unsupported).
class PrimeField {
   public:
    explicit PrimeField(u64 p) : p_(p) {
        if (p <= 3 || !detail::is_prime_u64(p)) {
            throw InvalidField("modulus " + std::to_string(p) + " must be a prime greater than 3");
        }
    }

    u64 modulus() const noexcept { return p_; }

    FieldElem operator()(long long v) const;
    FieldElem from_unsigned(u64 v) const;
    FieldElem from_bigint(const mpz_class& v) const;
    FieldElem zero() const;
    FieldElem one() const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    friend class FieldElem;
    struct Trusted {};
    PrimeField(u64 p, Trusted) noexcept : p_(p) {}

    u64 p_;
};

/// A residue in [0, p). Carries its modulus; mixing fields throws FieldMismatch.
class FieldElem {
   public:
    FieldElem() = default;

    u64 value() const noexcept { return v_; }
    u64 modulus() const noexcept { return p_; }
    PrimeField field() const { return PrimeField(p_, PrimeField::Trusted{}); }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElem operator-() const { return FieldElem(v_ == 0 ? 0 : p_ - v_, p_); }

    FieldElem& operator+=(const FieldElem& o) {
        check(o);
        v_ = (v_ >= p_ - o.v_) ? v_ - (p_ - o.v_) : v_ + o.v_;
        return *this;
    }
    FieldElem& operator-=(const FieldElem& o) {
        check(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + (p_ - o.v_);
        return *this;
    }
    FieldElem& operator*=(const FieldElem& o) {
        check(o);
        v_ = detail::mulmod(v_, o.v_, p_);
        return *this;
    }
    FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }

    friend FieldElem operator+(FieldElem l, const FieldElem& r) { return l += r; }
    friend FieldElem operator-(FieldElem l, const FieldElem& r) { return l -= r; }
    friend FieldElem operator*(FieldElem l, const FieldElem& r) { return l *= r; }
    friend FieldElem operator/(FieldElem l, const FieldElem& r) { return l /= r; }

    friend bool operator==(const FieldElem&, const FieldElem&) = default;

    FieldElem pow(u64 e) const { return FieldElem(detail::powmod(v_, e, p_), p_); }

    FieldElem inverse() const {
        if (v_ == 0) throw DivisionByZero();
        return pow(p_ - 2);
    }

    /// Legendre symbol: 0 for zero, 1 for a nonzero square, -1 otherwise.
    int legendre() const {
        if (v_ == 0) return 0;
        return pow((p_ - 1) / 2).v_ == 1 ? 1 : -1;
    }

    bool is_square() const { return legendre() >= 0; }

    /// Square root by Tonelli-Shanks; the smaller of the two roots is returned.
    std::optional<FieldElem> sqrt() const {
        if (v_ == 0) return *this;
        if (legendre() != 1) return std::nullopt;
        u64 q = p_ - 1;
        unsigned s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (detail::powmod(z, (p_ - 1) / 2, p_) != p_ - 1) ++z;
        u64 m = s;
        u64 c = detail::powmod(z, q, p_);
        u64 t = detail::powmod(v_, q, p_);
        u64 r = detail::powmod(v_, (q + 1) / 2, p_);
        while (t != 1) {
            u64 i = 0;
            u64 tt = t;
            while (tt != 1) {
                tt = detail::mulmod(tt, tt, p_);
                ++i;
            }
            u64 b = c;
            for (u64 j = 0; j + i + 1 < m; ++j) b = detail::mulmod(b, b, p_);
            m = i;
            c = detail::mulmod(b, b, p_);
            t = detail::mulmod(t, c, p_);
            r = detail::mulmod(r, b, p_);
        }
        u64 other = p_ - r;
        return FieldElem(r < other ? r : other, p_);
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.v_; }

   private:
    friend class PrimeField;
    FieldElem(u64 v, u64 p) : v_(v), p_(p) {}

    void check(const FieldElem& o) const {
        if (p_ != o.p_ || p_ == 0) throw FieldMismatch();
    }

    u64 v_ = 0;
    u64 p_ = 0;
};

inline FieldElem PrimeField::operator()(long long v) const {
    __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p_);
    if (r < 0) r += p_;
    return FieldElem(static_cast<u64>(r), p_);
}

inline FieldElem PrimeField::from_unsigned(u64 v) const { return FieldElem(v % p_, p_); }

inline FieldElem PrimeField::from_bigint(const mpz_class& v) const {
    static_assert(sizeof(unsigned long) == sizeof(u64), "requires LP64");
    return FieldElem(mpz_fdiv_ui(v.get_mpz_t(), p_), p_);
}

inline FieldElem PrimeField::zero() const { return FieldElem(0, p_); }
inline FieldElem PrimeField::one() const { return FieldElem(1, p_); }

}  // namespace edpoly

#endif  // EDPOLY_PRIME_FIELD_HPP

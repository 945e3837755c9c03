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

#ifndef EDPOLY_DIVPOLY_RECURSION_HPP
#define EDPOLY_DIVPOLY_RECURSION_HPP

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

namespace edpoly {

/// A commutative ring receiving the twisted Edwards division polynomial recursion.
///
/// Values must support +, -, * and the ring supplies the generators y, a, d,
/// integer constants, and exact division by (y + 1).
template <class R>
concept DivPolyRing = requires(const R& ring, const typename R::value_type& v, long c) {
    { ring.constant(c) } -> std::convertible_to<typename R::value_type>;
    { ring.y() } -> std::convertible_to<typename R::value_type>;
    { ring.a() } -> std::convertible_to<typename R::value_type>;
    { ring.d() } -> std::convertible_to<typename R::value_type>;
    { ring.div_by_y_plus_one(v) } -> std::convertible_to<typename R::value_type>;
    { v + v } -> std::convertible_to<typename R::value_type>;
    { v - v } -> std::convertible_to<typename R::value_type>;
    { v * v } -> std::convertible_to<typename R::value_type>;
};

/// Memoized recursion for the polynomials psi~_n(y) in any DivPolyRing.
///
/// Entries 0..4 are the closed base cases. For n >= 5 the recursion splits on
/// the parity of n and on r mod 4 (n = 2r+1 or n = 2r). Divisions by (y+1) and
/// (y+1)^2 are applied to whichever factor is already divisible: psi~_r when r
/// is even, otherwise psi~_(r+1) (odd n) or the bracketed difference (even n).
template <DivPolyRing Ring>
class DivPolyRecursion {
   public:
    using value_type = typename Ring::value_type;

    explicit DivPolyRecursion(Ring ring) : ring_(std::move(ring)) {}

    const Ring& ring() const noexcept { return ring_; }

    bool has(unsigned n) const noexcept { return n < memo_.size() && memo_[n].has_value(); }

    /// Computed entry; fills the memo (and every dependency) on first use.
    const value_type& get(unsigned n) {
        if (!has(n)) {
            value_type v = compute(n);
            if (memo_.size() <= n) memo_.resize(n + 1);
            memo_[n] = std::move(v);
        }
        return *memo_[n];
    }

    /// Read-only access to an entry that is already present.
    const value_type* find(unsigned n) const noexcept { return has(n) ? &*memo_[n] : nullptr; }

    /// Overwrites entry n and forgets every entry above it (used for mutation tests).
    void inject(unsigned n, value_type v) {
        if (memo_.size() <= n) memo_.resize(n + 1);
        memo_[n] = std::move(v);
        memo_.resize(n + 1);
    }

    void fill(unsigned n_max) {
        for (unsigned n = 0; n <= n_max; ++n) get(n);
    }

    std::size_t size() const noexcept { return memo_.size(); }

   private:
    value_type pow_int(const value_type& v, unsigned e) const {
        value_type r = ring_.constant(1);
        for (unsigned i = 0; i < e; ++i) r = r * v;
        return r;
    }

    value_type base_case(unsigned n) const {
        const value_type y = ring_.y();
        const value_type a = ring_.a();
        const value_type d = ring_.d();
        switch (n) {
            case 0:
                return ring_.constant(0);
            case 1:
                return ring_.constant(1);
            case 2:
                return y + ring_.constant(1);
            case 3:
                // -d y^4 - 2d y^3 + 2a y + a
                return ring_.constant(0) - d * pow_int(y, 4) - ring_.constant(2) * d * pow_int(y, 3) +
                       ring_.constant(2) * a * y + a;
            default:
                // -2d y^6 - 2d y^5 + 2a y^2 + 2a y  ( = -2y(y+1)(d y^4 - a) )
                return ring_.constant(0) - ring_.constant(2) * d * pow_int(y, 6) -
                       ring_.constant(2) * d * pow_int(y, 5) + ring_.constant(2) * a * pow_int(y, 2) +
                       ring_.constant(2) * a * y;
        }
    }

    value_type compute(unsigned n) {
        if (n <= 4) return base_case(n);
        const value_type a_minus_d = ring_.a() - ring_.d();
        const value_type y = ring_.y();
        const value_type q = ring_.a() - ring_.d() * y * y;  // a - d y^2
        const value_type four_q2 = ring_.constant(4) * q * q;

        // Fetch the largest index first: later lookups then never grow the memo,
        // so the references below stay valid.
        if (n % 2 == 1) {
            const unsigned r = (n - 1) / 2;
            const value_type& p_rp2 = get(r + 2);
            const value_type& p_r = get(r);
            const value_type& p_rm1 = get(r - 1);
            const value_type& p_rp1 = get(r + 1);
            if (r % 2 == 0) {
                // (y+1) | psi~_r, so psi~_r^3 / (y+1)^2 = psi~_r * h^2.
                const value_type h = ring_.div_by_y_plus_one(p_r);
                const value_type first = p_rp2 * p_r * h * h;
                const value_type second = p_rm1 * p_rp1 * p_rp1 * p_rp1;
                const value_type factor = (r % 4 == 0) ? a_minus_d * four_q2 : four_q2;
                return factor * first - second;
            }
            const value_type h = ring_.div_by_y_plus_one(p_rp1);
            const value_type first = p_rp2 * p_r * p_r * p_r;
            const value_type second = p_rm1 * p_rp1 * h * h;
            const value_type factor = (r % 4 == 1) ? four_q2 : a_minus_d * four_q2;
            return first - factor * second;
        }

        const unsigned r = n / 2;
        const value_type& p_rp2 = get(r + 2);
        const value_type& p_r = get(r);
        const value_type& p_rm1 = get(r - 1);
        const value_type& p_rm2 = get(r - 2);
        const value_type& p_rp1 = get(r + 1);
        value_type lhs = p_rp2 * p_rm1 * p_rm1;
        value_type rhs = p_rm2 * p_rp1 * p_rp1;
        // r = 0 and r = 2 (mod 4) share one formula; only r odd carries an (a - d) factor.
        if (r % 4 == 1) lhs = a_minus_d * lhs;
        if (r % 4 == 3) rhs = a_minus_d * rhs;
        if (r % 2 == 0) return ring_.div_by_y_plus_one(p_r) * (lhs - rhs);
        return p_r * ring_.div_by_y_plus_one(lhs - rhs);
    }

    Ring ring_;
    std::vector<std::optional<value_type>> memo_;
};

}  // namespace edpoly

#endif  // EDPOLY_DIVPOLY_RECURSION_HPP

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

// Classical division polynomials Psi_n on v^2 = u^3 + A u + B, evaluated
// numerically at a point. Kept independent of the Edwards machinery.

#ifndef EDPOLY_WEIERSTRASS_REF_HPP
#define EDPOLY_WEIERSTRASS_REF_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "prime_field.hpp"

namespace edpoly {

/// Per-curve memo of Psi_n(Q), keyed by the affine point Q.
class WsDivTable {
   public:
    explicit WsDivTable(WeierstrassCurve curve) : curve_(std::move(curve)) {}

    const WeierstrassCurve& curve() const noexcept { return curve_; }

    FieldElem value(unsigned n, const WeierstrassPoint& Q) {
        if (Q.infinity) throw UndefinedAtPoint("Psi_n is evaluated at affine points only");
        auto& memo = memo_[{Q.u.value(), Q.v.value()}];
        return eval(memo, n, Q);
    }

    void clear() { memo_.clear(); }

   private:
    using Memo = std::vector<std::optional<FieldElem>>;

    FieldElem eval(Memo& memo, unsigned n, const WeierstrassPoint& Q) {
        if (n < memo.size() && memo[n]) return *memo[n];
        const FieldElem v = compute(memo, n, Q);
        if (memo.size() <= n) memo.resize(n + 1);
        memo[n] = v;
        return v;
    }

    FieldElem compute(Memo& memo, unsigned n, const WeierstrassPoint& Q) {
        const PrimeField& f = curve_.field();
        const FieldElem& A = curve_.A();
        const FieldElem& B = curve_.B();
        const FieldElem& u = Q.u;
        const FieldElem& v = Q.v;
        switch (n) {
            case 0:
                return f.zero();
            case 1:
                return f.one();
            case 2:
                return f(2) * v;
            case 3: {
                const FieldElem u2 = u * u;
                return f(3) * u2 * u2 + f(6) * A * u2 + f(12) * B * u - A * A;
            }
            case 4: {
                const FieldElem u2 = u * u;
                const FieldElem u3 = u2 * u;
                return f(4) * v *
                       (u3 * u3 + f(5) * A * u2 * u2 + f(20) * B * u3 - f(5) * A * A * u2 - f(4) * A * B * u -
                        A * A * A - f(8) * B * B);
            }
            default:
                break;
        }
        if (n % 2 == 1) {
            const unsigned m = (n - 1) / 2;
            const FieldElem pm = eval(memo, m, Q);
            const FieldElem pm1 = eval(memo, m + 1, Q);
            return eval(memo, m + 2, Q) * pm * pm * pm - eval(memo, m - 1, Q) * pm1 * pm1 * pm1;
        }
        const unsigned m = n / 2;
        if (v.is_zero())
            throw ZeroDenominator("even Psi_" + std::to_string(n) + " divides by Psi_2 = 2v = 0 at " + Q.to_string());
        const FieldElem pm1 = eval(memo, m - 1, Q);
        const FieldElem pp1 = eval(memo, m + 1, Q);
        const FieldElem bracket = eval(memo, m + 2, Q) * pm1 * pm1 - eval(memo, m - 2, Q) * pp1 * pp1;
        return eval(memo, m, Q) * bracket / (f(2) * v);
    }

    WeierstrassCurve curve_;
    std::map<std::pair<u64, u64>, Memo> memo_;
};

inline FieldElem ws_psi_eval(WsDivTable& T, unsigned n, const WeierstrassPoint& Q) { return T.value(n, Q); }

/// [n]Q through the division polynomials: (u - Psi_{n-1} Psi_{n+1} / Psi_n^2, Psi_{2n} / (2 Psi_n^4)).
///
/// Returns O when Psi_n(Q) = 0. A point with v = 0 has order 2 and is handled
/// directly, since the even recursion would divide by 2v.
inline WeierstrassPoint ws_mul(WsDivTable& T, unsigned n, const WeierstrassPoint& Q) {
    if (Q.infinity || n == 0) return WeierstrassPoint::O();
    if (Q.v.is_zero()) return n % 2 ? Q : WeierstrassPoint::O();
    const FieldElem pn = T.value(n, Q);
    if (pn.is_zero()) return WeierstrassPoint::O();
    const FieldElem pn2 = pn * pn;
    const FieldElem u = Q.u - T.value(n - 1, Q) * T.value(n + 1, Q) / pn2;
    const FieldElem v = T.value(2 * n, Q) / (T.curve().field()(2) * pn2 * pn2);
    return WeierstrassPoint::affine(u, v);
}

}  // namespace edpoly

#endif  // EDPOLY_WEIERSTRASS_REF_HPP

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

#ifndef EDPOLY_CURVE_HPP
#define EDPOLY_CURVE_HPP

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "prime_field.hpp"

namespace edpoly {

struct EdwardsPoint {
    FieldElem x;
    FieldElem y;

    friend bool operator==(const EdwardsPoint&, const EdwardsPoint&) = default;
    std::string to_string() const { return "(" + std::to_string(x.value()) + " : " + std::to_string(y.value()) + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const EdwardsPoint& p) { return os << p.to_string(); }
};

/// The twisted Edwards curve a x^2 + y^2 = 1 + d x^2 y^2 over F_p (a, d distinct, nonzero).
class EdwardsCurve {
   public:
    EdwardsCurve(PrimeField field, FieldElem a, FieldElem d) : field_(field), a_(a), d_(d) {
        if (a.modulus() != field.modulus() || d.modulus() != field.modulus()) throw FieldMismatch();
        if (a.is_zero() || d.is_zero() || a == d) throw InvalidCurve("a and d must be distinct and non-zero");
    }
    EdwardsCurve(u64 p, long long a, long long d) : EdwardsCurve(PrimeField(p), PrimeField(p)(a), PrimeField(p)(d)) {}

    const PrimeField& field() const noexcept { return field_; }
    const FieldElem& a() const noexcept { return a_; }
    const FieldElem& d() const noexcept { return d_; }

    bool contains(const EdwardsPoint& P) const {
        const FieldElem x2 = P.x * P.x;
        const FieldElem y2 = P.y * P.y;
        return a_ * x2 + y2 == field_.one() + d_ * x2 * y2;
    }

    EdwardsPoint identity() const { return {field_.zero(), field_.one()}; }
    EdwardsPoint order_two_point() const { return {field_.zero(), -field_.one()}; }
    EdwardsPoint point(long long x, long long y) const { return {field_(x), field_(y)}; }
    EdwardsPoint negate(const EdwardsPoint& P) const { return {-P.x, P.y}; }

    /// a square and d non-square: the affine addition law never divides by zero.
    bool is_complete() const { return a_.legendre() == 1 && d_.legendre() == -1; }

    friend bool operator==(const EdwardsCurve& l, const EdwardsCurve& r) {
        return l.field_ == r.field_ && l.a_ == r.a_ && l.d_ == r.d_;
    }

   private:
    PrimeField field_;
    FieldElem a_;
    FieldElem d_;
};

/// An affine point (u, v) of a short Weierstrass curve, or the point at infinity.
struct WeierstrassPoint {
    bool infinity = true;
    FieldElem u;
    FieldElem v;

    static WeierstrassPoint O() { return {}; }
    static WeierstrassPoint affine(FieldElem u, FieldElem v) { return {false, u, v}; }

    friend bool operator==(const WeierstrassPoint& l, const WeierstrassPoint& r) {
        if (l.infinity || r.infinity) return l.infinity == r.infinity;
        return l.u == r.u && l.v == r.v;
    }
    std::string to_string() const {
        if (infinity) return "O";
        return "(" + std::to_string(u.value()) + " : " + std::to_string(v.value()) + ")";
    }
};

/// v^2 = u^3 + A u + B.
class WeierstrassCurve {
   public:
    WeierstrassCurve(PrimeField field, FieldElem A, FieldElem B) : field_(field), A_(A), B_(B) {
        const FieldElem disc = field_(4) * A_ * A_ * A_ + field_(27) * B_ * B_;
        if (disc.is_zero()) throw InvalidCurve("singular Weierstrass curve");
    }

    /// The curve birationally equivalent to the given twisted Edwards curve.
    static WeierstrassCurve from_edwards(const EdwardsCurve& C) {
        const PrimeField& f = C.field();
        const FieldElem a = C.a(), d = C.d();
        const FieldElem A = -(a * a + f(14) * a * d + d * d) / f(48);
        const FieldElem B = -(a * a * a - f(33) * a * a * d - f(33) * a * d * d + d * d * d) / f(864);
        return WeierstrassCurve(f, A, B);
    }

    const PrimeField& field() const noexcept { return field_; }
    const FieldElem& A() const noexcept { return A_; }
    const FieldElem& B() const noexcept { return B_; }

    bool contains(const WeierstrassPoint& Q) const {
        if (Q.infinity) return true;
        return Q.v * Q.v == Q.u * Q.u * Q.u + A_ * Q.u + B_;
    }

   private:
    PrimeField field_;
    FieldElem A_;
    FieldElem B_;
};

/// The affine addition law; throws DenominatorZero when 1 +/- d x1 x2 y1 y2 vanishes.
inline EdwardsPoint ed_add(const EdwardsCurve& C, const EdwardsPoint& P, const EdwardsPoint& Q) {
    const FieldElem one = C.field().one();
    const FieldElem t = C.d() * P.x * Q.x * P.y * Q.y;
    const FieldElem dx = one + t;
    const FieldElem dy = one - t;
    if (dx.is_zero() || dy.is_zero())
        throw DenominatorZero("Edwards addition of " + P.to_string() + " and " + Q.to_string() +
                              " has a vanishing denominator");
    return {(P.x * Q.y + Q.x * P.y) / dx, (P.y * Q.y - C.a() * P.x * Q.x) / dy};
}

/// [n]P by double-and-add built only on ed_add.
inline EdwardsPoint ed_scalar_mul_naive(const EdwardsCurve& C, const EdwardsPoint& P, unsigned long long n) {
    EdwardsPoint acc = C.identity();
    EdwardsPoint base = P;
    while (n) {
        if (n & 1) acc = ed_add(C, acc, base);
        n >>= 1;
        if (n) base = ed_add(C, base, base);
    }
    return acc;
}

inline WeierstrassPoint ws_add(const WeierstrassCurve& W, const WeierstrassPoint& P, const WeierstrassPoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const PrimeField& f = W.field();
    FieldElem lambda;
    if (P.u == Q.u) {
        if ((P.v + Q.v).is_zero()) return WeierstrassPoint::O();
        lambda = (f(3) * P.u * P.u + W.A()) / (f(2) * P.v);
    } else {
        lambda = (Q.v - P.v) / (Q.u - P.u);
    }
    const FieldElem u3 = lambda * lambda - P.u - Q.u;
    const FieldElem v3 = lambda * (P.u - u3) - P.v;
    return WeierstrassPoint::affine(u3, v3);
}

inline WeierstrassPoint ws_scalar_mul_naive(const WeierstrassCurve& W, const WeierstrassPoint& Q, unsigned long long n) {
    WeierstrassPoint acc = WeierstrassPoint::O();
    WeierstrassPoint base = Q;
    while (n) {
        if (n & 1) acc = ws_add(W, acc, base);
        n >>= 1;
        if (n) base = ws_add(W, base, base);
    }
    return acc;
}

/// Order of Q by repeated addition.
inline unsigned long long ws_order(const WeierstrassCurve& W, const WeierstrassPoint& Q) {
    unsigned long long k = 1;
    WeierstrassPoint R = Q;
    while (!R.infinity) {
        R = ws_add(W, R, Q);
        ++k;
    }
    return k;
}

inline WeierstrassPoint to_weierstrass(const EdwardsCurve& C, const EdwardsPoint& P) {
    const PrimeField& f = C.field();
    const FieldElem a = C.a(), d = C.d();
    if (P.x.is_zero() && P.y == f.one()) return WeierstrassPoint::O();
    if (P.x.is_zero() && P.y == -f.one()) return WeierstrassPoint::affine((a + d) / f(6), f.zero());
    const FieldElem one_minus_y = f.one() - P.y;
    const FieldElem u = ((f(5) * a - d) + (a - f(5) * d) * P.y) / (f(12) * one_minus_y);
    const FieldElem v = (a - d) * (f.one() + P.y) / (f(4) * P.x * one_minus_y);
    return WeierstrassPoint::affine(u, v);
}

/// A Weierstrass point with no affine twisted Edwards preimage; order is 2 or 4.
struct ExceptionalPoint {
    unsigned order = 0;
    friend bool operator==(const ExceptionalPoint&, const ExceptionalPoint&) = default;
};

using EdwardsImage = std::variant<EdwardsPoint, ExceptionalPoint>;

/// Inverse of to_weierstrass. Q must lie on the curve attached to C.
///
/// Over F_p every point outside the exceptional set has an F_p-rational preimage,
/// since the inverse map is defined over the base field.
inline EdwardsImage from_weierstrass(const EdwardsCurve& C, const WeierstrassPoint& Q) {
    const PrimeField& f = C.field();
    const FieldElem a = C.a(), d = C.d();
    if (!WeierstrassCurve::from_edwards(C).contains(Q)) throw NotOnCurve("point " + Q.to_string() + " is not on W");
    if (Q.infinity) return C.identity();
    if (Q.v.is_zero() && Q.u == (a + d) / f(6)) return C.order_two_point();
    const FieldElem den_y = f(12) * Q.u + a - f(5) * d;
    if (Q.v.is_zero()) return ExceptionalPoint{2};
    if (den_y.is_zero()) return ExceptionalPoint{4};
    const FieldElem x = (f(6) * Q.u - (a + d)) / (f(6) * Q.v);
    const FieldElem y = (f(12) * Q.u + d - f(5) * a) / den_y;
    return EdwardsPoint{x, y};
}

struct TaggedWeierstrassPoint {
    WeierstrassPoint point;
    unsigned order = 0;
};

/// The F_p-rational members of the four exceptional points: order 4 when d is a
/// square (s^2 = d), order 2 when a d is a square (t^2 = a d).
inline std::vector<TaggedWeierstrassPoint> exceptional_set(const EdwardsCurve& C) {
    const PrimeField& f = C.field();
    const FieldElem a = C.a(), d = C.d();
    std::vector<TaggedWeierstrassPoint> out;
    if (auto s = d.sqrt()) {
        const FieldElem u = (f(5) * d - a) / f(12);
        const FieldElem v = *s * (d - a) / f(4);
        out.push_back({WeierstrassPoint::affine(u, v), 4});
        out.push_back({WeierstrassPoint::affine(u, -v), 4});
    }
    if (auto t = (a * d).sqrt()) {
        const FieldElem six_t = f(6) * *t;
        out.push_back({WeierstrassPoint::affine((-(a + d) + six_t) / f(12), f.zero()), 2});
        out.push_back({WeierstrassPoint::affine((-(a + d) - six_t) / f(12), f.zero()), 2});
    }
    return out;
}

inline constexpr u64 kDefaultEnumerationLimit = 10000;

/// Every affine point, in lexicographic (x, then y) residue order.
inline std::vector<EdwardsPoint> enumerate_points(const EdwardsCurve& C, u64 limit = kDefaultEnumerationLimit) {
    const PrimeField& f = C.field();
    const u64 p = f.modulus();
    if (p > limit) throw FieldTooLarge("p = " + std::to_string(p) + " exceeds the enumeration limit " + std::to_string(limit));
    std::vector<EdwardsPoint> out;
    for (u64 xv = 0; xv < p; ++xv) {
        const FieldElem x = f.from_unsigned(xv);
        const FieldElem x2 = x * x;
        const FieldElem den = f.one() - C.d() * x2;
        if (den.is_zero()) continue;  // would force a = d
        const FieldElem rhs = (f.one() - C.a() * x2) / den;
        auto r = rhs.sqrt();
        if (!r) continue;
        out.push_back({x, *r});
        if (!r->is_zero()) out.push_back({x, -*r});
    }
    return out;
}

inline std::vector<WeierstrassPoint> enumerate_points(const WeierstrassCurve& W, u64 limit = kDefaultEnumerationLimit) {
    const PrimeField& f = W.field();
    const u64 p = f.modulus();
    if (p > limit) throw FieldTooLarge("p = " + std::to_string(p) + " exceeds the enumeration limit " + std::to_string(limit));
    std::vector<WeierstrassPoint> out{WeierstrassPoint::O()};
    for (u64 uv = 0; uv < p; ++uv) {
        const FieldElem u = f.from_unsigned(uv);
        auto r = (u * u * u + W.A() * u + W.B()).sqrt();
        if (!r) continue;
        out.push_back(WeierstrassPoint::affine(u, *r));
        if (!r->is_zero()) out.push_back(WeierstrassPoint::affine(u, -*r));
    }
    return out;
}

/// Order of P in the group of the curve.
///
/// Repeated ed_add is used while it stays affine. If the affine law hits a
/// vanishing denominator (possible only when the curve is not complete) the
/// order is read off the Weierstrass image instead, where the group law is total.
inline unsigned long long ed_order(const EdwardsCurve& C, const EdwardsPoint& P) {
    const EdwardsPoint id = C.identity();
    try {
        unsigned long long k = 1;
        EdwardsPoint R = P;
        while (!(R == id)) {
            R = ed_add(C, R, P);
            ++k;
        }
        return k;
    } catch (const DenominatorZero&) {
        return ws_order(WeierstrassCurve::from_edwards(C), to_weierstrass(C, P));
    }
}

}  // namespace edpoly

#endif  // EDPOLY_CURVE_HPP

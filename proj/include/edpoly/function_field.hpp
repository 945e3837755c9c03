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

#ifndef EDPOLY_FUNCTION_FIELD_HPP
#define EDPOLY_FUNCTION_FIELD_HPP

#include <algorithm>
#include <concepts>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "curve.hpp"
#include "divpoly.hpp"
#include "errors.hpp"
#include "prime_field.hpp"
#include "series.hpp"
#include "y_poly.hpp"

namespace edpoly {

/// num(y) / den(y) with coefficients in Z[a,d].
///
/// Only structural factors are cancelled: common integer content and common
/// powers of y, y - 1 and y + 1. Equality is by cross-multiplication.
class RationalY {
   public:
    RationalY() : num_(), den_(1) {}
    RationalY(YPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RationalY(YPoly num, YPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
        normalize();
    }

    const YPoly& num() const noexcept { return num_; }
    const YPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalY operator+(const RationalY& l, const RationalY& r) {
        if (l.den_ == r.den_) return {l.num_ + r.num_, l.den_};
        return {l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_};
    }
    friend RationalY operator-(const RationalY& l, const RationalY& r) {
        if (l.den_ == r.den_) return {l.num_ - r.num_, l.den_};
        return {l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_};
    }
    friend RationalY operator*(const RationalY& l, const RationalY& r) {
        return {l.num_ * r.num_, l.den_ * r.den_};
    }
    friend RationalY operator/(const RationalY& l, const RationalY& r) {
        if (r.is_zero()) throw ZeroDenominator("division by the zero rational function");
        return {l.num_ * r.den_, l.den_ * r.num_};
    }
    RationalY operator-() const { return {-num_, den_}; }

    friend bool operator==(const RationalY& l, const RationalY& r) { return l.num_ * r.den_ == r.num_ * l.den_; }

    FieldElem eval(const FieldElem& a, const FieldElem& d, const FieldElem& y) const {
        const FieldElem dv = den_.eval(a, d, y);
        if (dv.is_zero()) throw ZeroDenominator("denominator vanishes at y = " + std::to_string(y.value()));
        return num_.eval(a, d, y) / dv;
    }

    std::string to_string() const {
        if (den_ == YPoly(1)) return num_.to_string();
        return wrap(num_.to_string()) + " / " + wrap(den_.to_string());
    }
    friend std::ostream& operator<<(std::ostream& os, const RationalY& r) { return os << r.to_string(); }

   private:
    static std::string wrap(const std::string& s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; }

    static BigInt content(const YPoly& p) {
        BigInt g = 0;
        for (const auto& c : p.coeffs()) {
            const BigInt cc = c.content();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
        }
        return g;
    }

    static YPoly divide_content(const YPoly& p, const BigInt& g) {
        std::vector<CoefPoly> out;
        for (const auto& c : p.coeffs()) out.push_back(c.divided_by(g));
        return YPoly(std::move(out));
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = YPoly(1);
            return;
        }
        const int low = std::min(num_.low_degree(), den_.low_degree());
        if (low > 0) {
            num_ = shift_down(num_, low);
            den_ = shift_down(den_, low);
        }
        const YPoly y_plus_one = YPoly::y() + YPoly(1);
        const YPoly y_minus_one = YPoly::y() - YPoly(1);
        while (num_.at_minus_one().is_zero() && den_.at_minus_one().is_zero()) {
            num_ = YPoly::exact_div(num_, y_plus_one);
            den_ = YPoly::exact_div(den_, y_plus_one);
        }
        while (num_.at_one().is_zero() && den_.at_one().is_zero()) {
            num_ = YPoly::exact_div(num_, y_minus_one);
            den_ = YPoly::exact_div(den_, y_minus_one);
        }
        BigInt g = gcd(content(num_), content(den_));
        const Term& lead = den_.leading().terms().front();
        if (lead.c < 0) g = -g;
        if (g != 1) {
            num_ = divide_content(num_, g);
            den_ = divide_content(den_, g);
        }
    }

    static YPoly shift_down(const YPoly& p, int k) {
        std::vector<CoefPoly> c(p.coeffs().begin() + k, p.coeffs().end());
        return YPoly(std::move(c));
    }

    YPoly num_;
    YPoly den_;
};

/// x^2 on the curve, as a function of y: (1 - y^2) / (a - d y^2).
inline RationalY x_squared() {
    const YPoly y2 = YPoly::monomial(1, 2);
    return {YPoly(1) - y2, YPoly(CoefPoly::a()) - y2.scaled(CoefPoly::d())};
}

enum class CanonicalForm { x_form, inv_x_form };

/// p(y) + x q(y) (x_form) or p(y) + q(y) / x (inv_x_form).
struct CanonicalFn {
    RationalY p;
    RationalY q;
    CanonicalForm form = CanonicalForm::x_form;

    static CanonicalFn of(RationalY p, RationalY q = {}, CanonicalForm form = CanonicalForm::x_form) {
        return {std::move(p), std::move(q), form};
    }
    static CanonicalFn x() { return of({}, YPoly(1)); }
    static CanonicalFn y() { return of(YPoly::y()); }

    /// Same form and cross-multiplication-equal components.
    friend bool operator==(const CanonicalFn& l, const CanonicalFn& r) {
        return l.form == r.form && l.p == r.p && l.q == r.q;
    }

    FieldElem eval(const FieldElem& a, const FieldElem& d, const FieldElem& x, const FieldElem& y) const {
        const FieldElem pv = p.eval(a, d, y);
        if (q.is_zero()) return pv;
        const FieldElem qv = q.eval(a, d, y);
        if (form == CanonicalForm::x_form) return pv + x * qv;
        if (x.is_zero()) throw ZeroDenominator("1/x at x = 0");
        return pv + qv / x;
    }

    std::string to_string() const {
        const std::string xs = form == CanonicalForm::x_form ? "x" : "(1/x)";
        return p.to_string() + " + " + xs + "*" + (q.to_string().find(' ') == std::string::npos ? q.to_string() : "(" + q.to_string() + ")");
    }
    friend std::ostream& operator<<(std::ostream& os, const CanonicalFn& f) { return os << f.to_string(); }
};

/// Switches x_form and inv_x_form: x q = (1/x) x^2 q, so q' = q (1 - y^2) / (a - d y^2).
inline CanonicalFn canon_convert(const CanonicalFn& f) {
    if (f.form == CanonicalForm::x_form) return CanonicalFn::of(f.p, f.q * x_squared(), CanonicalForm::inv_x_form);
    return CanonicalFn::of(f.p, f.q / x_squared(), CanonicalForm::x_form);
}

inline CanonicalFn to_x_form(const CanonicalFn& f) {
    return f.form == CanonicalForm::x_form ? f : canon_convert(f);
}

inline CanonicalFn canon_add(const CanonicalFn& f, const CanonicalFn& g) {
    const CanonicalFn l = to_x_form(f), r = to_x_form(g);
    return CanonicalFn::of(l.p + r.p, l.q + r.q);
}

/// Product in x_form; x^2 is replaced by (1 - y^2) / (a - d y^2).
inline CanonicalFn canon_mul(const CanonicalFn& f, const CanonicalFn& g) {
    const CanonicalFn l = to_x_form(f), r = to_x_form(g);
    RationalY p = l.p * r.p;
    if (!l.q.is_zero() && !r.q.is_zero()) p = p + l.q * r.q * x_squared();
    return CanonicalFn::of(std::move(p), l.p * r.q + r.p * l.q);
}

/// Upper bound on the number of y-roots of f - g's components.
inline std::size_t canonical_degree_bound(const CanonicalFn& f, const CanonicalFn& g) {
    const CanonicalFn l = to_x_form(f), r = to_x_form(g);
    auto part = [](const RationalY& u, const RationalY& v) {
        return static_cast<std::size_t>(std::max(0, std::max(u.num().degree() + v.den().degree(),
                                                             v.num().degree() + u.den().degree())));
    };
    return part(l.p, r.p) + part(l.q, r.q) + 4;
}

/// Compares f and g as functions at sampled curve points (both x = +/- root for each y).
///
/// Uses more distinct y-values than canonical_degree_bound, skipping y where a
/// denominator vanishes or no point lies above y.
inline bool sampled_equal(const CanonicalFn& f, const CanonicalFn& g, const EdwardsCurve& C, std::mt19937_64& rng) {
    const PrimeField& field = C.field();
    const std::size_t need = canonical_degree_bound(f, g) + 1;
    if (field.modulus() < 8 * need) throw InvalidField("field too small for sampled comparison");
    std::set<u64> used;
    std::size_t got = 0;
    const std::size_t max_draws = 64 * need + 1024;
    for (std::size_t draws = 0; got < need; ++draws) {
        if (draws == max_draws)
            throw ZeroDenominator("too few curve points where both functions are defined");
        const FieldElem y = field.from_unsigned(rng());
        if (!used.insert(y.value()).second) continue;
        const FieldElem den = C.a() - C.d() * y * y;
        if (den.is_zero()) continue;
        auto x = ((field.one() - y * y) / den).sqrt();
        if (!x || x->is_zero()) continue;
        try {
            for (const FieldElem& xv : {*x, -*x})
                if (f.eval(C.a(), C.d(), xv, y) != g.eval(C.a(), C.d(), xv, y)) return false;
        } catch (const ZeroDenominator&) {
            continue;
        }
        ++got;
    }
    return true;
}

/// psi_n = (a - d)^k psi~_n(y) / (x^gamma (2(1 - y))^m).
struct PsiClosedForm {
    unsigned n = 0;
    long k = 0;
    long m = 0;
    int gamma = 0;
    YPoly tilde;

    /// The same function as a canonical element (inv_x_form when gamma = 1).
    CanonicalFn canonical() const {
        if (tilde.is_zero()) return CanonicalFn::of({});
        YPoly num = tilde.scaled(pow_coef(CoefPoly::a() - CoefPoly::d(), static_cast<unsigned>(k)));
        const YPoly two_one_minus_y = YPoly(2) - YPoly::monomial(2, 1);
        const RationalY r(std::move(num), two_one_minus_y.pow(static_cast<unsigned>(m)));
        if (gamma == 0) return CanonicalFn::of(r);
        return CanonicalFn::of({}, r, CanonicalForm::inv_x_form);
    }

   private:
    static CoefPoly pow_coef(const CoefPoly& b, unsigned e) {
        CoefPoly r(1);
        for (unsigned i = 0; i < e; ++i) r = r * b;
        return r;
    }
};

inline PsiClosedForm psi_closed(unsigned n, DivPolyTable& table) {
    PsiClosedForm c;
    c.n = n;
    c.tilde = table.get(n);
    if (n == 0) return c;
    c.k = k_of(n);
    c.m = m_of(n);
    c.gamma = gamma_of(n);
    return c;
}

/// Something that yields psi~_n(a, d, y_P) for the fixed curve and point.
template <class S>
concept TildeSource = requires(S& s, unsigned n) {
    { s(n) } -> std::convertible_to<FieldElem>;
};

/// Tilde values read from the symbolic table.
class TableTilde {
   public:
    TableTilde(DivPolyTable& table, const EdwardsCurve& C, const EdwardsPoint& P)
        : table_(&table), a_(C.a()), d_(C.d()), y_(P.y) {}
    FieldElem operator()(unsigned n) { return table_->get(n).eval(a_, d_, y_); }

   private:
    DivPolyTable* table_;
    FieldElem a_, d_, y_;
};

/// Tilde values from the recursion run over F_p (no symbolic expansion).
class SeriesTilde {
   public:
    SeriesTilde(const EdwardsCurve& C, const EdwardsPoint& P, unsigned n_hint = 1024) : s_(C.a(), C.d(), P.y, n_hint) {}
    FieldElem operator()(unsigned n) { return s_.value(n); }

   private:
    SpecializedDivPoly s_;
};

template <TildeSource S>
FieldElem psi_eval_with(S& tilde, unsigned n, const EdwardsCurve& C, const EdwardsPoint& P) {
    const PrimeField& f = C.field();
    if (n == 0) return f.zero();
    if (n == 1) return f.one();
    const int gamma = gamma_of(n);
    const FieldElem one_minus_y = f.one() - P.y;
    if (one_minus_y.is_zero()) throw UndefinedAtPoint("psi_" + std::to_string(n) + " is undefined at (0, 1)");
    if (gamma == 1 && P.x.is_zero())
        throw UndefinedAtPoint("psi_" + std::to_string(n) + " is undefined at x = 0 for even n");
    const FieldElem t = tilde(n);
    FieldElem den = (f(2) * one_minus_y).pow(static_cast<u64>(m_of(n)));
    if (gamma == 1) den = den * P.x;
    return (C.a() - C.d()).pow(static_cast<u64>(k_of(n))) * t / den;
}

inline FieldElem psi_eval(unsigned n, DivPolyTable& table, const EdwardsCurve& C, const EdwardsPoint& P) {
    TableTilde src(table, C, P);
    return psi_eval_with(src, n, C, P);
}

struct PhiOmega {
    FieldElem phi;
    FieldElem omega;
};

/// phi_n = (1+y) psi_n^2 / (1-y) - 4 psi_{n-1} psi_{n+1} / (a-d) and omega_n = 2 psi_{2n} / ((a-d) psi_n).
template <TildeSource S>
PhiOmega phi_omega_eval_with(S& tilde, unsigned n, const EdwardsCurve& C, const EdwardsPoint& P) {
    if (n == 0) throw std::invalid_argument("phi_n and omega_n need n >= 1");
    const PrimeField& f = C.field();
    const FieldElem amd = C.a() - C.d();
    const FieldElem pn = psi_eval_with(tilde, n, C, P);
    const FieldElem phi = (f.one() + P.y) * pn * pn / (f.one() - P.y) -
                          f(4) * psi_eval_with(tilde, n - 1, C, P) * psi_eval_with(tilde, n + 1, C, P) / amd;
    if (pn.is_zero()) throw ZeroDenominator("omega_" + std::to_string(n) + " needs psi_n(P) != 0");
    const FieldElem omega = f(2) * psi_eval_with(tilde, 2 * n, C, P) / (amd * pn);
    return {phi, omega};
}

inline PhiOmega phi_omega_eval(unsigned n, DivPolyTable& table, const EdwardsCurve& C, const EdwardsPoint& P) {
    TableTilde src(table, C, P);
    return phi_omega_eval_with(src, n, C, P);
}

}  // namespace edpoly

#endif  // EDPOLY_FUNCTION_FIELD_HPP

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

#ifndef EDPOLY_Y_POLY_HPP
#define EDPOLY_Y_POLY_HPP

#include <algorithm>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coef_poly.hpp"
#include "detail/kronecker.hpp"
#include "errors.hpp"
#include "prime_field.hpp"

namespace edpoly {

/// Dense polynomial in y with coefficients in Z[a, d].
class YPoly {
   public:
    /// Degree reported for the zero polynomial.
    static constexpr int kMinusInfinity = -1;

    YPoly() = default;
    YPoly(const CoefPoly& c) {  // NOLINT: constants embed implicitly
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    YPoly(long c) : YPoly(CoefPoly(c)) {}  // NOLINT

    explicit YPoly(std::vector<CoefPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static YPoly y() { return monomial(1, 1); }
    static YPoly monomial(const CoefPoly& c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<CoefPoly> v(k + 1);
        v[k] = c;
        return YPoly(std::move(v));
    }

    int degree() const noexcept { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const CoefPoly> coeffs() const noexcept { return coeffs_; }

    const CoefPoly& coeff(std::size_t k) const {
        static const CoefPoly zero;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const CoefPoly& leading() const { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }

    /// Index of the lowest nonzero coefficient; kMinusInfinity for zero.
    int low_degree() const noexcept {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero()) return static_cast<int>(k);
        return kMinusInfinity;
    }

    std::size_t term_count() const noexcept {
        std::size_t n = 0;
        for (const auto& c : coeffs_) n += c.size();
        return n;
    }

    YPoly operator-() const {
        YPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    YPoly& operator+=(const YPoly& o) { return combine(o, false); }
    YPoly& operator-=(const YPoly& o) { return combine(o, true); }
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

    friend YPoly operator+(YPoly l, const YPoly& r) { return l += r; }
    friend YPoly operator-(YPoly l, const YPoly& r) { return l -= r; }

    friend YPoly operator*(const YPoly& l, const YPoly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        if (l.term_count() * r.term_count() < kKroneckerThreshold) return mul_schoolbook(l, r);
        return YPoly(detail::kronecker_mul(l.coeffs_, r.coeffs_));
    }

    /// Quadratic-time product; kept as an independent route for cross-checking.
    static YPoly mul_schoolbook(const YPoly& l, const YPoly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<CoefPoly> out(l.coeffs_.size() + r.coeffs_.size() - 1);
        for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
            if (l.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
                if (r.coeffs_[j].is_zero()) continue;
                out[i + j] += l.coeffs_[i] * r.coeffs_[j];
            }
        }
        return YPoly(std::move(out));
    }

    static YPoly mul_kronecker(const YPoly& l, const YPoly& r) {
        return YPoly(detail::kronecker_mul(l.coeffs_, r.coeffs_));
    }

    YPoly scaled(const CoefPoly& k) const {
        std::vector<CoefPoly> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(c * k);
        return YPoly(std::move(v));
    }

    YPoly pow(unsigned e) const {
        YPoly r(1);
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Exact quotient num / den by long division.
    ///
    /// The divisor's leading coefficient may be any CoefPoly; each step divides
    /// exactly in Z[a,d]. Any nonzero remainder throws NonExactDivision.
    static YPoly exact_div(const YPoly& num, const YPoly& den) {
        if (den.is_zero()) throw NonExactDivision("division by the zero polynomial");
        if (num.is_zero()) return {};
        const int dn = num.degree();
        const int dd = den.degree();
        if (dn < dd) throw NonExactDivision("divisor degree exceeds dividend degree");

        const CoefPoly& lead = den.leading();
        const bool unit_lead = lead.is_constant() && (lead.constant_term() == 1 || lead.constant_term() == -1);
        const bool negate = unit_lead && lead.constant_term() == -1;

        std::vector<CoefPoly> rem = num.coeffs_;
        std::vector<CoefPoly> quot(static_cast<std::size_t>(dn - dd + 1));
        for (int i = dn; i >= dd; --i) {
            CoefPoly& top = rem[static_cast<std::size_t>(i)];
            if (top.is_zero()) continue;
            CoefPoly q = unit_lead ? (negate ? -top : top) : top.exact_div(lead);
            for (int j = 0; j <= dd; ++j) {
                const CoefPoly& dj = den.coeffs_[static_cast<std::size_t>(j)];
                if (dj.is_zero()) continue;
                rem[static_cast<std::size_t>(i - dd + j)] -= q * dj;
            }
            quot[static_cast<std::size_t>(i - dd)] = std::move(q);
        }
        for (int i = 0; i < dd; ++i) {
            if (!rem[static_cast<std::size_t>(i)].is_zero())
                throw NonExactDivision("nonzero remainder in polynomial division");
        }
        return YPoly(std::move(quot));
    }

    /// Value at y = -1 (an element of Z[a,d]).
    CoefPoly at_minus_one() const {
        CoefPoly acc;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) acc += (k % 2) ? -coeffs_[k] : coeffs_[k];
        return acc;
    }

    /// Value at y = 1 (an element of Z[a,d]).
    CoefPoly at_one() const {
        CoefPoly acc;
        for (const auto& c : coeffs_) acc += c;
        return acc;
    }

    /// Coefficients reduced mod p into [0, p); the degree may drop.
    YPoly reduce_mod(u64 p) const {
        std::vector<CoefPoly> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(c.reduce_mod(p));
        return YPoly(std::move(v));
    }

    /// Substitutes numeric a and d, giving the coefficient list of a polynomial in F_p[y].
    std::vector<FieldElem> specialize(const FieldElem& a, const FieldElem& d) const {
        PrimeField f = a.field();
        Exponent max_a = 0, max_d = 0;
        for (const auto& c : coeffs_)
            for (const auto& t : c.terms()) {
                max_a = std::max(max_a, t.a);
                max_d = std::max(max_d, t.d);
            }
        std::vector<FieldElem> pa(max_a + 1, f.one()), pd(max_d + 1, f.one());
        for (Exponent i = 1; i <= max_a; ++i) pa[i] = pa[i - 1] * a;
        for (Exponent j = 1; j <= max_d; ++j) pd[j] = pd[j - 1] * d;
        std::vector<FieldElem> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) {
            FieldElem acc = f.zero();
            for (const auto& t : c.terms()) acc += f.from_bigint(t.c) * pa[t.a] * pd[t.d];
            out.push_back(acc);
        }
        return out;
    }

    FieldElem eval(const FieldElem& a, const FieldElem& d, const FieldElem& y) const {
        return horner(specialize(a, d), y);
    }

    static FieldElem horner(std::span<const FieldElem> coeffs, const FieldElem& y) {
        FieldElem acc = y.field().zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
        return acc;
    }

    /// Canonical text: descending y-degree, explicit signs, multi-term coefficients in parentheses.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::size_t nonzero = 0;
        for (const auto& c : coeffs_) nonzero += c.is_zero() ? 0 : 1;
        std::string s;
        bool first = true;
        for (std::size_t kk = coeffs_.size(); kk-- > 0;) {
            const CoefPoly& c = coeffs_[kk];
            if (c.is_zero()) continue;
            std::string ypart;
            if (kk == 1) ypart = "y";
            if (kk > 1) ypart = "y^" + std::to_string(kk);

            if (c.size() == 1) {
                const Term& t = c.terms()[0];
                const bool neg = t.c < 0;
                s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
                const std::string factors = detail::render_monomial_factors(t.a, t.d);
                const BigInt mag = abs(t.c);
                std::string body;
                auto append = [&body](const std::string& part) { body += body.empty() ? part : "*" + part; };
                if (mag != 1 || (factors.empty() && ypart.empty())) append(mag.get_str());
                if (!factors.empty()) append(factors);
                if (!ypart.empty()) append(ypart);
                s += body;
            } else if (kk == 0 && nonzero == 1) {
                s += c.to_string();
            } else {
                s += first ? "" : " + ";
                s += "(" + c.to_string() + ")";
                if (!ypart.empty()) s += "*" + ypart;
            }
            first = false;
        }
        return s;
    }

    friend bool operator==(const YPoly&, const YPoly&) = default;
    friend std::ostream& operator<<(std::ostream& os, const YPoly& p) { return os << p.to_string(); }

   private:
    static constexpr std::size_t kKroneckerThreshold = 4096;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    YPoly& combine(const YPoly& o, bool subtract) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            if (subtract)
                coeffs_[k] -= o.coeffs_[k];
            else
                coeffs_[k] += o.coeffs_[k];
        }
        trim();
        return *this;
    }

    std::vector<CoefPoly> coeffs_;
};

}  // namespace edpoly

#endif  // EDPOLY_Y_POLY_HPP

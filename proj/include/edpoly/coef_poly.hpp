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

#ifndef EDPOLY_COEF_POLY_HPP
#define EDPOLY_COEF_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "prime_field.hpp"

namespace edpoly {

using BigInt = mpz_class;
using Exponent = std::uint32_t;

/// One term c * a^i * d^j of a CoefPoly.
struct Term {
    Exponent a = 0;
    Exponent d = 0;
    BigInt c;

    Exponent total() const noexcept { return a + d; }
    friend bool operator==(const Term& l, const Term& r) { return l.a == r.a && l.d == r.d && l.c == r.c; }
};

namespace detail {
// Storage order: a-exponent descending, then d-exponent descending.
inline bool term_before(const Term& l, const Term& r) noexcept {
    return l.a != r.a ? l.a > r.a : l.d > r.d;
}
inline bool same_monomial(const Term& l, const Term& r) noexcept { return l.a == r.a && l.d == r.d; }

inline std::string render_monomial_factors(Exponent i, Exponent j) {
    std::string s;
    auto put = [&](char v, Exponent e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += '^' + std::to_string(e);
    };
    put('a', i);
    put('d', j);
    return s;
}
}  // namespace detail

/// Sparse polynomial in Z[a, d]: a map from exponent pairs (i, j) to nonzero integers.
class CoefPoly {
   public:
    CoefPoly() = default;
    CoefPoly(long c) : CoefPoly(BigInt(c)) {}  // NOLINT: implicit integer constants read naturally
    CoefPoly(const BigInt& c) {                // NOLINT
        if (c != 0) terms_.push_back(Term{0, 0, c});
    }

    static CoefPoly monomial(const BigInt& c, Exponent i, Exponent j) {
        CoefPoly p;
        if (c != 0) p.terms_.push_back(Term{i, j, c});
        return p;
    }
    static CoefPoly a() { return monomial(1, 1, 0); }
    static CoefPoly d() { return monomial(1, 0, 1); }

    /// Builds from arbitrary terms: merges duplicates and drops zeros.
    static CoefPoly from_terms(std::vector<Term> terms) {
        CoefPoly p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].a == 0 && terms_[0].d == 0);
    }
    BigInt constant_term() const {
        for (const auto& t : terms_)
            if (t.a == 0 && t.d == 0) return t.c;
        return 0;
    }
    BigInt coefficient(Exponent i, Exponent j) const {
        for (const auto& t : terms_)
            if (t.a == i && t.d == j) return t.c;
        return 0;
    }

    /// True iff every term has total degree `deg` (the zero polynomial qualifies).
    bool is_homogeneous(Exponent deg) const {
        return std::all_of(terms_.begin(), terms_.end(), [deg](const Term& t) { return t.total() == deg; });
    }

    CoefPoly operator-() const {
        CoefPoly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    CoefPoly& operator+=(const CoefPoly& o) { return *this = merge(*this, o, false); }
    CoefPoly& operator-=(const CoefPoly& o) { return *this = merge(*this, o, true); }
    CoefPoly& operator*=(const CoefPoly& o) { return *this = *this * o; }

    friend CoefPoly operator+(const CoefPoly& l, const CoefPoly& r) { return merge(l, r, false); }
    friend CoefPoly operator-(const CoefPoly& l, const CoefPoly& r) { return merge(l, r, true); }

    friend CoefPoly operator*(const CoefPoly& l, const CoefPoly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        if (r.is_constant()) return l.scaled(r.terms_[0].c);
        if (l.is_constant()) return r.scaled(l.terms_[0].c);
        std::vector<Term> out;
        out.reserve(l.terms_.size() * r.terms_.size());
        for (const auto& x : l.terms_)
            for (const auto& y : r.terms_) out.push_back(Term{x.a + y.a, x.d + y.d, x.c * y.c});
        return from_terms(std::move(out));
    }

    CoefPoly scaled(const BigInt& k) const {
        if (k == 0) return {};
        CoefPoly r = *this;
        for (auto& t : r.terms_) t.c *= k;
        return r;
    }

    /// Exact quotient by an integer; throws NonExactDivision if some coefficient is not divisible.
    CoefPoly divided_by(const BigInt& k) const {
        if (k == 0) throw NonExactDivision("coefficient division by zero");
        CoefPoly r = *this;
        for (auto& t : r.terms_) {
            if (!mpz_divisible_p(t.c.get_mpz_t(), k.get_mpz_t()))
                throw NonExactDivision("coefficient not divisible by " + k.get_str());
            mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), k.get_mpz_t());
        }
        return r;
    }

    /// Exact multivariate division (lex order, a > d). Throws NonExactDivision on a remainder.
    CoefPoly exact_div(const CoefPoly& den) const {
        if (den.is_zero()) throw NonExactDivision("division by the zero polynomial");
        if (den.is_constant()) return divided_by(den.terms_[0].c);
        const Term& lead = den.terms_.front();
        CoefPoly rem = *this;
        std::vector<Term> quot;
        while (!rem.is_zero()) {
            const Term& lt = rem.terms_.front();
            if (lt.a < lead.a || lt.d < lead.d || !mpz_divisible_p(lt.c.get_mpz_t(), lead.c.get_mpz_t()))
                throw NonExactDivision("polynomial in a, d does not divide exactly");
            Term q{lt.a - lead.a, lt.d - lead.d, BigInt()};
            mpz_divexact(q.c.get_mpz_t(), lt.c.get_mpz_t(), lead.c.get_mpz_t());
            rem -= den * monomial(q.c, q.a, q.d);
            quot.push_back(std::move(q));
        }
        return from_terms(std::move(quot));
    }

    /// gcd of the integer coefficients (0 for the zero polynomial).
    BigInt content() const {
        BigInt g = 0;
        for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        return g;
    }

    /// Substitutes a <- -d, d <- -a: a^i d^j maps to (-1)^(i+j) a^j d^i.
    CoefPoly negate_swap() const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back(Term{t.d, t.a, ((t.a + t.d) % 2) ? BigInt(-t.c) : t.c});
        return from_terms(std::move(out));
    }

    /// Coefficients reduced into [0, p); terms that vanish mod p are dropped.
    CoefPoly reduce_mod(u64 p) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            unsigned long r = mpz_fdiv_ui(t.c.get_mpz_t(), p);
            if (r != 0) out.push_back(Term{t.a, t.d, BigInt(r)});
        }
        CoefPoly res;
        res.terms_ = std::move(out);
        return res;
    }

    FieldElem eval(const FieldElem& a, const FieldElem& d) const {
        PrimeField f = a.field();
        FieldElem acc = f.zero();
        for (const auto& t : terms_) acc += f.from_bigint(t.c) * a.pow(t.a) * d.pow(t.d);
        return acc;
    }

    /// Canonical text: descending total degree, a before d, explicit signs.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const Term*> order;
        for (const auto& t : terms_) order.push_back(&t);
        std::stable_sort(order.begin(), order.end(), [](const Term* l, const Term* r) {
            return l->total() != r->total() ? l->total() > r->total() : l->a > r->a;
        });
        std::string s;
        bool first = true;
        for (const Term* t : order) {
            bool neg = t->c < 0;
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            s += render_unsigned(abs(t->c), t->a, t->d);
            first = false;
        }
        return s;
    }

    /// Renders |c| * a^i * d^j without sign; a unit coefficient is omitted unless the monomial is 1.
    static std::string render_unsigned(const BigInt& mag, Exponent i, Exponent j) {
        std::string f = detail::render_monomial_factors(i, j);
        if (f.empty()) return mag.get_str();
        if (mag == 1) return f;
        return mag.get_str() + "*" + f;
    }

    friend bool operator==(const CoefPoly& l, const CoefPoly& r) { return l.terms_ == r.terms_; }
    friend std::ostream& operator<<(std::ostream& os, const CoefPoly& p) { return os << p.to_string(); }

   private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), detail::term_before);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && detail::same_monomial(out.back(), t)) {
                out.back().c += t.c;
                continue;
            }
            if (!out.empty() && out.back().c == 0) out.pop_back();
            out.push_back(std::move(t));
        }
        if (!out.empty() && out.back().c == 0) out.pop_back();
        terms_ = std::move(out);
    }

    static CoefPoly merge(const CoefPoly& l, const CoefPoly& r, bool subtract) {
        CoefPoly out;
        out.terms_.reserve(l.terms_.size() + r.terms_.size());
        auto i = l.terms_.begin();
        auto j = r.terms_.begin();
        auto push_r = [&](const Term& t) {
            out.terms_.push_back(t);
            if (subtract) out.terms_.back().c = -out.terms_.back().c;
        };
        while (i != l.terms_.end() && j != r.terms_.end()) {
            if (detail::same_monomial(*i, *j)) {
                BigInt c = subtract ? BigInt(i->c - j->c) : BigInt(i->c + j->c);
                if (c != 0) out.terms_.push_back(Term{i->a, i->d, std::move(c)});
                ++i;
                ++j;
            } else if (detail::term_before(*i, *j)) {
                out.terms_.push_back(*i++);
            } else {
                push_r(*j++);
            }
        }
        for (; i != l.terms_.end(); ++i) out.terms_.push_back(*i);
        for (; j != r.terms_.end(); ++j) push_r(*j);
        return out;
    }

    std::vector<Term> terms_;
};

}  // namespace edpoly

#endif  // EDPOLY_COEF_POLY_HPP

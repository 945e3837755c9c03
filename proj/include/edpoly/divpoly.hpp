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

#ifndef EDPOLY_DIVPOLY_HPP
#define EDPOLY_DIVPOLY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coef_poly.hpp"
#include "divpoly_recursion.hpp"
#include "errors.hpp"
#include "y_poly.hpp"

namespace edpoly {

/// Z[a,d][y] as a DivPolyRing; every (y+1) division goes through YPoly::exact_div.
class SymbolicRing {
   public:
    using value_type = YPoly;

    YPoly constant(long c) const { return YPoly(c); }
    YPoly y() const { return YPoly::y(); }
    YPoly a() const { return YPoly(CoefPoly::a()); }
    YPoly d() const { return YPoly(CoefPoly::d()); }
    YPoly div_by_y_plus_one(const YPoly& v) const { return YPoly::exact_div(v, y_plus_one_); }

   private:
    YPoly y_plus_one_ = YPoly::y() + YPoly(1);
};

/// Memo table n -> psi~_n(y) in Z[a,d][y].
///
/// Filling requires exclusive access; once filled, const lookups through
/// find()/at() are safe to share.
class DivPolyTable {
   public:
    DivPolyTable() : rec_(SymbolicRing{}) {}

    const YPoly& get(unsigned n) { return rec_.get(n); }
    void fill(unsigned n_max) { rec_.fill(n_max); }
    bool has(unsigned n) const noexcept { return rec_.has(n); }

    const YPoly& at(unsigned n) const {
        const YPoly* p = rec_.find(n);
        if (!p) throw std::out_of_range("psi~_" + std::to_string(n) + " has not been computed");
        return *p;
    }

    /// Replaces entry n and drops every larger entry; later lookups recompute from it.
    void inject(unsigned n, YPoly poly) { rec_.inject(n, std::move(poly)); }

    std::size_t size() const noexcept { return rec_.size(); }

   private:
    DivPolyRecursion<SymbolicRing> rec_;
};

// m(n): exponent of 2(1-y) in the denominator; also the degree bound of psi~_n.
inline long m_of(unsigned n) {
    const long nn = static_cast<long>(n) * static_cast<long>(n);
    return (n % 2) ? (nn - 1) / 2 : (nn - 2) / 2;
}

// k(n) = floor(3 n^2 / 8): the power of (a - d).
inline long k_of(unsigned n) { return 3L * n * n / 8; }

/// Multiplier of the leading term, tabulated by n mod 8.
inline long delta_of(unsigned n) {
    const long half = static_cast<long>(n) / 2;
    switch (n % 8) {
        case 0:
            return half;
        case 4:
            return -half;
        case 1:
        case 2:
        case 5:
            return 1;
        default:
            return -1;
    }
}

/// Multiplier of the trailing term, tabulated by n mod 8.
inline long epsilon_of(unsigned n) {
    const long half = static_cast<long>(n) / 2;
    switch (n % 8) {
        case 0:
            return -half;
        case 4:
            return half;
        case 1:
        case 2:
        case 3:
            return 1;
        default:
            return -1;
    }
}

inline int gamma_of(unsigned n) { return n % 2 == 0 ? 1 : 0; }

struct StructuralProfile {
    unsigned n = 0;
    long m = 0;
    long k = 0;
    long delta = 0;    // 0 when n = 0
    long epsilon = 0;  // 0 when n = 0
    int gamma = 0;

    friend bool operator==(const StructuralProfile&, const StructuralProfile&) = default;
};

inline StructuralProfile profile(unsigned n) {
    StructuralProfile p;
    p.n = n;
    p.m = m_of(n);
    p.k = k_of(n);
    p.gamma = gamma_of(n);
    if (n >= 1) {
        p.delta = delta_of(n);
        p.epsilon = epsilon_of(n);
    }
    return p;
}

/// Coefficient reversal over the window [0, m(n)].
inline YPoly star(const YPoly& poly, unsigned n) {
    const long m = m_of(n);
    if (poly.is_zero()) return {};
    if (poly.degree() > m)
        throw DegreeTooLarge("degree " + std::to_string(poly.degree()) + " exceeds m(" + std::to_string(n) +
                             ") = " + std::to_string(m));
    std::vector<CoefPoly> out(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= poly.degree(); ++i) out[static_cast<std::size_t>(m - i)] = poly.coeff(static_cast<std::size_t>(i));
    return YPoly(std::move(out));
}

/// Applies a <- -d, d <- -a to every coefficient.
inline YPoly negate_swap_params(const YPoly& poly) {
    std::vector<CoefPoly> out;
    out.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs()) out.push_back(c.negate_swap());
    return YPoly(std::move(out));
}

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass:
            return "pass";
        case Verdict::fail:
            return "fail";
        default:
            return "n/a";
    }
}

struct StructureCheck {
    std::string name;
    Verdict verdict = Verdict::not_applicable;
    std::string detail;
};

struct StructureReport {
    unsigned n = 0;
    std::optional<u64> char_p;
    int degree = YPoly::kMinusInfinity;  // degree after optional reduction mod char_p
    StructuralProfile profile;
    std::vector<StructureCheck> checks;

    bool all_passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.verdict == Verdict::fail; });
    }
    const StructureCheck* find(const std::string& name) const {
        auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& c) { return c.name == name; });
        return it == checks.end() ? nullptr : &*it;
    }
};

/// Checks psi~_n against every structural statement: (y+1)-divisibility for even n,
/// degree, leading and trailing terms, homogeneity, and the star/negate-swap symmetry.
///
/// With char_p set, the degree and extreme-term checks run on psi~_n reduced mod
/// char_p; if 4*char_p divides n only the strict bound deg < m(n)-1 is asserted.
inline StructureReport check_structure(const YPoly& psi, unsigned n, std::optional<u64> char_p = std::nullopt) {
    if (n == 0) throw std::invalid_argument("structure checks need n >= 1");
    StructureReport rep;
    rep.n = n;
    rep.char_p = char_p;
    rep.profile = profile(n);
    const long m = rep.profile.m;
    const long hom = m - rep.profile.k;
    const bool four_divides = n % 4 == 0;
    const bool exceptional = char_p && four_divides && n % *char_p == 0;

    const YPoly reduced = char_p ? psi.reduce_mod(*char_p) : psi;
    rep.degree = reduced.degree();
    auto add = [&rep](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail)});
    };
    auto skip = [&rep](std::string name, std::string detail) {
        rep.checks.push_back({std::move(name), Verdict::not_applicable, std::move(detail)});
    };

    // Every operation on the way is exact in Z, so integrality holds by construction.
    add("integrality", true, "coefficients in Z[a,d]");

    if (n % 2 == 0) {
        bool ok = psi.at_minus_one().is_zero();
        if (ok) {
            try {
                (void)YPoly::exact_div(psi, YPoly::y() + YPoly(1));
            } catch (const NonExactDivision&) {
                ok = false;
            }
        }
        add("y_plus_one_divides", ok, "psi~(-1) = " + psi.at_minus_one().to_string());
    } else {
        skip("y_plus_one_divides", "odd n");
    }

    const long expected_deg = four_divides ? m - 1 : m;
    if (exceptional) {
        add("degree", rep.degree < m - 1,
            "deg = " + std::to_string(rep.degree) + ", bound < " + std::to_string(m - 1));
    } else {
        add("degree", rep.degree == expected_deg,
            "deg = " + std::to_string(rep.degree) + ", expected " + std::to_string(expected_deg));
    }

    auto reduce = [&](const CoefPoly& c) { return char_p ? c.reduce_mod(*char_p) : c; };
    if (exceptional) {
        skip("leading_term", "4*char divides n");
        skip("trailing_term", "4*char divides n");
    } else {
        const CoefPoly lead = reduce(CoefPoly::monomial(rep.profile.delta, 0, static_cast<Exponent>(hom)));
        const bool lead_ok = rep.degree == expected_deg && reduced.leading() == lead;
        add("leading_term", lead_ok, "coefficient " + reduced.leading().to_string() + ", expected " + lead.to_string());

        const CoefPoly trail = reduce(CoefPoly::monomial(rep.profile.epsilon, static_cast<Exponent>(hom), 0));
        const int low = reduced.low_degree();
        const int expected_low = four_divides ? 1 : 0;
        const bool trail_ok = low == expected_low && reduced.coeff(static_cast<std::size_t>(low)) == trail;
        add("trailing_term", trail_ok,
            "y^" + std::to_string(low) + " coefficient " +
                (low >= 0 ? reduced.coeff(static_cast<std::size_t>(low)).to_string() : std::string("0")) +
                ", expected " + trail.to_string());
    }

    const bool homogeneous = std::all_of(psi.coeffs().begin(), psi.coeffs().end(),
                                         [&](const CoefPoly& c) { return c.is_homogeneous(static_cast<Exponent>(hom)); });
    add("homogeneity", homogeneous, "total degree " + std::to_string(hom));

    bool symmetric = false;
    std::string sym_detail = "psi~(a,d,y) = psi~*(-d,-a,y)";
    try {
        symmetric = negate_swap_params(star(psi, n)) == psi;
    } catch (const DegreeTooLarge& e) {
        sym_detail = e.what();
    }
    add("symmetry", symmetric, sym_detail);
    return rep;
}

inline StructureReport check_structure(DivPolyTable& table, unsigned n, std::optional<u64> char_p = std::nullopt) {
    return check_structure(table.get(n), n, char_p);
}

}  // namespace edpoly

#endif  // EDPOLY_DIVPOLY_HPP

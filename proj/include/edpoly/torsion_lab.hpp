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

// Scalar multiplication and torsion tests driven by the division polynomials,
// and the harness that cross-validates them against independent oracles.
//
// (0, -1) is the only affine point of order 2: P = -P forces x = -x, so x = 0
// and then y^2 = 1. Hence psi_2n(P) = 0 with psi_n(P) != 0 means [n]P is
// (0, -1) or one of the points of W with no affine preimage.

#ifndef EDPOLY_TORSION_LAB_HPP
#define EDPOLY_TORSION_LAB_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "curve.hpp"
#include "divpoly.hpp"
#include "errors.hpp"
#include "function_field.hpp"
#include "sampling.hpp"
#include "weierstrass_ref.hpp"

namespace edpoly {

enum class MulMethod { divpoly, naive, weierstrass_detour };

inline const char* to_string(MulMethod m) {
    switch (m) {
        case MulMethod::divpoly:
            return "divpoly";
        case MulMethod::naive:
            return "naive";
        default:
            return "weierstrass_detour";
    }
}

struct MulResult {
    EdwardsPoint input;
    unsigned n = 0;
    EdwardsPoint output;
    MulMethod method = MulMethod::divpoly;
};

/// [n]P = (phi psi / omega, (phi - psi^2) / (phi + psi^2)), with psi, phi, omega at index n.
///
/// (0, 1) and (0, -1) are handled in closed form. A vanishing phi + psi^2 or a
/// landing on a point of W with no affine preimage is reported as DenominatorZero
/// on curves where the affine law is incomplete; on complete curves it would
/// contradict the group structure and raises InternalInconsistency.
template <TildeSource S>
EdwardsPoint ed_mul_divpoly_with(S& tilde, const EdwardsCurve& C, const EdwardsPoint& P, unsigned n) {
    if (!C.contains(P)) throw NotOnCurve("point " + P.to_string() + " is not on the curve");
    const PrimeField& f = C.field();
    if (n == 0 || P == C.identity()) return C.identity();
    if (P == C.order_two_point()) return n % 2 ? C.order_two_point() : C.identity();

    auto off_image = [&](const std::string& why) -> EdwardsPoint {
        const std::string msg = "[" + std::to_string(n) + "]" + P.to_string() + ": " + why;
        if (C.is_complete()) throw InternalInconsistency(msg);
        throw DenominatorZero(msg);
    };

    const FieldElem psi = psi_eval_with(tilde, n, C, P);
    if (psi.is_zero()) return C.identity();
    const FieldElem amd = C.a() - C.d();
    const FieldElem psi2 = psi * psi;
    const FieldElem phi = (f.one() + P.y) * psi2 / (f.one() - P.y) -
                          f(4) * psi_eval_with(tilde, n - 1, C, P) * psi_eval_with(tilde, n + 1, C, P) / amd;
    const FieldElem psi_2n = psi_eval_with(tilde, 2 * n, C, P);
    if (psi_2n.is_zero()) {
        if (phi.is_zero()) return C.order_two_point();
        return off_image("lands on an order-2 point outside the affine curve");
    }
    const FieldElem omega = f(2) * psi_2n / (amd * psi);
    const FieldElem den_y = phi + psi2;
    if (den_y.is_zero()) return off_image("lands on an order-4 point outside the affine curve");
    const EdwardsPoint R{phi * psi / omega, (phi - psi2) / den_y};
    if (!C.contains(R)) throw InternalInconsistency("[" + std::to_string(n) + "]" + P.to_string() + " left the curve");
    return R;
}

/// Uses the recursion over F_p at y_P, so any n is cheap.
inline EdwardsPoint ed_mul_divpoly(const EdwardsCurve& C, const EdwardsPoint& P, unsigned n) {
    SeriesTilde src(C, P, 2 * n + 2);
    return ed_mul_divpoly_with(src, C, P, n);
}

inline EdwardsPoint ed_mul_divpoly(const EdwardsCurve& C, const EdwardsPoint& P, unsigned n, DivPolyTable& table) {
    TableTilde src(table, C, P);
    return ed_mul_divpoly_with(src, C, P, n);
}

/// from_weierstrass([n] to_weierstrass(P)), computed with Psi_n.
inline EdwardsImage ed_mul_weierstrass_detour(const EdwardsCurve& C, const EdwardsPoint& P, unsigned n) {
    WsDivTable T(WeierstrassCurve::from_edwards(C));
    return from_weierstrass(C, ws_mul(T, n, to_weierstrass(C, P)));
}

inline MulResult multiply(const EdwardsCurve& C, const EdwardsPoint& P, unsigned n, MulMethod method) {
    MulResult r{P, n, {}, method};
    switch (method) {
        case MulMethod::divpoly:
            r.output = ed_mul_divpoly(C, P, n);
            break;
        case MulMethod::naive:
            r.output = ed_scalar_mul_naive(C, P, n);
            break;
        case MulMethod::weierstrass_detour: {
            const EdwardsImage img = ed_mul_weierstrass_detour(C, P, n);
            if (std::holds_alternative<ExceptionalPoint>(img))
                throw DenominatorZero("[" + std::to_string(n) + "]" + P.to_string() + " has no affine image");
            r.output = std::get<EdwardsPoint>(img);
            break;
        }
    }
    return r;
}

/// True iff psi~_n(a, d, y_P) = 0, i.e. P is an n-torsion point.
template <TildeSource S>
bool is_n_torsion_with(S& tilde, const EdwardsCurve& C, const EdwardsPoint& P, unsigned n) {
    if (P == C.identity()) throw UndefinedAtPoint("torsion test excludes the identity");
    return tilde(n).is_zero();
}

inline bool is_n_torsion(const EdwardsCurve& C, const EdwardsPoint& P, unsigned n) {
    SeriesTilde src(C, P, n);
    return is_n_torsion_with(src, C, P, n);
}

inline bool is_n_torsion(const EdwardsCurve& C, const EdwardsPoint& P, unsigned n, DivPolyTable& table) {
    TableTilde src(table, C, P);
    return is_n_torsion_with(src, C, P, n);
}

struct TorsionRow {
    EdwardsPoint point;
    unsigned long long order = 0;
    std::string verdicts;  // position n-1: '1' if psi~_n(y_P) = 0, else '0'
};

struct TorsionMismatch {
    EdwardsPoint point;
    unsigned n = 0;
    bool tilde_zero = false;
    bool order_divides = false;
};

struct TorsionReport {
    u64 p = 0;
    u64 a = 0;
    u64 d = 0;
    std::size_t affine_points = 0;
    std::size_t group_order = 0;  // |W(F_p)|, affine points plus rational exceptional points
    unsigned n_max = 0;
    std::vector<TorsionRow> rows;
    std::vector<TorsionMismatch> mismatches;
    std::vector<unsigned> count_mismatches;  // n where the n-torsion counts on E and W disagree

    bool all_passed() const { return mismatches.empty() && count_mismatches.empty(); }
};

/// Exhaustive verdicts psi~_n(y_P) = 0 versus order(P) | n over every P != (0, 1)
/// and 1 <= n <= n_max (0 means 2 |W(F_p)|).
///
/// Also checks, for each n, that the n-torsion count on E equals the count of
/// nonzero Psi_n roots on W minus the rational exceptional points of order dividing n.
inline TorsionReport torsion_scan(const EdwardsCurve& C, unsigned n_max = 0, u64 limit = kDefaultEnumerationLimit) {
    const auto points = enumerate_points(C, limit);
    const WeierstrassCurve W = WeierstrassCurve::from_edwards(C);
    const auto wpoints = enumerate_points(W, limit);
    const auto exceptional = exceptional_set(C);

    TorsionReport rep;
    rep.p = C.field().modulus();
    rep.a = C.a().value();
    rep.d = C.d().value();
    rep.affine_points = points.size();
    rep.group_order = wpoints.size();
    rep.n_max = n_max ? n_max : static_cast<unsigned>(2 * wpoints.size());

    std::vector<std::size_t> count_e(rep.n_max + 1, 0), count_w(rep.n_max + 1, 0);
    std::map<u64, std::string> by_y;  // both points above y share psi~ values
    for (const auto& P : points) {
        if (P == C.identity()) continue;
        auto it = by_y.find(P.y.value());
        if (it == by_y.end()) {
            SeriesTilde tilde(C, P, rep.n_max);
            std::string v(rep.n_max, '0');
            for (unsigned n = 1; n <= rep.n_max; ++n) v[n - 1] = is_n_torsion_with(tilde, C, P, n) ? '1' : '0';
            it = by_y.emplace(P.y.value(), std::move(v)).first;
        }
        TorsionRow row{P, ed_order(C, P), it->second};
        for (unsigned n = 1; n <= rep.n_max; ++n) {
            const bool zero = row.verdicts[n - 1] == '1';
            const bool divides = n % row.order == 0;
            if (zero) ++count_e[n];
            if (zero != divides) rep.mismatches.push_back({P, n, zero, divides});
        }
        rep.rows.push_back(std::move(row));
    }

    WsDivTable T(W);
    for (const auto& Q : wpoints) {
        if (Q.infinity) continue;
        for (unsigned n = 1; n <= rep.n_max; ++n) {
            const bool zero = Q.v.is_zero() ? n % 2 == 0 : ws_psi_eval(T, n, Q).is_zero();
            if (zero) ++count_w[n];
        }
    }
    for (unsigned n = 1; n <= rep.n_max; ++n) {
        std::size_t ex = 0;
        for (const auto& e : exceptional) ex += n % e.order == 0;
        if (count_w[n] != count_e[n] + ex) rep.count_mismatches.push_back(n);
    }
    return rep;
}

struct CurveParams {
    u64 p = 0;
    long long a = 0;
    long long d = 0;
    friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// Small curves for exhaustive scans: complete ones, ones with d square (order-4
/// exceptional points) and ones with a d square (order-2 exceptional points).
inline std::vector<CurveParams> default_torsion_curves() {
    return {{5, 1, 2},   {7, 1, 3},   {11, 1, 2},  {13, 2, 5},  {17, 1, 3},  {19, 4, 6},
            {23, 1, 5},  {29, 3, 7},  {31, 1, 2},  {37, 5, 11}, {41, 2, 3},  {53, 1, 4},
            {61, 7, 9},  {73, 3, 10}, {89, 1, 3},  {97, 5, 13}};
}

struct CharDropCase {
    u64 p = 0;
    unsigned n = 0;
    friend bool operator==(const CharDropCase&, const CharDropCase&) = default;
};

struct CrosscheckConfig {
    std::uint64_t seed = 42;
    u64 prime_min = 5;
    u64 prime_max = 1009;
    unsigned substitution_trials = 200;
    unsigned substitution_n_max = 20;
    unsigned mul_trials = 500;
    unsigned mul_n_max = 50;
    unsigned structure_n_max = 30;
    std::vector<CharDropCase> char_cases{{5, 20}, {7, 28}, {5, 40}};
    std::vector<CurveParams> torsion_curves = default_torsion_curves();
    unsigned birational_p_max = 97;
    /// Debug aid: replaces psi~_3 by its negation before any suite runs.
    bool corrupt_psi3 = false;

    static CrosscheckConfig quick(std::uint64_t seed = 42) {
        CrosscheckConfig c;
        c.seed = seed;
        c.prime_max = 211;
        c.substitution_trials = 60;
        c.substitution_n_max = 12;
        c.mul_trials = 120;
        c.mul_n_max = 24;
        c.structure_n_max = 12;
        c.char_cases = {{5, 20}};
        c.torsion_curves.resize(5);
        c.birational_p_max = 23;
        return c;
    }

    friend bool operator==(const CrosscheckConfig&, const CrosscheckConfig&) = default;
};

struct FailureDetail {
    std::string curve;  // "p=.. a=.. d=.."
    std::string point;
    long long n = -1;
    std::string expected;
    std::string actual;
    std::string note;
    friend bool operator==(const FailureDetail&, const FailureDetail&) = default;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::optional<FailureDetail> first_failure;

    bool passed() const { return failures == 0; }
    void record(bool ok, const std::function<FailureDetail()>& detail) {
        ++checks;
        if (ok) return;
        ++failures;
        if (!first_failure) first_failure = detail();
    }
    friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct CrosscheckReport {
    CrosscheckConfig config;
    std::vector<SuiteResult> suites;
    std::uint64_t internal_inconsistencies = 0;

    bool all_passed() const {
        if (internal_inconsistencies) return false;
        for (const auto& s : suites)
            if (!s.passed()) return false;
        return true;
    }
    const SuiteResult* find(const std::string& name) const {
        for (const auto& s : suites)
            if (s.name == name) return &s;
        return nullptr;
    }
    friend bool operator==(const CrosscheckReport&, const CrosscheckReport&) = default;
};

namespace detail {

inline std::string curve_label(const EdwardsCurve& C) {
    return "p=" + std::to_string(C.field().modulus()) + " a=" + std::to_string(C.a().value()) +
           " d=" + std::to_string(C.d().value());
}

inline std::string fe(const FieldElem& v) { return std::to_string(v.value()); }

inline std::string image_label(const EdwardsImage& img) {
    if (std::holds_alternative<ExceptionalPoint>(img))
        return "exceptional(order " + std::to_string(std::get<ExceptionalPoint>(img).order) + ")";
    return std::get<EdwardsPoint>(img).to_string();
}

}  // namespace detail

/// psi_n(P) = Psi_n(to_weierstrass(P)) on random (p, a, d, P), every 0 <= n <= n_max.
inline SuiteResult run_substitution_suite(const CrosscheckConfig& cfg, DivPolyTable& table, Rng& rng) {
    SuiteResult s{"substitution"};
    const auto primes = primes_between(cfg.prime_min, cfg.prime_max);
    for (unsigned trial = 0; trial < cfg.substitution_trials; ++trial) {
        const PrimeField f(primes[rng() % primes.size()]);
        const EdwardsCurve C = random_curve(rng, f);
        const auto P = random_point(rng, C);
        if (!P) {
            --trial;
            continue;
        }
        WsDivTable T(WeierstrassCurve::from_edwards(C));
        const WeierstrassPoint Q = to_weierstrass(C, *P);
        for (unsigned n = 0; n <= cfg.substitution_n_max; ++n) {
            const FieldElem lhs = psi_eval(n, table, C, *P);
            const FieldElem rhs = ws_psi_eval(T, n, Q);
            s.record(lhs == rhs, [&] {
                return FailureDetail{detail::curve_label(C), P->to_string(), n, detail::fe(rhs), detail::fe(lhs),
                                     "psi_n(P) vs Psi_n(u, v)"};
            });
        }
    }
    return s;
}

/// ed_mul_divpoly against repeated addition and the Weierstrass detour.
///
/// Complete curves carry the bulk (the naive oracle is always defined there).
/// Arbitrary curves are added to exercise the off-image landings: there the
/// naive oracle is consulted only when it is defined, and a DenominatorZero from
/// ed_mul_divpoly must coincide with the detour landing outside the affine curve.
inline SuiteResult run_multiplication_suite(const CrosscheckConfig& cfg, Rng& rng, std::uint64_t& inconsistencies) {
    SuiteResult s{"multiplication"};
    const auto primes = primes_between(cfg.prime_min, cfg.prime_max);
    const unsigned total = cfg.mul_trials + cfg.mul_trials / 2;
    for (unsigned trial = 0; trial < total; ++trial) {
        const PrimeField f(primes[rng() % primes.size()]);
        const bool complete = trial < cfg.mul_trials;
        const EdwardsCurve C = random_curve(rng, f, complete ? CurveKind::complete : CurveKind::any);
        const auto P = random_point(rng, C);
        if (!P) {
            --trial;
            continue;
        }
        const unsigned n = 1 + static_cast<unsigned>(rng() % cfg.mul_n_max);
        const std::string label = detail::curve_label(C);

        std::optional<EdwardsPoint> dp;
        std::string dp_text;
        try {
            dp = ed_mul_divpoly(C, *P, n);
            dp_text = dp->to_string();
        } catch (const InternalInconsistency& e) {
            ++inconsistencies;
            dp_text = std::string("InternalInconsistency: ") + e.what();
        } catch (const DenominatorZero&) {
            dp_text = "DenominatorZero";
        }

        std::optional<EdwardsPoint> naive;
        try {
            naive = ed_scalar_mul_naive(C, *P, n);
        } catch (const DenominatorZero&) {
        }
        if (complete || naive) {
            s.record(naive && dp && *naive == *dp, [&] {
                return FailureDetail{label, P->to_string(), n, naive ? naive->to_string() : "DenominatorZero", dp_text,
                                     "divpoly vs naive"};
            });
        }

        const EdwardsImage detour = ed_mul_weierstrass_detour(C, *P, n);
        const bool off = std::holds_alternative<ExceptionalPoint>(detour);
        const bool ok = off ? (!dp && dp_text == "DenominatorZero") : (dp && *dp == std::get<EdwardsPoint>(detour));
        s.record(ok, [&] {
            return FailureDetail{label, P->to_string(), n, detail::image_label(detour), dp_text, "divpoly vs detour"};
        });
    }
    return s;
}

inline SuiteResult run_structure_suite(const CrosscheckConfig& cfg, DivPolyTable& table) {
    SuiteResult s{"structure"};
    auto record_report = [&s](const StructureReport& rep) {
        for (const auto& c : rep.checks) {
            s.record(c.verdict != Verdict::fail, [&] {
                return FailureDetail{rep.char_p ? "char " + std::to_string(*rep.char_p) : "char 0", "", rep.n, "pass",
                                     "fail", c.name + ": " + c.detail};
            });
        }
    };
    for (unsigned n = 1; n <= cfg.structure_n_max; ++n) record_report(check_structure(table, n));
    for (const auto& cc : cfg.char_cases) {
        const StructureReport rep = check_structure(table, cc.n, cc.p);
        record_report(rep);
        const long bound = m_of(cc.n) - 1;
        s.record(rep.degree < bound, [&] {
            return FailureDetail{"char " + std::to_string(cc.p), "", cc.n, "< " + std::to_string(bound),
                                 std::to_string(rep.degree), "degree drop"};
        });
    }
    return s;
}

inline SuiteResult run_torsion_suite(const CrosscheckConfig& cfg) {
    SuiteResult s{"torsion"};
    for (const auto& cp : cfg.torsion_curves) {
        const EdwardsCurve C(cp.p, cp.a, cp.d);
        const TorsionReport rep = torsion_scan(C);
        const std::string label = detail::curve_label(C);
        for (const auto& row : rep.rows) {
            for (unsigned n = 1; n <= rep.n_max; ++n) {
                const bool zero = row.verdicts[n - 1] == '1';
                const bool divides = n % row.order == 0;
                s.record(zero == divides, [&] {
                    return FailureDetail{label, row.point.to_string(), n, divides ? "order divides n" : "order does not divide n",
                                         zero ? "psi~_n(y) = 0" : "psi~_n(y) != 0", "torsion verdict"};
                });
            }
        }
        for (unsigned n = 1; n <= rep.n_max; ++n) {
            const bool bad = std::find(rep.count_mismatches.begin(), rep.count_mismatches.end(), n) != rep.count_mismatches.end();
            s.record(!bad, [&] { return FailureDetail{label, "", n, "", "", "E/W torsion count mismatch"}; });
        }
    }
    return s;
}

/// Homomorphism, round trip, special points and exceptional orders on all curves with p <= birational_p_max.
inline SuiteResult run_birational_suite(const CrosscheckConfig& cfg, Rng& rng) {
    SuiteResult s{"birational"};
    for (u64 p : primes_between(5, cfg.birational_p_max)) {
        const PrimeField f(p);
        for (int c = 0; c < 3; ++c) {
            const EdwardsCurve C = random_curve(rng, f);
            const WeierstrassCurve W = WeierstrassCurve::from_edwards(C);
            const std::string label = detail::curve_label(C);
            const auto pts = enumerate_points(C);
            s.record(to_weierstrass(C, C.identity()).infinity, [&] { return FailureDetail{label, "(0 : 1)", -1, "O", "", "special"}; });
            const WeierstrassPoint T = WeierstrassPoint::affine((C.a() + C.d()) / f(6), f.zero());
            s.record(to_weierstrass(C, C.order_two_point()) == T,
                     [&] { return FailureDetail{label, "(0 : p-1)", -1, T.to_string(), "", "special"}; });
            for (const auto& P : pts) {
                const EdwardsImage back = from_weierstrass(C, to_weierstrass(C, P));
                s.record(std::holds_alternative<EdwardsPoint>(back) && std::get<EdwardsPoint>(back) == P, [&] {
                    return FailureDetail{label, P.to_string(), -1, P.to_string(), detail::image_label(back), "round trip"};
                });
            }
            for (int t = 0; t < 40 && !pts.empty(); ++t) {
                const EdwardsPoint& P = pts[rng() % pts.size()];
                const EdwardsPoint& Q = pts[rng() % pts.size()];
                EdwardsPoint R;
                try {
                    R = ed_add(C, P, Q);
                } catch (const DenominatorZero&) {
                    continue;
                }
                const WeierstrassPoint lhs = to_weierstrass(C, R);
                const WeierstrassPoint rhs = ws_add(W, to_weierstrass(C, P), to_weierstrass(C, Q));
                s.record(lhs == rhs, [&] {
                    return FailureDetail{label, P.to_string() + " + " + Q.to_string(), -1, rhs.to_string(), lhs.to_string(),
                                         "homomorphism"};
                });
            }
            for (const auto& e : exceptional_set(C)) {
                const EdwardsImage img = from_weierstrass(C, e.point);
                const bool ok = W.contains(e.point) && ws_order(W, e.point) == e.order &&
                                std::holds_alternative<ExceptionalPoint>(img) &&
                                std::get<ExceptionalPoint>(img).order == e.order;
                s.record(ok, [&] {
                    return FailureDetail{label, e.point.to_string(), -1, "order " + std::to_string(e.order),
                                         "order " + std::to_string(ws_order(W, e.point)), "exceptional point"};
                });
            }
        }
    }
    return s;
}

/// Runs every suite with one seeded generator; failures are report entries.
inline CrosscheckReport crosscheck(const CrosscheckConfig& cfg) {
    CrosscheckReport rep;
    rep.config = cfg;
    Rng rng(cfg.seed);
    DivPolyTable table;
    if (cfg.corrupt_psi3) {
        table.fill(3);
        table.inject(3, -table.get(3));
    }
    rep.suites.push_back(run_substitution_suite(cfg, table, rng));
    rep.suites.push_back(run_multiplication_suite(cfg, rng, rep.internal_inconsistencies));
    rep.suites.push_back(run_structure_suite(cfg, table));
    rep.suites.push_back(run_torsion_suite(cfg));
    rep.suites.push_back(run_birational_suite(cfg, rng));
    return rep;
}

}  // namespace edpoly

#endif  // EDPOLY_TORSION_LAB_HPP

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

// JSON forms of psi~_n, torsion scans and cross-check reports.
//
// psi~_n: {"n","m","k","degree","coeffs":[{"y","terms":[{"a","d","c"}]}]}.
// coeffs run by y-exponent descending and skip zero coefficients; terms run by
// (a desc, d desc); "c" is a decimal string. The zero polynomial has degree -1.

#ifndef EDPOLY_JSON_IO_HPP
#define EDPOLY_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "divpoly.hpp"
#include "errors.hpp"
#include "torsion_lab.hpp"

namespace edpoly {

using Json = nlohmann::ordered_json;

inline Json psi_to_json(unsigned n, const YPoly& poly) {
    Json j;
    j["n"] = n;
    j["m"] = m_of(n);
    j["k"] = k_of(n);
    j["degree"] = poly.is_zero() ? -1 : poly.degree();
    Json coeffs = Json::array();
    for (int i = poly.degree(); i >= 0; --i) {
        const CoefPoly& c = poly.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        Json terms = Json::array();
        for (const Term& t : c.terms()) terms.push_back(Json{{"a", t.a}, {"d", t.d}, {"c", t.c.get_str()}});
        coeffs.push_back(Json{{"y", i}, {"terms", std::move(terms)}});
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Json psi_to_json(unsigned n, DivPolyTable& table) { return psi_to_json(n, table.get(n)); }

struct PsiRecord {
    unsigned n = 0;
    long m = 0;
    long k = 0;
    YPoly poly;
};

/// Inverse of psi_to_json; rejects missing fields and inconsistent m, k or degree.
inline PsiRecord psi_from_json(const Json& j) {
    try {
        PsiRecord r;
        r.n = j.at("n").get<unsigned>();
        r.m = j.at("m").get<long>();
        r.k = j.at("k").get<long>();
        if (r.m != m_of(r.n) || r.k != k_of(r.n)) throw ParseError("m or k does not match n");
        const int degree = j.at("degree").get<int>();
        std::vector<CoefPoly> coeffs;
        for (const auto& entry : j.at("coeffs")) {
            const int y = entry.at("y").get<int>();
            if (y < 0 || y > degree) throw ParseError("y exponent " + std::to_string(y) + " outside 0.." + std::to_string(degree));
            if (coeffs.size() <= static_cast<std::size_t>(y)) coeffs.resize(static_cast<std::size_t>(y) + 1);
            std::vector<Term> terms;
            for (const auto& t : entry.at("terms")) {
                BigInt c;
                if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
                terms.push_back(Term{t.at("a").get<Exponent>(), t.at("d").get<Exponent>(), c});
            }
            coeffs[static_cast<std::size_t>(y)] += CoefPoly::from_terms(std::move(terms));
        }
        r.poly = YPoly(std::move(coeffs));
        if ((r.poly.is_zero() ? -1 : r.poly.degree()) != degree) throw ParseError("degree does not match coefficients");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed psi record: ") + e.what());
    }
}

inline Json to_json(const EdwardsPoint& P) { return Json::array({P.x.value(), P.y.value()}); }

inline Json to_json(const TorsionReport& r) {
    Json j;
    j["p"] = r.p;
    j["a"] = r.a;
    j["d"] = r.d;
    j["affine_points"] = r.affine_points;
    j["group_order"] = r.group_order;
    j["n_max"] = r.n_max;
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back(Json{{"point", to_json(row.point)}, {"order", row.order}, {"verdicts", row.verdicts}});
    j["rows"] = std::move(rows);
    Json mism = Json::array();
    for (const auto& m : r.mismatches)
        mism.push_back(Json{{"point", to_json(m.point)}, {"n", m.n}, {"tilde_zero", m.tilde_zero}, {"order_divides", m.order_divides}});
    j["mismatches"] = std::move(mism);
    j["count_mismatches"] = r.count_mismatches;
    j["passed"] = r.all_passed();
    return j;
}

inline Json to_json(const CrosscheckConfig& c) {
    Json j;
    j["seed"] = c.seed;
    j["prime_min"] = c.prime_min;
    j["prime_max"] = c.prime_max;
    j["substitution_trials"] = c.substitution_trials;
    j["substitution_n_max"] = c.substitution_n_max;
    j["mul_trials"] = c.mul_trials;
    j["mul_n_max"] = c.mul_n_max;
    j["structure_n_max"] = c.structure_n_max;
    Json cc = Json::array();
    for (const auto& x : c.char_cases) cc.push_back(Json{{"p", x.p}, {"n", x.n}});
    j["char_cases"] = std::move(cc);
    Json tc = Json::array();
    for (const auto& x : c.torsion_curves) tc.push_back(Json{{"p", x.p}, {"a", x.a}, {"d", x.d}});
    j["torsion_curves"] = std::move(tc);
    j["birational_p_max"] = c.birational_p_max;
    j["corrupt_psi3"] = c.corrupt_psi3;
    return j;
}

inline CrosscheckConfig config_from_json(const Json& j) {
    CrosscheckConfig c;
    c.seed = j.at("seed").get<std::uint64_t>();
    c.prime_min = j.at("prime_min").get<u64>();
    c.prime_max = j.at("prime_max").get<u64>();
    c.substitution_trials = j.at("substitution_trials").get<unsigned>();
    c.substitution_n_max = j.at("substitution_n_max").get<unsigned>();
    c.mul_trials = j.at("mul_trials").get<unsigned>();
    c.mul_n_max = j.at("mul_n_max").get<unsigned>();
    c.structure_n_max = j.at("structure_n_max").get<unsigned>();
    c.char_cases.clear();
    for (const auto& x : j.at("char_cases")) c.char_cases.push_back({x.at("p").get<u64>(), x.at("n").get<unsigned>()});
    c.torsion_curves.clear();
    for (const auto& x : j.at("torsion_curves"))
        c.torsion_curves.push_back({x.at("p").get<u64>(), x.at("a").get<long long>(), x.at("d").get<long long>()});
    c.birational_p_max = j.at("birational_p_max").get<unsigned>();
    c.corrupt_psi3 = j.at("corrupt_psi3").get<bool>();
    return c;
}

inline Json to_json(const SuiteResult& s) {
    Json j;
    j["name"] = s.name;
    j["checks"] = s.checks;
    j["failures"] = s.failures;
    if (s.first_failure) {
        const auto& f = *s.first_failure;
        j["first_failure"] = Json{{"curve", f.curve}, {"point", f.point}, {"n", f.n},
                                  {"expected", f.expected}, {"actual", f.actual}, {"note", f.note}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

inline Json to_json(const CrosscheckReport& r) {
    Json j;
    j["config"] = to_json(r.config);
    Json suites = Json::array();
    for (const auto& s : r.suites) suites.push_back(to_json(s));
    j["suites"] = std::move(suites);
    j["internal_inconsistencies"] = r.internal_inconsistencies;
    j["passed"] = r.all_passed();
    return j;
}

inline CrosscheckReport report_from_json(const Json& j) {
    try {
        CrosscheckReport r;
        r.config = config_from_json(j.at("config"));
        for (const auto& s : j.at("suites")) {
            SuiteResult sr;
            sr.name = s.at("name").get<std::string>();
            sr.checks = s.at("checks").get<std::uint64_t>();
            sr.failures = s.at("failures").get<std::uint64_t>();
            const auto& f = s.at("first_failure");
            if (!f.is_null())
                sr.first_failure = FailureDetail{f.at("curve").get<std::string>(),    f.at("point").get<std::string>(),
                                                 f.at("n").get<long long>(),          f.at("expected").get<std::string>(),
                                                 f.at("actual").get<std::string>(),   f.at("note").get<std::string>()};
            r.suites.push_back(std::move(sr));
        }
        r.internal_inconsistencies = j.at("internal_inconsistencies").get<std::uint64_t>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace edpoly

#endif  // EDPOLY_JSON_IO_HPP

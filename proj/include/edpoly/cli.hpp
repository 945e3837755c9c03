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

// Command-line front end. Exit codes: 0 pass, 2 usage or invalid curve,
// 3 input outside the domain, 4 verification failure, 5 resource bound.

#ifndef EDPOLY_CLI_HPP
#define EDPOLY_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "curve.hpp"
#include "divpoly.hpp"
#include "errors.hpp"
#include "function_field.hpp"
#include "json_io.hpp"
#include "torsion_lab.hpp"
#include "weierstrass_ref.hpp"

namespace edpoly::cli {

enum ExitCode : int { kPass = 0, kUsage = 2, kDomain = 3, kMismatch = 4, kResource = 5 };

struct CliConfig {
    std::string subcommand;
    u64 p = 0, a = 0, d = 0, x = 0, y = 0;
    unsigned n = 0;
    std::string format = "text";
    std::uint64_t seed = 42;
    unsigned n_max = 0;
    std::string out;
    bool verify = false;
    bool quick = false;
    bool corrupt_psi3 = false;
};

namespace detail {

inline const CLI::Validator& decimal() {
    static const CLI::Validator v(
        [](std::string& s) -> std::string {
            const bool ok = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
            return ok ? std::string() : "'" + s + "' is not a nonnegative decimal integer";
        },
        "UINT");
    return v;
}

inline std::string point_text(const EdwardsPoint& P) { return P.to_string(); }

inline EdwardsCurve make_curve(const CliConfig& c) {
    const PrimeField f(c.p);
    return EdwardsCurve(f, f.from_unsigned(c.a), f.from_unsigned(c.d));
}

inline EdwardsPoint make_point(const CliConfig& c, const EdwardsCurve& C) {
    const PrimeField& f = C.field();
    const EdwardsPoint P{f.from_unsigned(c.x), f.from_unsigned(c.y)};
    if (!C.contains(P)) throw NotOnCurve("point " + P.to_string() + " is not on the curve");
    return P;
}

inline std::string term_text(const YPoly& poly, int k) {
    return YPoly::monomial(poly.coeff(static_cast<std::size_t>(k)), static_cast<std::size_t>(k)).to_string();
}

inline int cmd_psi(const CliConfig& c, std::ostream& out) {
    DivPolyTable table;
    const YPoly& psi = table.get(c.n);
    if (c.format == "json") {
        out << psi_to_json(c.n, psi).dump() << '\n';
        return kPass;
    }
    out << psi.to_string() << '\n';
    if (c.n >= 1) out << "m=" << m_of(c.n) << " k=" << k_of(c.n) << '\n';
    out << "degree=" << (psi.is_zero() ? -1 : psi.degree()) << '\n';
    if (!psi.is_zero()) {
        out << "leading: " << term_text(psi, psi.degree()) << '\n';
        out << "trailing: " << term_text(psi, psi.low_degree()) << '\n';
    }
    return kPass;
}

inline int cmd_eval(const CliConfig& c, std::ostream& out) {
    const EdwardsCurve C = make_curve(c);
    const EdwardsPoint P = make_point(c, C);
    SeriesTilde tilde(C, P, c.n);
    const FieldElem t = tilde(c.n);
    std::string psi = "undefined";
    try {
        SeriesTilde src(C, P, c.n);
        psi = std::to_string(psi_eval_with(src, c.n, C, P).value());
    } catch (const UndefinedAtPoint&) {
    }
    std::string ws = "undefined";
    const WeierstrassPoint Q = to_weierstrass(C, P);
    if (!Q.infinity) {
        try {
            WsDivTable T(WeierstrassCurve::from_edwards(C));
            ws = std::to_string(ws_psi_eval(T, c.n, Q).value());
        } catch (const ZeroDenominator&) {
        }
    }
    if (c.format == "json") {
        out << Json{{"n", c.n}, {"point", to_json(P)}, {"psi_tilde", t.value()}, {"psi", psi}, {"weierstrass_psi", ws}}.dump()
            << '\n';
    } else {
        out << "psi~_" << c.n << "(y) = " << t.value() << '\n';
        out << "psi_" << c.n << "(P) = " << psi << '\n';
        out << "Psi_" << c.n << "(u, v) = " << ws << '\n';
    }
    return kPass;
}

inline int cmd_mul(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const EdwardsCurve C = make_curve(c);
    const EdwardsPoint P = make_point(c, C);
    EdwardsPoint R;
    try {
        R = ed_mul_divpoly(C, P, c.n);
    } catch (const DenominatorZero& e) {
        err << "[" << c.n << "]" << P.to_string() << " lies outside the affine curve: " << e.what() << '\n';
        return kDomain;
    }
    Json j{{"input", to_json(P)}, {"n", c.n}, {"output", to_json(R)}, {"method", to_string(MulMethod::divpoly)}};
    std::string text = "[" + std::to_string(c.n) + "]" + P.to_string() + " = " + R.to_string() + "\n";
    int code = kPass;
    if (c.verify) {
        std::string oracle, name;
        try {
            oracle = ed_scalar_mul_naive(C, P, c.n).to_string();
            name = to_string(MulMethod::naive);
        } catch (const DenominatorZero&) {
            const EdwardsImage img = ed_mul_weierstrass_detour(C, P, c.n);
            oracle = std::holds_alternative<EdwardsPoint>(img) ? std::get<EdwardsPoint>(img).to_string() : "exceptional";
            name = to_string(MulMethod::weierstrass_detour);
        }
        const bool match = oracle == R.to_string();
        code = match ? kPass : kMismatch;
        j["oracle"] = name;
        j["oracle_output"] = oracle;
        j["verdict"] = match ? "MATCH" : "MISMATCH";
        text += name + ": " + oracle + "\n" + (match ? "MATCH" : "MISMATCH") + "\n";
    }
    out << (c.format == "json" ? j.dump() + "\n" : text);
    return code;
}

inline int cmd_torsion(const CliConfig& c, std::ostream& out) {
    const EdwardsCurve C = make_curve(c);
    const TorsionReport rep = torsion_scan(C, c.n_max);
    if (c.format == "json") {
        out << to_json(rep).dump() << '\n';
    } else {
        out << "curve p=" << rep.p << " a=" << rep.a << " d=" << rep.d << "  affine points " << rep.affine_points
            << "  group order " << rep.group_order << "  n <= " << rep.n_max << '\n';
        for (const auto& row : rep.rows) {
            std::string torsion;
            for (unsigned n = 1; n <= rep.n_max; ++n)
                if (row.verdicts[n - 1] == '1') torsion += (torsion.empty() ? "" : ",") + std::to_string(n);
            out << row.point.to_string() << "  order " << row.order << "  psi~_n(y) = 0 for n in {" << torsion << "}\n";
        }
        for (const auto& m : rep.mismatches)
            out << "MISMATCH " << m.point.to_string() << " n=" << m.n << " psi~ zero=" << m.tilde_zero
                << " order divides=" << m.order_divides << '\n';
        for (unsigned n : rep.count_mismatches) out << "COUNT MISMATCH n=" << n << '\n';
        out << (rep.all_passed() ? "consistent" : "inconsistent") << '\n';
    }
    return rep.all_passed() ? kPass : kMismatch;
}

inline int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
    CrosscheckConfig cfg = c.quick ? CrosscheckConfig::quick(c.seed) : CrosscheckConfig{};
    cfg.seed = c.seed;
    if (c.n_max) cfg.structure_n_max = c.n_max;
    cfg.corrupt_psi3 = c.corrupt_psi3;
    const CrosscheckReport rep = crosscheck(cfg);
    const Json j = to_json(rep);
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) {
            err << "cannot write " << c.out << '\n';
            return kUsage;
        }
        f << j.dump(2) << '\n';
    }
    if (c.format == "json") {
        out << j.dump() << '\n';
    } else {
        out << "seed " << cfg.seed << '\n';
        for (const auto& s : rep.suites) {
            out << s.name << ": " << s.checks << " checks, " << s.failures << " failures\n";
            if (s.first_failure) {
                const auto& f = *s.first_failure;
                out << "  first failure: " << f.note << " curve [" << f.curve << "] point " << f.point << " n=" << f.n
                    << " expected " << f.expected << " got " << f.actual << '\n';
            }
        }
        out << "internal inconsistencies: " << rep.internal_inconsistencies << '\n';
        out << (rep.all_passed() ? "PASS" : "FAIL") << '\n';
    }
    return rep.all_passed() ? kPass : kMismatch;
}

}  // namespace detail

/// Parses argv and runs one subcommand; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"Division polynomials on twisted Edwards curves", "edpoly-cli"};
    app.require_subcommand(1);
    const auto& dec = detail::decimal();

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_curve = [&](CLI::App* s) {
        s->add_option("--p", c.p, "Prime modulus")->required()->check(dec);
        s->add_option("--a", c.a, "Curve parameter a")->required()->check(dec);
        s->add_option("--d", c.d, "Curve parameter d")->required()->check(dec);
    };
    auto add_point = [&](CLI::App* s) {
        s->add_option("--x", c.x, "Point x-coordinate")->required()->check(dec);
        s->add_option("--y", c.y, "Point y-coordinate")->required()->check(dec);
    };

    CLI::App* psi = app.add_subcommand("psi", "Print psi~_n with its profile");
    psi->add_option("--n", c.n, "Index")->required()->check(dec);
    add_format(psi);

    CLI::App* eval = app.add_subcommand("eval", "Evaluate psi~_n, psi_n and Psi_n at a point");
    add_curve(eval);
    add_point(eval);
    eval->add_option("--n", c.n, "Index")->required()->check(dec);
    add_format(eval);

    CLI::App* mul = app.add_subcommand("mul", "Compute [n]P through the division polynomials");
    add_curve(mul);
    add_point(mul);
    mul->add_option("--n", c.n, "Scalar")->required()->check(dec);
    mul->add_flag("--verify", c.verify, "Compare with repeated addition");
    add_format(mul);

    CLI::App* tor = app.add_subcommand("torsion", "Scan every point and n against the point orders");
    add_curve(tor);
    tor->add_option("--n-max", c.n_max, "Largest n (default 2 * group order)")->check(dec);
    add_format(tor);

    CLI::App* ver = app.add_subcommand("verify", "Run the cross-check suites");
    ver->add_option("--seed", c.seed, "Generator seed")->check(dec);
    ver->add_option("--n-max", c.n_max, "Largest n for the structure suite")->check(dec);
    ver->add_flag("--quick", c.quick, "Reduced trial counts");
    ver->add_option("--out", c.out, "Write the JSON report to FILE");
    ver->add_flag("--corrupt-psi3", c.corrupt_psi3, "Negate psi~_3 before running (debug)");
    add_format(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (c.subcommand == "psi") return detail::cmd_psi(c, out);
        if (c.subcommand == "eval") return detail::cmd_eval(c, out);
        if (c.subcommand == "mul") return detail::cmd_mul(c, out, err);
        if (c.subcommand == "torsion") return detail::cmd_torsion(c, out);
        return detail::cmd_verify(c, out, err);
    } catch (const InvalidField& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const InvalidCurve& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const NotOnCurve& e) {
        err << e.what() << '\n';
        return kDomain;
    } catch (const UndefinedAtPoint& e) {
        err << e.what() << '\n';
        return kDomain;
    } catch (const FieldTooLarge& e) {
        err << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kMismatch;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"edpoly-cli"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace edpoly::cli

#endif  // EDPOLY_CLI_HPP

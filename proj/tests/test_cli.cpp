// Copyright 2026 The edpoly Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "edpoly/cli.hpp"

using namespace edpoly;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PsiText) {
    const CliRun r = run({"psi", "--n", "3", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "-d*y^4 - 2*d*y^3 + 2*a*y + a");
    EXPECT_NE(r.out.find("\nm=4 k=3\n"), std::string::npos);
    EXPECT_EQ(run({"psi", "--n", "0"}).out.substr(0, 2), "0\n");
}

TEST(Cli, PsiJson) {
    const CliRun r = run({"psi", "--n", "8", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["degree"], 30);
    EXPECT_EQ(j["m"], 31);
    DivPolyTable t;
    EXPECT_EQ(psi_from_json(j).poly, t.get(8));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"psi"}).code, 2);
    EXPECT_EQ(run({"psi", "--n", "-1"}).code, 2);
    EXPECT_EQ(run({"psi", "--n", "0x10"}).code, 2);
    EXPECT_EQ(run({"psi", "--n", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"mul", "--p", "15", "--a", "1", "--d", "2", "--x", "0", "--y", "1", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"psi", "--help"}).code, 0);
}

TEST(Cli, TorsionInvalidCurveMessage) {
    const CliRun r = run({"torsion", "--p", "13", "--a", "4", "--d", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("a and d must be distinct and non-zero"), std::string::npos);
}

TEST(Cli, TorsionScans) {
    EXPECT_EQ(run({"torsion", "--p", "29", "--a", "3", "--d", "7"}).code, 0);
    const CliRun one = run({"torsion", "--p", "13", "--a", "1", "--d", "2", "--n-max", "1", "--format", "json"});
    ASSERT_EQ(one.code, 0);
    for (const auto& row : Json::parse(one.out)["rows"]) EXPECT_EQ(row["verdicts"], "0");
    EXPECT_EQ(run({"torsion", "--p", "10007", "--a", "1", "--d", "2"}).code, 5);
}

TEST(Cli, MulVerify) {
    const CliRun echo = run({"mul", "--p", "13", "--a", "1", "--d", "2", "--x", "4", "--y", "9", "--n", "1", "--verify"});
    EXPECT_EQ(echo.code, 0);
    EXPECT_EQ(echo.out, "[1](4 : 9) = (4 : 9)\nnaive: (4 : 9)\nMATCH\n");
    for (unsigned n = 1; n <= 6; ++n) {
        const CliRun r = run({"mul", "--p", "13", "--a", "1", "--d", "2", "--x", "0", "--y", "12", "--n", std::to_string(n),
                           "--format", "json"});
        ASSERT_EQ(r.code, 0);
        EXPECT_EQ(Json::parse(r.out)["output"], Json::array({0, n % 2 ? 12 : 1}));
    }
    Rng rng(2024);
    const auto primes = primes_between(5, 1009);
    for (int t = 0; t < 30; ++t) {
        const PrimeField f(primes[rng() % primes.size()]);
        const EdwardsCurve C = random_curve(rng, f, CurveKind::complete);
        const auto P = random_point(rng, C);
        if (!P) continue;
        const CliRun r = run({"mul", "--p", std::to_string(f.modulus()), "--a", std::to_string(C.a().value()), "--d",
                           std::to_string(C.d().value()), "--x", std::to_string(P->x.value()), "--y",
                           std::to_string(P->y.value()), "--n", std::to_string(1 + rng() % 50), "--verify"});
        EXPECT_EQ(r.code, 0);
        EXPECT_NE(r.out.find("MATCH"), std::string::npos);
    }
}

TEST(Cli, MulOffCurve) {
    EXPECT_EQ(run({"mul", "--p", "13", "--a", "1", "--d", "2", "--x", "1", "--y", "1", "--n", "3"}).code, 3);
}

TEST(Cli, Eval) {
    const CliRun r = run({"eval", "--p", "13", "--a", "1", "--d", "2", "--x", "4", "--y", "9", "--n", "8", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["psi_tilde"], 0);
    EXPECT_EQ(j["psi"], "0");
    EXPECT_EQ(j["weierstrass_psi"], "0");
    const CliRun at_id = run({"eval", "--p", "13", "--a", "1", "--d", "2", "--x", "0", "--y", "1", "--n", "3"});
    EXPECT_EQ(at_id.code, 0);
    EXPECT_NE(at_id.out.find("psi_3(P) = undefined"), std::string::npos);
}

TEST(Cli, VerifyQuickAndCorrupted) {
    const std::string path = ::testing::TempDir() + "edpoly_report.json";
    const CliRun ok = run({"verify", "--quick", "--seed", "9", "--out", path});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
    std::ifstream f(path);
    const Json j = Json::parse(f);
    EXPECT_EQ(j["config"]["seed"], 9);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(to_json(report_from_json(j)), j);
    std::remove(path.c_str());

    const CliRun bad = run({"verify", "--quick", "--corrupt-psi3"});
    EXPECT_EQ(bad.code, 4);
    EXPECT_NE(bad.out.find("first failure"), std::string::npos);
}

TEST(Cli, Deterministic) {
    EXPECT_EQ(run({"verify", "--quick", "--format", "json"}).out, run({"verify", "--quick", "--format", "json"}).out);
}

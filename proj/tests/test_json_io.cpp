// Copyright 2026 The edpoly Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "edpoly/json_io.hpp"

using namespace edpoly;

namespace {

DivPolyTable& table() {
    static DivPolyTable t;
    return t;
}

}  // namespace

TEST(PsiJson, ThreeVerbatim) {
    const Json j = psi_to_json(3, table());
    EXPECT_EQ(j.dump(),
              R"({"n":3,"m":4,"k":3,"degree":4,"coeffs":[)"
              R"({"y":4,"terms":[{"a":0,"d":1,"c":"-1"}]},)"
              R"({"y":3,"terms":[{"a":0,"d":1,"c":"-2"}]},)"
              R"({"y":1,"terms":[{"a":1,"d":0,"c":"2"}]},)"
              R"({"y":0,"terms":[{"a":1,"d":0,"c":"1"}]}]})");
}

TEST(PsiJson, ZeroAndOne) {
    const Json z = psi_to_json(0, table());
    EXPECT_EQ(z["degree"], -1);
    EXPECT_TRUE(z["coeffs"].empty());
    EXPECT_EQ(psi_from_json(z).poly, YPoly());
    EXPECT_EQ(psi_from_json(psi_to_json(1, table())).poly, YPoly(1));
}

TEST(PsiJson, RoundTrip) {
    for (unsigned n = 0; n <= 24; ++n) {
        const Json j = psi_to_json(n, table());
        const PsiRecord r = psi_from_json(Json::parse(j.dump()));
        EXPECT_EQ(r.n, n);
        EXPECT_EQ(r.poly, table().get(n)) << n;
        EXPECT_EQ(psi_to_json(r.n, r.poly), j);
    }
}

TEST(PsiJson, TermOrdering) {
    const Json j = psi_to_json(9, table());
    int prev_y = 1 << 30;
    for (const auto& c : j["coeffs"]) {
        EXPECT_LT(c["y"].get<int>(), prev_y);
        prev_y = c["y"].get<int>();
        for (std::size_t i = 1; i < c["terms"].size(); ++i) {
            const auto& l = c["terms"][i - 1];
            const auto& r = c["terms"][i];
            EXPECT_TRUE(l["a"] > r["a"] || (l["a"] == r["a"] && l["d"] > r["d"]));
        }
    }
}

TEST(PsiJson, RejectsMalformedInput) {
    Json j = psi_to_json(5, table());
    Json bad_m = j;
    bad_m["m"] = 11;
    EXPECT_THROW(psi_from_json(bad_m), ParseError);
    Json bad_deg = j;
    bad_deg["degree"] = 13;
    EXPECT_THROW(psi_from_json(bad_deg), ParseError);
    Json bad_c = j;
    bad_c["coeffs"][0]["terms"][0]["c"] = "12x";
    EXPECT_THROW(psi_from_json(bad_c), ParseError);
    Json missing = j;
    missing.erase("coeffs");
    EXPECT_THROW(psi_from_json(missing), ParseError);
}

TEST(ReportJson, RoundTrip) {
    auto cfg = CrosscheckConfig::quick(5);
    cfg.torsion_curves.resize(2);
    cfg.corrupt_psi3 = true;
    const CrosscheckReport rep = crosscheck(cfg);
    const Json j = to_json(rep);
    EXPECT_EQ(j["config"]["seed"], 5);
    EXPECT_FALSE(j["passed"].get<bool>());
    const CrosscheckReport back = report_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, rep);
    EXPECT_THROW(report_from_json(Json::parse("{}")), ParseError);
}

TEST(TorsionJson, Shape) {
    const TorsionReport rep = torsion_scan(EdwardsCurve(13, 1, 2));
    const Json j = to_json(rep);
    EXPECT_EQ(j["p"], 13);
    EXPECT_EQ(j["rows"].size(), rep.rows.size());
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["rows"][0]["verdicts"].get<std::string>().size(), rep.n_max);
}

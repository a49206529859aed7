#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "dp1/dp1.hpp"

using namespace dp1;

#ifndef DP1_SOURCE_DIR
#define DP1_SOURCE_DIR "."
#endif

TEST_CASE("shipped instances load to the worked examples") {
    Instance e1 = load_instance(std::string(DP1_SOURCE_DIR) + "/data/example1.json");
    CHECK(e1.fibration.to_string() == "w^2 + z^3 + x^5*y + t^24*x*y^5");
    CHECK(e1.map.fwd == std::array<int, 4>{0, 6, 2, 3});
    CHECK(e1.map.inv == std::array<int, 4>{6, 0, 10, 15});

    Instance e3b = load_instance(std::string(DP1_SOURCE_DIR) + "/data/example3b.json");
    CHECK(e3b.fibration.to_string() ==
          "w^2 + z^3 - 3*z*x^2*y^2 + t*x^6 + 2*x^3*y^3 + t^7*y^6");
}

TEST_CASE("instance serialization round trip") {
    InstanceRng rng(211);
    for (int i = 0; i < 25; ++i) {
        Instance ins;
        CaseInstance ci = case_d_instance(rng);
        ins.fibration = ci.fibration;
        ins.map = ci.map;
        json j = instance_to_json(ins);
        Instance back = instance_from_json(j);
        CHECK(back.fibration == ins.fibration);
        CHECK(back.map.fwd == ins.map.fwd);
        CHECK(instance_to_json(back) == j);
    }
}

TEST_CASE("schema violations carry JSON-pointer paths") {
    json bad = {{"fibration", {{"f4", {"0", "0", "0", "0", "0"}},
                               {"f6", {"0", "1", "0", "0", "0", "t^24"}}}},
                {"map", {0, 6, 2, 3}}};
    try {
        instance_from_json(bad);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.pointer_path == "/fibration/f6");
    }

    json badcoeff = {{"fibration", {{"f4", {"0", "0", "0", "0", "0"}},
                                    {"f6", {"0", "1", "0", "0", "0", "t^-2", "0"}}}},
                     {"map", {0, 6, 2, 3}}};
    try {
        instance_from_json(badcoeff);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.pointer_path == "/fibration/f6/5");
    }

    // 2d != 3c is reported against the map with the weight condition named
    json badmap = {{"fibration", {{"f4", {"0", "0", "0", "0", "0"}},
                                  {"f6", {"0", "1", "0", "0", "0", "0", "0"}}}},
                   {"map", {0, 6, 1, 2}}};
    try {
        instance_from_json(badmap);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.pointer_path == "/map");
        CHECK(std::string(e.what()).find("(5)") != std::string::npos);
    }
}

TEST_CASE("emit and reload through a file is lossless") {
    Instance e1 = load_instance(std::string(DP1_SOURCE_DIR) + "/data/example1.json");
    std::string tmp = std::string(DP1_SOURCE_DIR) + "/build/tmp_instance.json";
    emit_json(instance_to_json(e1), tmp);
    Instance back = load_instance(tmp);
    CHECK(back.fibration == e1.fibration);
    CHECK(back.map.fwd == e1.map.fwd);
    std::remove(tmp.c_str());
}

TEST_CASE("map text parsing") {
    MonomialMap m = parse_map("0, 6, 2, 3");
    CHECK(m.m == 6);
    CHECK_THROWS_AS(parse_map("0,6,2"), MapError);
    CHECK_THROWS_AS(parse_map("a,b,c,d"), MapError);
    CHECK_THROWS_AS(parse_map("0,6,1,2"), MapError);
}

TEST_CASE("verify-paper subsets run deterministically") {
    VerifyOptions opt;
    opt.seed = 5;
    opt.population = 12;
    opt.case_d_population = 25;

    opt.filter = "S5.chain";
    auto r1 = run_verify_paper(opt);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].pass);

    opt.filter = "S4.example1.transform";
    auto r2 = run_verify_paper(opt);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].pass);
    CHECK(r2[0].got == "s^2 + r^3 + p^5*q + p*q^5");

    auto r2again = run_verify_paper(opt);
    CHECK(r2again[0].got == r2[0].got);

    // empty filter matching nothing gives an empty report
    opt.filter = "S9.nothing";
    CHECK(run_verify_paper(opt).empty());
}

TEST_CASE("verify-paper full report is deterministic under a fixed seed") {
    VerifyOptions opt;
    opt.seed = 17;
    opt.population = 20;
    opt.case_d_population = 40;
    json a = verify_report_to_json(run_verify_paper(opt));
    json b = verify_report_to_json(run_verify_paper(opt));
    CHECK(a == b);
    // claims arrive sorted by id
    for (std::size_t i = 1; i < a.size(); ++i)
        CHECK(a[i - 1]["id"].get<std::string>() < a[i]["id"].get<std::string>());
}

TEST_CASE("verify-paper catches a perturbed transform") {
    // the first worked transform with the image side perturbed by +x y^5
    Fibration X = Fibration::from_wpoly(parse_wpoly("w^2+z^3+x^5*y+x*y^5"));
    MonomialMap m = solve_weights({0, 6, 2, 3});
    TransformResult tr = detail::transform_attempt(X, m);
    CHECK(!tr.ok);
    REQUIRE(!tr.violations.empty());
    CHECK(tr.violations[0].required_deficit == 24);
    ConstraintReport cr = check_constraints(X, m);
    CHECK(!cr.pass);
}

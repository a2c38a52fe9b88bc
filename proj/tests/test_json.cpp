#include <doctest.h>

#include "bimahonian/distributions.hpp"
#include "bimahonian/json_io.hpp"
#include "bimahonian/sieving.hpp"
#include "bimahonian/verify.hpp"
#include "oracles.hpp"

using namespace bimahonian;

TEST_CASE("cyclotomic numbers round-trip through JSON") {
    std::mt19937 rng(11);
    for (int m : {1, 3, 4, 7, 12}) {
        for (int trial = 0; trial < 10; ++trial) {
            const CycloNum x = oracle::random_cyclo(rng, m);
            CHECK(cyclo_from_json(Json::parse(cyclo_to_json(x).dump())) == x);
        }
    }
    CHECK_THROWS_AS(cyclo_from_json(Json{{"m", 3}, {"coeffs", {"1"}}}), InvalidArgument);
    CHECK_THROWS_AS(cyclo_from_json(Json{{"m", 0}, {"coeffs", Json::array()}}), InvalidArgument);
}

TEST_CASE("polynomials round-trip through JSON") {
    const BiPoly p = bimahonian_fake(3, 2, GaloisAut(3, 2));
    const Json j = poly_to_json(p);
    CHECK(j["vars"] == Json::array({"t", "q"}));
    CHECK(poly_from_json(j) == p);
    const BiPoly z = BiPoly::monomial(CycloNum::root_of_unity(5, 2) + CycloNum(Rational(1, 3), 5), 2, 1);
    CHECK(poly_from_json(poly_to_json(z)) == z);
    CHECK(poly_to_json(BiPoly::monomial(CycloNum(Rational(-3, 4)), 1, 2))["terms"][0] == Json::array({1, 2, "-3/4"}));
    CHECK_THROWS_AS(poly_from_json(Json{{"vars", {"q", "t"}}, {"terms", Json::array()}}), InvalidArgument);
    CHECK_THROWS_AS(poly_from_json(Json{{"vars", {"t", "q"}}, {"terms", {{-1, 0, "1"}}}}), InvalidArgument);
}

TEST_CASE("shapes use display order") {
    const MultiPartition s({{2}, {1}});
    CHECK(shape_to_json(s) == Json::parse("[[1],[2]]"));
    CHECK(shape_from_json(shape_to_json(s)) == s);
}

TEST_CASE("documents carry the expected fields") {
    const Json r = rsk_to_json(parse_window(2, "2,-1"));
    CHECK(r["stats"]["w"]["fmaj"] == 3);
    CHECK(r["stats"]["Q"]["fmaj"] == 3);
    const RegularCertificate c = is_regular(parse_window(1, "2,3,1")).front();
    const Json cj = certificate_to_json(c);
    CHECK(cj["order"] == 3);
    CHECK(cj["witness"].size() == 3);
    const Json b = bicsp_report_to_json(check_bicsp(make_bicsp_instance(c, c, GaloisAut::identity(3))));
    CHECK(b["passed"] == true);
}

TEST_CASE("verification suites") {
    CHECK(suite_names().size() >= 8);
    CHECK_THROWS_AS(run_suite("nonsense"), InvalidArgument);
    VerifyConfig cfg;
    cfg.d = 5;
    const SuiteReport cyc = run_suite("cyclic", cfg);
    CHECK(cyc.passed());
    CHECK(cyc.checks.size() == 1);
    const Json j = suite_report_to_json(cyc);
    CHECK(j["checks"][0]["passed"] == true);
}

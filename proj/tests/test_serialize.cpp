#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ucalg/serialize.hpp"
#include "ucalg/symfunc.hpp"

using namespace ucalg;

TEST_CASE("polynomial round trip with rational coefficients") {
  PolyQ p = universal_character_jt(Partition::parse("2,1"), Partition::parse("1"), 5, 5);
  OJson j = poly_to_json(p);
  CHECK(j.at("cutoffs") == OJson::array({5, 5}));
  CHECK(j.at("coeff_domain") == "rational");
  CHECK(poly_q_from_json(j) == p);
  CHECK(j.dump() == poly_to_json(poly_q_from_json(j)).dump());
}

TEST_CASE("polynomial JSON term shape") {
  PolyQ p = PolyQ::one(RationalDomain{}, 3, 3)
                .times_var(VarFamily::X, 1, 2)
                .times_var(VarFamily::Y, 3, 1)
                .scaled(Rat(1, 2));
  OJson j = poly_to_json(p);
  REQUIRE(j.at("terms").size() == 1);
  const OJson& t = j.at("terms")[0];
  CHECK(t.at("x") == OJson{{"1", 2}});
  CHECK(t.at("y") == OJson{{"3", 1}});
  CHECK(t.at("c") == "1/2");
  CHECK(poly_to_json(PolyQ::one(RationalDomain{}, 2, 2)).at("terms")[0].at("x") ==
        OJson::object());
}

TEST_CASE("polynomial parser rejects malformed input") {
  OJson j = poly_to_json(PolyQ::one(RationalDomain{}, 2, 2));
  OJson bad = j;
  bad["coeff_domain"] = "series:t:4";
  CHECK_THROWS_AS(poly_q_from_json(bad), InvalidInput);
  bad = j;
  bad["terms"][0]["x"]["0"] = 1;
  CHECK_THROWS_AS(poly_q_from_json(bad), InvalidInput);
  bad = j;
  bad["terms"][0]["x"]["junk"] = 1;
  CHECK_THROWS_AS(poly_q_from_json(bad), InvalidInput);
  bad = j;
  bad["terms"][0]["x"]["7"] = 1;
  CHECK_THROWS_AS(poly_q_from_json(bad), CutoffExceeded);
  bad = j;
  bad.erase("cutoffs");
  CHECK_THROWS_AS(poly_q_from_json(bad), InvalidInput);
}

TEST_CASE("series-coefficient polynomial round trip") {
  SeriesDomain dom{"t", 4};
  PolyS p = PolyS::one(dom, 3, 3);
  p = p.scaled_coeff(TruncSeries::term("t", 4, 2, Rat(3)) + TruncSeries::constant("t", 4, 1));
  p = p + PolyS::one(dom, 3, 3).times_var(VarFamily::X, 2, 1);
  OJson j = poly_to_json(p);
  CHECK(j.at("coeff_domain") == "series:t:4");
  CHECK(poly_s_from_json(j) == p);
  OJson bad = j;
  bad["coeff_domain"] = "rational";
  CHECK_THROWS_AS(poly_s_from_json(bad), InvalidInput);
}

TEST_CASE("series maps keep exponents in numeric order") {
  TruncSeries s("t", 12);
  s.set_coeff(10, Rat(7));
  s.set_coeff(2, Rat(-1));
  s.set_coeff(0, Rat(1));
  OJson j = series_to_json(s);
  CHECK(j.dump() == "{\"0\":\"1\",\"2\":\"-1\",\"10\":\"7\"}");
  CHECK(series_from_json(j, "t", 12) == s);
  CHECK_THROWS_AS(series_from_json(j, "t", 6), InvalidInput);
}

TEST_CASE("state vector round trip") {
  FockVec v;
  v[OccState({1, 0, 2}, {0, 1})] = Rat(1, 3);
  v[OccState({3, 0, 0}, {1, 0})] = Rat(-2);
  OJson j = fock_to_json(v);
  CHECK(j.at("1,0,2|0,1") == "1/3");
  CHECK(fock_from_json(j) == v);
  OJson zero = j;
  zero["3,0,0|1,0"] = "0";
  CHECK(fock_from_json(zero).size() == 1);
  OJson bad = j;
  bad["junk"] = "1";
  CHECK_THROWS_AS(fock_from_json(bad), InvalidInput);
}

TEST_CASE("q-series renders as a coefficient array") {
  CHECK(qseries_to_json(macmahon_series(4)).dump() ==
        "[\"1\",\"1\",\"3\",\"6\",\"13\"]");
}

TEST_CASE("report JSON carries failing residuals only") {
  Report r;
  r.check = "demo";
  r.params["size"] = 2;
  r.add_case("a", true);
  r.add_case("b", false, "x1");
  OJson j = report_to_json(r);
  CHECK(j.at("check") == "demo");
  CHECK(j.at("inputs").at("size") == 2);
  CHECK(j.at("pass") == false);
  REQUIRE(j.at("residuals").size() == 1);
  CHECK(j.at("residuals")[0].at("input") == "b");
  CHECK(j.at("residuals")[0].at("residual") == "x1");
}

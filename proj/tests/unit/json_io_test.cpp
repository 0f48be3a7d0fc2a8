#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "novikov/json_io.hpp"

using namespace novikov;
using testing_support::lp;
using testing_support::mat;
using testing_support::one_cell_complex;

TEST_CASE("parse errors carry a location") {
  try {
    parse_json_text("{\n  \"a\": [1, 2,\n}", "input.json");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("input.json:3:") != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("scalars") {
  CHECK(integer_from_json(Json(12), "x") == 12);
  CHECK(integer_from_json(Json("123456789012345678901234567890"), "x") ==
        Integer("123456789012345678901234567890"));
  CHECK(rational_from_json(Json("-3/6"), "x") == Rational(-1, 2));
  CHECK(rational_to_json(Rational(3, 4)) == Json("3/4"));
  CHECK_THROWS_AS(rational_from_json(Json(0.5), "x"), ParseError);
  CHECK(class_from_json(Json::parse(R"({"weights": ["3/2", "1"]})"), "xi") ==
        CohomologyClass({Rational(3, 2), Rational(1)}));
}

TEST_CASE("group ring complexes round-trip") {
  auto x = one_cell_complex(lp({1, -2}, -1));
  JsonContext ctx;
  ctx.rank = 1;
  Json j = complex_to_json(x, ctx);
  CHECK(j["schema"] == kSchema);
  AnyComplex back = any_complex_from_json(parse_json_text(j.dump(), "round trip"));
  REQUIRE(std::holds_alternative<ChainComplex<GroupRingElement>>(back));
  CHECK(std::get<ChainComplex<GroupRingElement>>(back).d(1)(0, 0) == lp({1, -2}, -1));
  CHECK(any_complex_to_json(back, ctx).dump() == j.dump());
}

TEST_CASE("complex parsing rejects inconsistent input") {
  CHECK_THROWS_AS(any_complex_from_json(Json::parse(R"({"ring": "Q", "basis": [["a"], ["b"]], "differentials": []})")),
                  ParseError);
  CHECK_THROWS_AS(
      any_complex_from_json(Json::parse(R"({"ring": "Q", "basis": [["a"], ["b"]], "differentials": [[[1, 2]]]})")),
      ParseError);
  CHECK_THROWS_AS(any_complex_from_json(Json::parse(R"({"ring": "S", "basis": []})")), ParseError);
  CHECK_THROWS_AS(any_complex_from_json(Json::parse(R"({"schema": "other/2", "basis": []})")), ParseError);
  CHECK_THROWS_AS(any_complex_from_json(Json::parse(
                      R"({"rank": 2, "basis": [["a"], ["b"]], "differentials": [[[{"terms": [{"exp": [1], "coef": 1}]}]]]})")),
                  DimensionError);
}

TEST_CASE("rational and prime-field complexes") {
  auto q = any_complex_from_json(Json::parse(R"({"ring": "Q", "basis": [["a"], ["b"]], "differentials": [[["1/2"]]]})"));
  CHECK(std::get<ChainComplex<Rational>>(q).d(1)(0, 0) == Rational(1, 2));
  auto f = any_complex_from_json(
      Json::parse(R"({"ring": "Fp", "char": 5, "basis": [["a"], ["b"]], "differentials": [[[7]]]})"));
  CHECK(std::get<ChainComplex<Fp>>(f).d(1)(0, 0) == Fp(2, 5));
}

TEST_CASE("partitions, bundles and cut systems") {
  BlockPartition p = partition_from_json(Json::parse(R"({"blocks": [["D", "C"], ["D'", "C"]]})"));
  CHECK(p.blocks[1][0] == Block::DPrime);
  CHECK_THROWS_AS(partition_from_json(Json::parse(R"({"blocks": [["X"]]})")), ParseError);

  MonodromyRep e = bundle_from_json(Json::parse(R"({"dim": 2, "matrices": [[[0, 1], [1, 0]]]})"));
  CHECK(e.dim() == 2);
  CHECK(bundle_from_json(Json::parse(R"({"values": ["1/2"]})")).image({1})(0, 0) == Rational(1, 2));

  CutSystem cs = cut_system_from_json(Json::parse(R"({
    "r": 1, "xi": {"weights": ["1"]},
    "strata_cells": [{"label": "v", "dim": 0, "alpha": [1]}],
    "incidence": [{"cell": "v", "i": 1, "targets": [{"cell": "v", "coef": {"terms": [{"exp": [-1], "coef": 1}]}}]}]
  })"));
  CHECK(cs.r == 1);
  REQUIRE(cs.incidence.size() == 1);
  CHECK(cs.incidence[0].targets[0].second == lp({1}, -1));
}

TEST_CASE("polynomial syntax is highest degree first") {
  auto c = candidate_from_text("1, -3, 1");
  CHECK(c.coefficients == std::vector<Integer>{1, -3, 1});
  CHECK(int_poly_to_json(c.polynomial()) == Json::parse("[1, -3, 1]"));
  CHECK(int_poly_from_json(Json::parse("[2, -1]"), "p") == testing_support::poly({2, -1}));
  CHECK_THROWS_AS(candidate_from_text("1,,2"), ParseError);
  CHECK_THROWS_AS(candidate_from_text("1,x"), ParseError);
}

TEST_CASE("reports") {
  NovikovNumbers n{{0, 0}, std::vector<std::size_t>{1, 0}};
  Json j = numbers_to_json(n);
  NovikovNumbers back = numbers_from_json(j);
  CHECK(back.b == n.b);
  CHECK(back.q == n.q);
  Json checks = checks_to_json(check_novikov_inequalities({1, 1}, n));
  CHECK(checks[0]["verdict"] == "pass");
  CHECK(checks[0]["slack"] == "0");
}

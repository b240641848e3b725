#include "digbin/report.hpp"
#include "doctest.h"

using namespace digbin;
using namespace digbin::report;

TEST_CASE("matrix emission") {
  const auto s = build_matrix(MatrixKind::S, 2, 2, kDefaultCap, std::nullopt);
  CHECK(to_json(s) == json::parse(R"([["1","0","0","0"],["x","1","0","0"],["x","0","1","0"],["x^2","x","x","1"]])"));

  const auto u = build_matrix(MatrixKind::U, 2, 1, kDefaultCap, std::nullopt);
  CHECK(to_json(u) == json::parse(R"([["1","-1"],["1","0"]])"));

  const auto s31 = build_matrix(MatrixKind::S, 3, 1, kDefaultCap, Rational(1));
  CHECK(to_csv(std::get<RationalMatrix>(s31)) == "1,0,0\n1,1,0\n1,1,1\n");

  const auto x = build_matrix(MatrixKind::X, 3, 1, kDefaultCap, std::nullopt);
  CHECK(to_json(x)[2][0] == "(1/2)*x");
  const auto xh = build_matrix(MatrixKind::X, 3, 1, kDefaultCap, Rational::parse("1/3"));
  CHECK(to_json(xh)[2][0] == "1/6");

  CHECK(to_text(u) == " 1  -1\n 1   0\n");
  CHECK(parse_kind("V") == MatrixKind::V);
  CHECK_THROWS_AS(parse_kind("Q"), std::invalid_argument);
  CHECK_THROWS_AS(build_matrix(MatrixKind::M, 2, 13, kDefaultCap, std::nullopt), CapExceeded);
}

TEST_CASE("verification suites") {
  SuiteConfig c{3, 1};
  const auto rel = run_suite("relations", c);
  bool saw_braid = false;
  for (const auto& check : rel) {
    CHECK(passed(check));
    if (check.name == "braid-relation") {
      saw_braid = true;
      CHECK(check.status == Status::ExpectedFail);
      CHECK(check.witness["row"] == 0);
      CHECK(check.witness["col"] == 2);
    } else {
      CHECK(check.status == Status::Pass);
    }
  }
  CHECK(saw_braid);
  const auto rep = suite_report("relations", c, rel);
  CHECK(rep["all_passed"] == true);
  CHECK(rep["checks"].size() == rel.size());

  for (const auto& check : run_suite("all", SuiteConfig{2, 3})) {
    INFO(check.name);
    CHECK(check.status == Status::Pass);
  }
  for (const auto& check : run_suite("all", SuiteConfig{3, 2})) {
    INFO(check.name);
    CHECK(passed(check));
  }
  CHECK_THROWS_AS(run_suite("bogus", c), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("exp", SuiteConfig{2, 13}), CapExceeded);
}

TEST_CASE("failing check is reported") {
  std::vector<Check> checks{{"a", 2, 1, Status::Pass, nullptr}, {"b", 2, 1, Status::Fail, json{{"n", 3}}}};
  const auto rep = suite_report("x", SuiteConfig{}, checks);
  CHECK(rep["all_passed"] == false);
  CHECK(rep["checks"][1]["witness"]["n"] == 3);
  CHECK_FALSE(rep["checks"][0].contains("witness"));
}

TEST_CASE("ptm and prouhet reports") {
  const auto rep = ptm_report(3, ptm::ZeroSumVector::parse("1,-1"));
  CHECK(rep["equal"] == true);
  CHECK(rep["c_coefficients"][0] == "1");
  CHECK(rep["f_coefficients"].size() == 8);

  const auto pr = prouhet_report(2, 2, kDefaultCap);
  CHECK(pr["sets"][0] == json::parse("[0,3,5,6]"));
  CHECK(pr["power_sums"][2][1] == "70");
  CHECK(pr["equal"] == true);
}

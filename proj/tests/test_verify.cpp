#include "annarc/verify.hpp"
#include "doctest.h"

using namespace annarc;

TEST_CASE("seam loops") {
  auto loops = seam_loops(from_signs("+-"), from_signs("-+"));
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].first == std::vector<int>{1, 2});
  CHECK(loops[0].second == LoopClass::Essential);
  auto two = seam_loops(from_signs("++--"), from_signs("++--"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].first == std::vector<int>{1, 4});
  CHECK(two[1].second == LoopClass::Trivial);
}

TEST_CASE("suites at small n") {
  VerifyOptions opt;
  opt.n = 1;
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    SuiteReport r = run_suite(name, opt);
    CHECK(r.passed);
    CHECK(r.report["failures"] == 0);
    CHECK(r.report["suite"] == name);
  }
  CHECK(verify_relations({.n = 4}).report["instances"].get<int>() > 100);
  CHECK_THROWS_AS(run_suite("nope", opt), std::invalid_argument);
}

TEST_CASE("associativity report") {
  SuiteReport r = verify_associativity({.n = 1});
  CHECK(r.report["quadruples"] == 16);
  CHECK(r.report["degree"]["inhomogeneous"] == 0);
  CHECK(r.report["examples"].empty());
  CHECK(verify_associativity({.n = 1, .coaction = Coaction::Homogeneous}).passed);
}

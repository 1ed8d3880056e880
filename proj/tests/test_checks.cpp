#include <doctest.h>

#include "nilint/checks.hpp"
#include "nilint/errors.hpp"

using namespace nilint;

TEST_SUITE("checks") {
  TEST_CASE("sampler is deterministic") {
    Sampler a(9), b(9);
    for (int i = 0; i < 50; ++i) REQUIRE(a.gp_elem() == b.gp_elem());
  }

  TEST_CASE("every suite passes") {
    for (const auto& r : run_check("all", 42, 100)) {
      INFO(r.suite << ": " << r.counterexample.value_or(""));
      CHECK(r.ok());
      CHECK(r.passed == 100);
      CHECK(r.total == 100);
    }
  }

  TEST_CASE("reports") {
    auto r = run_suite("geometry", 3, 0);
    CHECK(r.ok());
    CHECK(r.total == 0);
    CHECK(run_check("all", 1, 1).size() == suite_names().size());
    CHECK_THROWS_AS(run_suite("nope", 1, 1), UsageError);
  }
}

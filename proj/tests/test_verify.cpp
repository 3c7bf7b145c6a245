#include "cpsplit/verify.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using namespace cpsplit;

TEST_CASE("all property suites pass") {
  for (const SuiteReport& r : run_suites("all")) {
    for (const CheckResult& c : r.checks) {
      INFO(r.suite << ": " << c.name << " worst=" << c.worst << " tol=" << c.tolerance << " " << c.detail);
      CHECK(c.pass);
      CHECK(c.samples > 0);
    }
  }
}

TEST_CASE("suites are reproducible for a fixed seed") {
  std::ostringstream a, b;
  for (const SuiteReport& r : run_suites("algebra", 99)) print_report(a, r);
  for (const SuiteReport& r : run_suites("algebra", 99)) print_report(b, r);
  CHECK(a.str() == b.str());
  CHECK_FALSE(a.str().empty());
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suites("speed"), std::invalid_argument);
  CHECK(run_suites("oracle").size() == 1);
  CHECK(run_suites("all").size() == 3);
}

#include <doctest.h>

#include "helpers.hpp"
#include "lfuzz/suites.hpp"

using namespace lfuzz;
using namespace lfuzz::test;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.lattice = l3();
  cfg.max_x = 2;
  cfg.seed = 5;
  return cfg;
}

}  // namespace

TEST_CASE("registry is sorted and closed under lookups") {
  const auto ids = suite_ids();
  CHECK(ids.size() >= 20);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  for (const auto& id : ids) CHECK(is_suite_id(id));
  CHECK_FALSE(is_suite_id("prop-nope"));
  CHECK_THROWS_AS(run_suite("prop-nope", small_config()), std::invalid_argument);
}

TEST_CASE("every suite passes on a small configuration") {
  const SuiteConfig cfg = small_config();
  for (const auto& id : suite_ids()) {
    const SuiteResult result = run_suite(id, cfg);
    CAPTURE(id);
    if (const CheckResult* failure = result.report.first_failure()) {
      CAPTURE(failure->name);
      CAPTURE(failure->witness);
    }
    CHECK(result.report.passed());
  }
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
  const SuiteConfig cfg = small_config();
  const SuiteResult a = run_suite("prop-category-lspacefp", cfg);
  const SuiteResult b = run_suite("prop-category-lspacefp", cfg);
  REQUIRE(a.report.checks().size() == b.report.checks().size());
  for (std::size_t i = 0; i < a.report.checks().size(); ++i) {
    CHECK(a.report.checks()[i].name == b.report.checks()[i].name);
    CHECK(a.report.checks()[i].passed == b.report.checks()[i].passed);
    CHECK(a.report.checks()[i].witness == b.report.checks()[i].witness);
  }
}

TEST_CASE("a tight budget raises the quantifier error") {
  SuiteConfig cfg;
  cfg.lattice = l5();
  cfg.max_x = 3;
  cfg.quant.budget = 10;  // 125 functions needed
  CHECK_THROWS_AS(run_suite("prop-qua-embed-pretop", cfg), QuantifierBudgetError);
}

TEST_CASE("run_suites expands 'all' and sorts ids") {
  SuiteConfig cfg = small_config();
  const std::vector<std::string> all = {"all"};
  const auto results = run_suites(all, cfg);
  CHECK(results.size() == suite_ids().size());
  const std::vector<std::string> two = {"prop-fig2", "prop-contravariance"};
  const auto pair = run_suites(two, cfg);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].id == "prop-contravariance");
  CHECK(pair[1].id == "prop-fig2");
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "engelgraph/suites.hpp"

using namespace engelgraph;

TEST_SUITE("suites") {
  TEST_CASE("registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 17);
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    CHECK(names.front() == "classification");
    CHECK(names.back() == "invariants");
    Workbench wb({Tier::Fast, 1, std::nullopt});
    CHECK_THROWS_AS(run_suite("no-such-suite", wb), std::invalid_argument);
    CHECK_THROWS_AS(run_suites("no-such-suite", {}), std::invalid_argument);
  }

  TEST_CASE("claims carry anchors and sorted ids") {
    Workbench wb({Tier::Fast, 1, std::nullopt});
    for (const char* name : {"alt-identity", "chain", "theta", "quotient"}) {
      SuiteResult r = run_suite(name, wb);
      INFO(name);
      CHECK(r.suite == name);
      REQUIRE_FALSE(r.claims.empty());
      CHECK(std::is_sorted(r.claims.begin(), r.claims.end(),
                           [](const Claim& a, const Claim& b) { return a.id < b.id; }));
      for (const auto& c : r.claims) {
        CHECK_FALSE(c.anchor.empty());
        CHECK(c.id.rfind(std::string(name), 0) == 0);
      }
    }
    SuiteResult alt = run_suite("alt-identity", wb);
    REQUIRE(alt.claims.size() == 3);
    for (const auto& c : alt.claims) {
      CHECK(c.status == ClaimStatus::Pass);
      CHECK(c.anchor == "(1,5,3)(2,4,6)");
      CHECK(c.measured["commutator"] == "(1,5,3)(2,4,6)");
    }
    CHECK_FALSE(alt.failed());
  }

  TEST_CASE("budget skips instead of failing") {
    Workbench wb({Tier::Fast, 1, std::uint64_t{1000}});
    SuiteResult r = run_suite("classification", wb);
    std::size_t skipped = 0;
    for (const auto& c : r.claims) {
      if (c.status == ClaimStatus::Skipped) {
        ++skipped;
        CHECK(c.reason == "full graph beyond arc-test budget");
        CHECK(status_text(c) == "skipped(full graph beyond arc-test budget)");
      }
    }
    CHECK(skipped > 0);
    CHECK_FALSE(r.failed());
  }

  TEST_CASE("report formats and exit code") {
    Claim pass{"x/a", "anchor", ClaimStatus::Pass, "", 1, 2};
    Claim fail{"x/b", "anchor", ClaimStatus::Fail, "", 3, 2};
    Claim skip{"x/c", "anchor", ClaimStatus::Skipped, "no instance in catalog", nullptr, nullptr};
    std::vector<SuiteResult> ok{{"x", {pass, skip}}};
    std::vector<SuiteResult> bad{{"x", {pass, fail, skip}}};
    CHECK(exit_code(ok) == 0);
    CHECK(exit_code(bad) == 1);
    CHECK(status_text(fail) == "fail");
    nlohmann::json j = to_json(bad, Tier::Fast);
    CHECK(j["tier"] == "fast");
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["skipped"] == 1);
    CHECK(j["suites"][0]["claims"][2]["status"] == "skipped(no instance in catalog)");
    std::string text = to_text(bad, Tier::Fast);
    CHECK(text.find("summary: 1 pass, 1 fail, 1 skipped") != std::string::npos);
  }

  TEST_CASE("suite output does not depend on worker count") {
    VerifyOptions one{Tier::Fast, 1, std::nullopt}, three{Tier::Fast, 3, std::nullopt};
    for (const char* name : {"classification", "table1"}) {
      INFO(name);
      CHECK(to_json(run_suites(name, one), Tier::Fast).dump() == to_json(run_suites(name, three), Tier::Fast).dump());
    }
  }
}

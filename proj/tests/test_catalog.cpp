#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "engelgraph/catalog.hpp"
#include "engelgraph/structure.hpp"

using namespace engelgraph;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("engelgraph_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("constructions") {
    CHECK(build(symmetric_spec(4)).order() == 24);
    Group l27 = build(psl2_spec(7));
    CHECK(l27.order() == 168);
    CHECK(l27.degree() == 8);
    Group f20 = build(agl1_spec(5));
    CHECK(f20.order() == 20);
    CHECK(is_frobenius(f20).has_value());
    CHECK(build(dihedral_spec(10)).order() == 10);
    CHECK(build(direct_product_spec(cyclic_spec(2), symmetric_spec(4))).order() == 48);
    CHECK(build(psl2_spec(13)).order() == 1092);
    CHECK_THROWS_AS(build(psl2_spec(9)), std::invalid_argument);
  }

  TEST_CASE("shipped group files") {
    Group m11 = load_group_file(data_dir() + "/m11.json");
    CHECK(m11.order() == 7920);
    CHECK(is_simple(m11));
    Group l28 = load_group_file(data_dir() + "/psl2_8.json");
    CHECK(l28.order() == 504);
    CHECK(is_simple(l28));
  }

  TEST_CASE("rejected group files") {
    auto truncated = write_temp("truncated.json", "{\n  \"name\": \"x\",\n  \"degree\": 3,\n  \"generators\": [[1,0,2]");
    CHECK_THROWS_WITH_AS(load_group_file(truncated), doctest::Contains("parse error"), std::invalid_argument);
    auto degree = write_temp("degree.json",
                             R"({"name":"x","degree":4,"generators":[[1,0,2]],"expected_order":2,"simple":false})");
    CHECK_THROWS_AS(load_group_file(degree), std::invalid_argument);
    auto range = write_temp("range.json",
                            R"({"name":"x","degree":3,"generators":[[1,0,3]],"expected_order":2,"simple":false})");
    CHECK_THROWS_AS(load_group_file(range), std::invalid_argument);
    auto order = write_temp("order.json",
                            R"({"name":"x","degree":3,"generators":[[1,0,2]],"expected_order":6,"simple":false})");
    CHECK_THROWS_WITH_AS(load_group_file(order), doctest::Contains("expected_order"), std::invalid_argument);
    auto simple = write_temp("simple.json",
                             R"({"name":"x","degree":3,"generators":[[1,2,0],[1,0,2]],"expected_order":6,"simple":true})");
    CHECK_THROWS_WITH_AS(load_group_file(simple), doctest::Contains("simple"), std::invalid_argument);
    auto good = write_temp("good.json",
                           R"({"name":"S3","degree":3,"generators":[[1,2,0],[1,0,2]],"expected_order":6,"simple":false})");
    CHECK(load_group_file(good).order() == 6);
    CHECK_THROWS_AS(load_group_file("/nonexistent/group.json"), std::invalid_argument);
  }

  TEST_CASE("catalog contents and tiers") {
    auto all = standard_catalog();
    auto fast = catalog_tier(Tier::Fast);
    auto slow = catalog_tier(Tier::Slow);
    auto targeted = catalog_tier(Tier::Targeted);
    CHECK(fast.size() + slow.size() + targeted.size() == all.size());
    for (const auto& s : fast) {
      INFO(s.name);
      Group g = build(s);
      REQUIRE(g.order() <= 2520);
      if (s.expected_order) REQUIRE(g.order() == *s.expected_order);
    }
    for (const char* name : {"C2", "C12", "D8", "D10", "D12", "Q8", "S3", "S6", "A4", "A7", "AGL1(5)", "AGL1(7)",
                             "SL(2,3)", "C2xS4", "PSL2(5)", "PSL2(7)", "PSL2(11)", "PSL2(13)", "PSL2(8)", "PSL2(9)"})
      CHECK(std::any_of(fast.begin(), fast.end(), [&](const GroupSpec& s) { return s.name == name; }));
    CHECK(slow.size() == 2);
    REQUIRE(targeted.size() == 1);
    CHECK(targeted[0].name == "Sz(8)");
    CHECK(parse_tier("slow") == Tier::Slow);
    CHECK_THROWS_AS(parse_tier("medium"), std::invalid_argument);
  }

  TEST_CASE("name resolution") {
    CHECK(find_spec("S7").value().parameter == 7);
    CHECK(find_spec("Alt(8)").value().construction == Construction::Alternating);
    CHECK(find_spec("PSL2(17)").value().construction == Construction::PSL2);
    CHECK(find_spec("AGL1(11)").value().construction == Construction::AGL1);
    CHECK_FALSE(find_spec("Monster"));
    CHECK(resolve_group("M11").order() == 7920);
    CHECK(resolve_group("D14").order() == 14);
    CHECK_THROWS_AS(resolve_group("no-such-group"), std::invalid_argument);
  }
}

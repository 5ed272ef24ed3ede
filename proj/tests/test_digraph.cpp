#include <doctest.h>

#include <regex>
#include <set>
#include <sstream>

#include "engelgraph/catalog.hpp"
#include "engelgraph/digraph.hpp"
#include "engelgraph/engel.hpp"
#include "oracles.hpp"

using namespace engelgraph;

namespace {

Digraph make(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> arcs) {
  std::vector<ElementId> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<ElementId>(i);
  Digraph d(v, GraphKind::Delta);
  for (auto [a, b] : arcs) d.add_arc(a, b);
  return d;
}

std::string plain(ElementId x) { return std::to_string(x); }

}  // namespace

TEST_SUITE("digraph") {
  TEST_CASE("strong components") {
    auto cycle = make(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(scc(cycle).component_count == 1);
    CHECK(scc(cycle).strongly_connected);
    auto two = make(2, {});
    CHECK(scc(two).component_count == 2);
    CHECK_FALSE(scc(two).strongly_connected);
    CHECK(scc(make(0, {})).degenerate);
    CHECK(scc(make(1, {})).degenerate);
    CHECK(scc(build_gamma(build(symmetric_spec(3)))).component_count > 1);
  }

  TEST_CASE("diameters") {
    auto cycle = make(3, {{0, 1}, {1, 2}, {2, 0}});
    auto d = diameter(cycle);
    CHECK(d.diameter == std::optional<std::uint32_t>(2));
    CHECK(d.witness == std::optional<std::pair<std::size_t, std::size_t>>({0, 2}));
    auto complete = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}, {3, 2}});
    CHECK(diameter(complete).diameter == std::optional<std::uint32_t>(1));
    CHECK_FALSE(diameter(make(2, {{0, 1}})).diameter);
    auto empty = diameter(make(0, {}));
    CHECK(empty.degenerate);
    CHECK(empty.diameter == std::optional<std::uint32_t>(0));
  }

  TEST_CASE("Gamma(S4) diameter against matrix powers") {
    Digraph d = build_gamma(build(symmetric_spec(4)));
    auto dist = oracle::matrix_power_distances(d);
    int worst = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto bfs = bfs_distances(d, i);
      for (std::size_t j = 0; j < d.size(); ++j) {
        REQUIRE(bfs[j] == dist[i][j]);
        REQUIRE((dist[i][j] == 1) == d.has_arc(i, j));
        worst = std::max(worst, dist[i][j]);
      }
    }
    auto r = diameter(d);
    REQUIRE(r.diameter);
    CHECK(static_cast<int>(*r.diameter) == worst);
    CHECK(*r.diameter <= 4);
    CHECK(*r.diameter == 3);
  }

  TEST_CASE("distance laws on a catalog graph") {
    Digraph d = build_gamma(build(find_spec("C2xS4").value()));
    std::vector<std::vector<std::int32_t>> dist;
    for (std::size_t i = 0; i < d.size(); ++i) dist.push_back(bfs_distances(d, i));
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) {
        REQUIRE((dist[i][j] == 1) == d.has_arc(i, j));
        for (std::size_t k = 0; k < d.size(); k += 3)
          if (dist[i][k] >= 0 && dist[k][j] >= 0) REQUIRE(dist[i][j] <= dist[i][k] + dist[k][j]);
      }
  }

  TEST_CASE("serial and parallel eccentricities agree") {
    Digraph d = build_gamma(build(alternating_spec(6)));
    auto a = diameter(d, 1), b = diameter(d, 4);
    CHECK(a.eccentricities == b.eccentricities);
    CHECK(a.diameter == b.diameter);
    CHECK(a.witness == b.witness);
  }

  TEST_CASE("finite diameter iff strongly connected") {
    for (const auto& spec : catalog_tier(Tier::Fast)) {
      Digraph d = build_gamma(build(spec));
      auto c = scc(d);
      if (c.degenerate) continue;
      INFO(spec.name);
      REQUIRE(diameter(d).diameter.has_value() == c.strongly_connected);
    }
  }

  TEST_CASE("undirected components") {
    auto path = make(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    auto comps = undirected_components(path);
    REQUIRE(comps.size() == 1);
    CHECK(component_diameter(path, comps[0]) == 2);
    CHECK_THROWS_AS(undirected_components(make(2, {{0, 1}})), std::invalid_argument);

    Group a5 = build(alternating_spec(5));
    Digraph c = build_commuting(a5);
    auto parts = undirected_components(c);
    std::multiset<std::size_t> sizes;
    for (const auto& p : parts) {
      sizes.insert(p.size());
      bool odd = true;
      for (auto v : p)
        if (a5.element_order(c.vertices()[v]) % 2 == 0) odd = false;
      if (odd) CHECK(component_diameter(c, p) == 1);
    }
    // Five Sylow 2-subgroups, ten Sylow 3-subgroups and six Sylow 5-subgroups, each a clique.
    CHECK(sizes == std::multiset<std::size_t>{2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4});
    // A symmetric graph: directed and undirected analyses agree.
    CHECK(scc(c).component_count == parts.size());
  }

  TEST_CASE("DOT export") {
    std::string empty = export_dot(make(0, {}), plain);
    CHECK(empty == "digraph \"delta\" {\n}\n");
    std::string two = export_dot(make(2, {{1, 0}, {0, 1}}), plain);
    CHECK(two.find("  0 -> 1;\n  1 -> 0;\n") != std::string::npos);

    Group s3 = build(symmetric_spec(3));
    Digraph d = build_gamma(s3);
    std::string text = export_dot(d, [&](ElementId x) { return s3.element(x).to_cycles(); });
    std::regex node(R"(^  (\d+) \[label=)"), edge(R"(^  (\d+) -> (\d+);$)");
    std::set<ElementId> nodes;
    std::set<std::pair<ElementId, ElementId>> parsed, expected;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      std::smatch m;
      if (std::regex_search(line, m, node)) nodes.insert(static_cast<ElementId>(std::stoul(m[1])));
      if (std::regex_match(line, m, edge))
        parsed.insert({static_cast<ElementId>(std::stoul(m[1])), static_cast<ElementId>(std::stoul(m[2]))});
    }
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d.has_arc(i, j)) expected.insert({d.vertices()[i], d.vertices()[j]});
    CHECK(nodes.size() == 5);
    CHECK(parsed == expected);
    CHECK(export_dot(build_commuting(s3), plain).rfind("graph ", 0) == 0);
  }
}

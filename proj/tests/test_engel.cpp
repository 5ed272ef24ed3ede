#include <doctest.h>

#include <set>

#include "engelgraph/catalog.hpp"
#include "engelgraph/engel.hpp"
#include "engelgraph/structure.hpp"
#include "oracles.hpp"

using namespace engelgraph;

namespace {

ElementId id(const Group& g, const char* text) { return g.id_of(Permutation::from_cycles(text, g.degree())); }

std::set<ElementId> ids_of(const Subgroup& h) { return {h.ids().begin(), h.ids().end()}; }

}  // namespace

TEST_SUITE("engel") {
  TEST_CASE("Engel traces in S3") {
    Group s3 = build(symmetric_spec(3));
    auto t = engel_trace(s3, id(s3, "(1,2)"), id(s3, "(1,2,3)"));
    CHECK(t.outcome == TraceOutcome::ReachesIdentity);
    CHECK(t.depth == 2);
    REQUIRE(t.sequence.size() >= 2);
    CHECK(s3.element(t.sequence[1]).to_cycles() == "(1,3,2)");

    auto u = engel_trace(s3, id(s3, "(1,2,3)"), id(s3, "(1,2)"));
    CHECK(u.outcome == TraceOutcome::EntersCycle);
    CHECK(u.cycle_length == 1);
    CHECK_FALSE(is_arc(s3, id(s3, "(1,2,3)"), id(s3, "(1,2)")));
    CHECK(arc_depth(s3, id(s3, "(1,2)"), id(s3, "(1,2,3)")) == std::optional<std::size_t>(2));
    CHECK_FALSE(arc_depth(s3, id(s3, "(1,2,3)"), id(s3, "(1,2)")));

    for (ElementId x = 0; x < s3.order(); ++x) {
      auto w = engel_trace(s3, x, kIdentity);
      CHECK(w.outcome == TraceOutcome::ReachesIdentity);
      CHECK(w.depth == (x == kIdentity ? 0u : 1u));
    }
  }

  TEST_CASE("commuting pairs are depth-1 arcs both ways") {
    Group c2s4 = build(find_spec("C2xS4").value());
    for (ElementId x = 1; x < c2s4.order(); x += 5)
      for (ElementId y = 1; y < c2s4.order(); ++y)
        if (x != y && c2s4.commute(x, y)) {
          REQUIRE(arc_depth(c2s4, x, y) == std::optional<std::size_t>(1));
          REQUIRE(arc_depth(c2s4, y, x) == std::optional<std::size_t>(1));
        }
  }

  TEST_CASE("memoized depth columns match naive iteration") {
    for (auto spec : {symmetric_spec(4), agl1_spec(5), alternating_spec(5)}) {
      Group g = build(spec);
      for (ElementId y = 0; y < g.order(); ++y) {
        auto col = engel_depths_into(g, y);
        auto iy = oracle::images(g.element(y));
        for (ElementId x = 0; x < g.order(); ++x) {
          std::size_t naive = x == kIdentity ? 0 : oracle::engel_depth(oracle::images(g.element(x)), iy, g.order());
          INFO(spec.name << " x=" << x << " y=" << y);
          if (naive == 0 && x != kIdentity) {
            REQUIRE(col[x] == -1);
          } else {
            REQUIRE(col[x] == static_cast<std::int32_t>(naive));
          }
          REQUIRE(is_arc(g, x, y) == (naive > 0 || x == kIdentity));
        }
      }
    }
  }

  TEST_CASE("trace determinism and depth bound") {
    Group s4 = build(symmetric_spec(4));
    for (ElementId x = 0; x < s4.order(); ++x)
      for (ElementId y = 0; y < s4.order(); ++y) {
        auto a = engel_trace(s4, x, y), b = engel_trace(s4, x, y);
        REQUIRE(a.sequence == b.sequence);
        REQUIRE(a.depth <= s4.order());
      }
  }

  TEST_CASE("I_n") {
    Group s3 = build(symmetric_spec(3));
    CHECK(engel_class_in(s3, 1) == std::vector<ElementId>{kIdentity});
    Group c2s4 = build(find_spec("C2xS4").value());
    auto i1 = engel_class_in(c2s4, 1);
    CHECK(std::set<ElementId>(i1.begin(), i1.end()) == ids_of(center(c2s4)));
    Group d8 = build(dihedral_spec(8));
    CHECK(engel_class_in(d8, 2).size() == 8);
    CHECK_THROWS_AS(engel_class_in(d8, 0), std::invalid_argument);
  }

  TEST_CASE("graph vertex sets") {
    CHECK(build_gamma(build(dihedral_spec(8))).size() == 0);
    Group s3 = build(symmetric_spec(3));
    Digraph g3 = build_gamma(s3);
    CHECK(g3.size() == 5);
    CHECK_FALSE(scc(g3).strongly_connected);
    Group s4 = build(symmetric_spec(4));
    Digraph g4 = build_gamma(s4);
    CHECK(g4.size() == 23);
    CHECK(scc(g4).strongly_connected);
    for (const auto& spec : catalog_tier(Tier::Fast)) {
      Group g = build(spec);
      INFO(spec.name);
      REQUIRE(build_gamma(g).size() == g.order() - hypercenter(g).order());
      REQUIRE(build_delta(g).size() == g.order() - 1);
      REQUIRE(build_lambda(g).size() == g.order());
      REQUIRE(build_commuting(g).size() == g.order() - center(g).order());
      for (unsigned n = 1; n <= 2; ++n)
        REQUIRE(build_gamma_n(g, n).size() == g.order() - engel_class_in(g, n).size());
    }
  }

  TEST_CASE("Gamma_1 is the symmetric commuting relation") {
    Group a5 = build(alternating_spec(5));
    Digraph g1 = build_gamma_n(a5, 1);
    CHECK(g1.is_symmetric());
    Digraph c = build_commuting(a5);
    REQUIRE(c.size() == g1.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) REQUIRE(c.has_arc(i, j) == g1.has_arc(i, j));
  }

  TEST_CASE("Gamma arcs against the naive image-chase oracle on S4") {
    Group s4 = build(symmetric_spec(4));
    Digraph d = build_gamma(s4);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (i == j) continue;
        auto x = oracle::images(s4.element(d.vertices()[i]));
        auto y = oracle::images(s4.element(d.vertices()[j]));
        REQUIRE(d.has_arc(i, j) == (oracle::engel_depth(x, y, s4.order()) > 0));
      }
  }

  TEST_CASE("parallel construction is bit-identical") {
    Group a6 = build(alternating_spec(6));
    CHECK(build_gamma(a6, {20'000'000, 1}) == build_gamma(a6, {20'000'000, 3}));
    CHECK(build_commuting(a6, {20'000'000, 1}) == build_commuting(a6, {20'000'000, 4}));
  }

  TEST_CASE("budget") {
    Group s5 = build(symmetric_spec(5));
    CHECK_THROWS_AS(build_gamma(s5, {100, 1}), LimitExceeded);
    try {
      build_lambda(s5, {100, 1});
    } catch (const LimitExceeded& e) {
      CHECK(e.required() == 120u * 120u);
    }
  }

  TEST_CASE("prime graphs") {
    PrimeGraph a5 = build_prime_graph(build(alternating_spec(5)));
    CHECK(a5.components == std::vector<std::vector<std::uint64_t>>{{2}, {3}, {5}});
    PrimeGraph a7 = build_prime_graph(build(alternating_spec(7)));
    CHECK(a7.components == std::vector<std::vector<std::uint64_t>>{{2, 3}, {5}, {7}});
    CHECK(a7.pi1 == std::vector<std::uint64_t>{2, 3});
    PrimeGraph c6 = build_prime_graph(build(cyclic_spec(6)));
    CHECK(c6.components == std::vector<std::vector<std::uint64_t>>{{2, 3}});
    // Cycle-type statistics agree with the enumerated groups.
    for (unsigned n : {5u, 6u, 7u}) {
      PrimeGraph full = build_prime_graph(build(alternating_spec(n)));
      PrimeGraph stats = prime_graph_from_orders(alternating_order(n), alternating_element_orders(n));
      CHECK(full.components == stats.components);
      CHECK(full.edges == stats.edges);
    }
    CHECK(alternating_order(13) == 3113510400ull);
  }

  TEST_CASE("alternating identity") {
    for (unsigned p : {7u, 11u, 13u}) {
      auto r = alt_identity(p);
      CHECK(r.commutator == "(1,5,3)(2,4,6)");
      CHECK(r.matches);
      CHECK(r.engel2);
      CHECK(alt_identity_check(p));
      // Independent chase of (1,3,5)^-1 (1,...,p)^-1 (1,3,5) (1,...,p).
      oracle::Images y(p), x(p);
      for (unsigned i = 0; i < p; ++i) x[i] = static_cast<Point>((i + 1) % p), y[i] = static_cast<Point>(i);
      y[0] = 2, y[2] = 4, y[4] = 0;
      auto c = oracle::commutator(y, x);
      CHECK(Permutation(c).to_cycles() == "(1,5,3)(2,4,6)");
      CHECK(oracle::is_identity(oracle::commutator(oracle::commutator(x, y), y)));
    }
    CHECK_THROWS_AS(alt_identity(9), std::invalid_argument);
  }

  TEST_CASE("budget from the environment") {
    setenv("ENGELGRAPH_BUDGET", "1234", 1);
    CHECK(budget_from_env(5) == 1234u);
    setenv("ENGELGRAPH_BUDGET", "x", 1);
    CHECK_THROWS_AS(budget_from_env(5), std::invalid_argument);
    unsetenv("ENGELGRAPH_BUDGET");
    CHECK(budget_from_env(5) == 5u);
  }
}

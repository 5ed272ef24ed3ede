#include <doctest.h>

#include <numeric>
#include <set>

#include "engelgraph/catalog.hpp"
#include "engelgraph/engel.hpp"
#include "engelgraph/numtheory.hpp"
#include "engelgraph/structure.hpp"
#include "oracles.hpp"

using namespace engelgraph;

namespace {

ElementId id(const Group& g, const char* text) { return g.id_of(Permutation::from_cycles(text, g.degree())); }

// Largest nilpotent normal subgroup: join of the nilpotent normal closures
// of single classes, grown until no further class can be added.
Subgroup largest_nilpotent_normal(const Group& g) {
  Subgroup f = trivial_subgroup(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& cls : g.conjugacy_classes().classes) {
      if (f.contains(cls.front())) continue;
      std::vector<ElementId> gens(f.ids().begin(), f.ids().end());
      gens.push_back(cls.front());
      Subgroup n = normal_closure(g, gens);
      if (is_nilpotent(as_group(n, "N"))) {
        f = n;
        grew = true;
      }
    }
  }
  return f;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("center") {
    Group s3 = build(symmetric_spec(3));
    CHECK(center(s3).is_trivial());
    CHECK(center(build(cyclic_spec(10))).is_whole());
    Group d8 = build(dihedral_spec(8));
    CHECK(center(d8).order() == 2);
    std::set<ElementId> brute;
    std::vector<ElementId> all(d8.order());
    std::iota(all.begin(), all.end(), 0);
    brute = oracle::centralizer(d8, all);
    Subgroup z = center(d8);
    CHECK(std::set<ElementId>(z.ids().begin(), z.ids().end()) == brute);
  }

  TEST_CASE("upper central series and hypercenter") {
    Group s4 = build(symmetric_spec(4));
    auto ucs = upper_central_series(s4);
    CHECK(ucs.stabilized);
    CHECK(ucs.terms.back().is_trivial());
    CHECK(hypercenter(s4).is_trivial());
    Group d8 = build(dihedral_spec(8));
    CHECK(upper_central_series(d8).terms.back().is_whole());
    CHECK(hypercenter(d8).is_whole());
    Group c2s4 = build(find_spec("C2xS4").value());
    CHECK(hypercenter(c2s4).order() == 2);
    CHECK(hypercenter(c2s4) == center(c2s4));
  }

  TEST_CASE("hypercenter agrees with the Engel characterization on the fast catalog") {
    for (const auto& spec : catalog_tier(Tier::Fast)) {
      Group g = build(spec);
      INFO(spec.name);
      REQUIRE(hypercenter(g) == hypercenter_engel_oracle(g));
      REQUIRE(is_nilpotent(g) == hypercenter(g).is_whole());
    }
    CHECK(hypercenter_engel_oracle(build(symmetric_spec(4))).is_trivial());
    CHECK(hypercenter_engel_oracle(build(dihedral_spec(8))).is_whole());
  }

  TEST_CASE("fitting subgroup against the largest nilpotent normal subgroup") {
    Group s4 = build(symmetric_spec(4));
    Subgroup f = fitting(s4);
    CHECK(f.order() == 4);
    CHECK(f == largest_nilpotent_normal(s4));
    CHECK(fitting(build(dihedral_spec(8))).is_whole());
    CHECK(fitting(build(alternating_spec(5))).is_trivial());
    for (const auto& spec : catalog_tier(Tier::Fast)) {
      Group g = build(spec);
      INFO(spec.name);
      Subgroup fg = fitting(g);
      REQUIRE(fg == largest_nilpotent_normal(g));
      REQUIRE(is_normal(g, fg));
      REQUIRE(is_nilpotent(as_group(fg, "F")));
      // Maximality: adding any class outside F destroys nilpotency.
      for (const auto& cls : g.conjugacy_classes().classes) {
        if (fg.contains(cls.front())) continue;
        std::vector<ElementId> gens(fg.ids().begin(), fg.ids().end());
        gens.push_back(cls.front());
        REQUIRE_FALSE(is_nilpotent(as_group(normal_closure(g, gens), "N")));
      }
    }
  }

  TEST_CASE("F* = F") {
    CHECK(fstar_equals_fitting(build(symmetric_spec(4))));
    CHECK_FALSE(fstar_equals_fitting(build(alternating_spec(5))));
    CHECK(fstar_equals_fitting(build(dihedral_spec(8))));
  }

  TEST_CASE("nilpotent, soluble, simple") {
    CHECK(is_nilpotent(build(dihedral_spec(8))));
    Group s4 = build(symmetric_spec(4));
    CHECK_FALSE(is_nilpotent(s4));
    CHECK(is_soluble(s4));
    Group a5 = build(alternating_spec(5));
    CHECK_FALSE(is_soluble(a5));
    CHECK(is_simple(a5));
    CHECK_FALSE(is_simple(s4));
    Group c7 = build(cyclic_spec(7));
    CHECK_FALSE(is_simple(c7));
    CHECK(is_cyclic_of_prime_order(c7));
  }

  TEST_CASE("almost simple") {
    CHECK(is_almost_simple(build(symmetric_spec(5))));
    CHECK_FALSE(is_almost_simple(build(direct_product_spec(alternating_spec(5), alternating_spec(5)))));
    CHECK_FALSE(is_almost_simple(build(symmetric_spec(4))));
  }

  TEST_CASE("Frobenius groups") {
    auto w = is_frobenius(build(symmetric_spec(3)));
    REQUIRE(w);
    CHECK(w->kernel.order() == 3);
    CHECK(w->complement_order == 2);
    auto w20 = is_frobenius(build(agl1_spec(5)));
    REQUIRE(w20);
    CHECK(w20->kernel.order() == 5);
    CHECK_FALSE(is_frobenius(build(symmetric_spec(4))));
    for (const auto& spec : catalog_tier(Tier::Fast)) {
      Group g = build(spec);
      auto fw = is_frobenius(g);
      if (!fw) continue;
      INFO(spec.name);
      REQUIRE(std::gcd(fw->kernel.order(), fw->complement_order) == 1);
      if (hypercenter(g).is_trivial()) {
        auto c = scc(build_gamma(g));
        REQUIRE_FALSE(c.strongly_connected);
      }
    }
  }

  TEST_CASE("J") {
    CHECK(compute_J(build(symmetric_spec(4))).order() == 12);
    CHECK(compute_J(build(dihedral_spec(8))).is_whole());
    CHECK(compute_J(build(alternating_spec(5))).is_trivial());
    CHECK(j_equals_jstar(build(symmetric_spec(4))));
  }

  TEST_CASE("Sylow automizers") {
    Group a7 = build(alternating_spec(7));
    auto r = sylow_automizer(a7, 7);
    CHECK(r.automizer == 3);
    CHECK(r.automizer_odd);
    CHECK(r.normalizer_order == 21);
    Group l27 = build(psl2_spec(7));
    CHECK(sylow_automizer(l27, 7).automizer == 3);
    CHECK(sylow_automizer(build(psl2_spec(11)), 11).automizer == 5);
    Group a5 = build(alternating_spec(5));
    CHECK(sylow_automizer(a5, 3).automizer == 2);
    CHECK(sylow_automizer(a5, 5).automizer == 2);
  }

  TEST_CASE("odd automizer chains") {
    CHECK(odd_automizer_chain_length(build(alternating_spec(5))) == 0);
    CHECK(odd_automizer_chain_length(build(psl2_spec(7))) >= 1);
    CHECK_THROWS_AS(odd_automizer_chain(build(symmetric_spec(4))), std::invalid_argument);
  }

  TEST_CASE("primitive prime divisors") {
    CHECK(primitive_prime_divisors(2, 6).empty());
    CHECK(primitive_prime_divisors(3, 2).empty());
    CHECK(primitive_prime_divisors(2, 4) == std::set<std::uint64_t>{5});
    CHECK(primitive_prime_divisors(7, 1) == std::set<std::uint64_t>{2, 3});
  }

  TEST_CASE("metacyclic") {
    CHECK(is_metacyclic(build(cyclic_spec(6))));
    CHECK(is_metacyclic(build(symmetric_spec(3))));
    Group s4 = build(symmetric_spec(4));
    Subgroup v4 = generate(s4, std::vector<ElementId>{id(s4, "(1,2)(3,4)"), id(s4, "(1,3)(2,4)")});
    CHECK(is_metacyclic(as_group(v4, "V4")));
    CHECK_FALSE(is_metacyclic(s4));
  }

  TEST_CASE("theta map") {
    Group s3 = build(symmetric_spec(3));
    auto t = check_theta_isomorphism(s3, id(s3, "(1,2)"));
    CHECK(t.outcome == ThetaOutcome::Holds);
    CHECK(t.automizer_in_g == t.automizer_in_quotient);
    CHECK_THROWS_AS(check_theta_isomorphism(s3, kIdentity), std::invalid_argument);
    Group c2s4 = build(find_spec("C2xS4").value());
    ElementId z = center(c2s4).ids()[1];
    CHECK(check_theta_isomorphism(c2s4, z).outcome == ThetaOutcome::NotApplicable);
  }
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "engelgraph/digraph.hpp"
#include "engelgraph/group.hpp"

namespace engelgraph {

enum class TraceOutcome { ReachesIdentity, EntersCycle };

/// The sequence a_0 = x, a_{k+1} = [a_k, y] up to the identity or the first repeat.
struct EngelTrace {
  ElementId source = kIdentity;
  ElementId target = kIdentity;
  std::vector<ElementId> sequence;
  TraceOutcome outcome = TraceOutcome::ReachesIdentity;
  /// Least n with [x,_n y] = 1 (ReachesIdentity only).
  std::size_t depth = 0;
  /// Index in `sequence` where the cycle starts, and its length (EntersCycle only).
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
};

EngelTrace engel_trace(const Group& g, ElementId x, ElementId y);

/// (x,y) is an arc iff [x,_n y] = 1 for some n >= 1.
bool is_arc(const Group& g, ElementId x, ElementId y);

/// The least n >= 1 with [x,_n y] = 1.
std::optional<std::size_t> arc_depth(const Group& g, ElementId x, ElementId y);

/// For a fixed y, depth[x] is the least n >= 0 with [x,_n y] = 1, or -1.
///
/// Costs one commutator per element: the map a -> [a,y] is tabulated once and
/// every x is resolved by walking that functional graph with memoization.
std::vector<std::int32_t> engel_depths_into(const Group& g, ElementId y);

/// I_n(G): elements x with [x,_n y] = [y,_n x] = 1 for every y.
std::vector<ElementId> engel_class_in(const Group& g, unsigned n);

struct BuildOptions {
  std::uint64_t budget = 20'000'000;  // arc tests (vertex count squared)
  unsigned jobs = 1;
};

/// Budget from ENGELGRAPH_BUDGET when set, otherwise `fallback`.
std::uint64_t budget_from_env(std::uint64_t fallback);

/// Lambda(G): all of G, arc iff some Engel word in (x,y) vanishes.
Digraph build_lambda(const Group& g, const BuildOptions& options = {});
/// Delta(G): Lambda(G) induced on G \ {1}.
Digraph build_delta(const Group& g, const BuildOptions& options = {});
/// Gamma(G): Lambda(G) induced on G \ Z_inf(G).
Digraph build_gamma(const Group& g, const BuildOptions& options = {});
/// Gamma_n(G): vertex set G \ I_n(G), arc iff [x,_n y] = 1.
Digraph build_gamma_n(const Group& g, unsigned n, const BuildOptions& options = {});
/// Commuting graph on G \ Z(G).
Digraph build_commuting(const Group& g, const BuildOptions& options = {});

/// Engel digraph of the requested kind on an explicit vertex set.
Digraph build_engel_graph(const Group& g, std::vector<ElementId> vertices, GraphKind kind,
                          unsigned level, const BuildOptions& options);

struct PrimeGraph {
  std::vector<std::uint64_t> primes;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // r < s, sorted
  std::vector<std::vector<std::uint64_t>> components;          // each sorted, ordered by least prime
  std::vector<std::uint64_t> pi1;                              // component of 2 (empty if 2 absent)
};

/// Prime graph from |G| and the set of element orders.
PrimeGraph prime_graph_from_orders(std::uint64_t group_order, const std::set<std::uint64_t>& element_orders);
PrimeGraph build_prime_graph(const Group& g);

/// Element orders of Alt(n) from the cycle types of even permutations.
std::set<std::uint64_t> alternating_element_orders(unsigned n);
std::uint64_t alternating_order(unsigned n);

struct AltIdentityResult {
  std::string commutator;  // [(1,3,5), (1,...,p)] in cycle notation
  bool matches = false;    // equals (1,5,3)(2,4,6)
  bool engel2 = false;     // [x,_2 y] = 1 for x = (1,...,p), y = (1,3,5)
};

/// Throws std::invalid_argument unless p is a prime with 7 <= p <= 23.
AltIdentityResult alt_identity(unsigned p);
bool alt_identity_check(unsigned p);

}  // namespace engelgraph

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "engelgraph/group.hpp"

namespace engelgraph {

/// Z_0 <= Z_1 <= ... ; the last two terms coincide once stabilized.
struct CentralSeries {
  std::vector<Subgroup> terms;
  bool stabilized = false;
};

Subgroup center(const Group& g);

/// Z_{i+1} = {x : [x,s] in Z_i for every generator s}, iterated to a fixed point.
CentralSeries upper_central_series(const Group& g);
Subgroup hypercenter(const Group& g);

/// Z_inf(G) computed independently as the elements x such that every y admits
/// some n with [x,_n y] = [y,_n x] = 1.
Subgroup hypercenter_engel_oracle(const Group& g);

/// The left Engel elements. Throws std::logic_error if that set is not a
/// nilpotent normal subgroup.
Subgroup fitting(const Group& g);

/// F*(G) = F(G), decided as C_G(F(G)) <= F(G).
bool fstar_equals_fitting(const Group& g);

std::vector<Subgroup> lower_central_series(const Group& g);
std::vector<Subgroup> derived_series(const Group& g);
bool is_nilpotent(const Group& g);
bool is_soluble(const Group& g);
bool is_abelian(const Group& g);

/// Nonabelian simple. Cyclic groups of prime order report false; see
/// is_cyclic_of_prime_order.
bool is_simple(const Group& g);
bool is_cyclic_of_prime_order(const Group& g);

/// Inclusion-minimal normal closures of single non-identity elements.
std::vector<Subgroup> minimal_normal_subgroups(const Group& g);

bool is_almost_simple(const Group& g);

struct FrobeniusWitness {
  Subgroup kernel;
  std::uint64_t complement_order;
};

/// Tests F(G) as the Frobenius kernel candidate.
std::optional<FrobeniusWitness> is_frobenius(const Group& g);

/// True iff `h` is a Frobenius group with kernel `k` (k <= h <= g, k normal in h).
bool is_frobenius_with_kernel(const Group& g, const Subgroup& h, const Subgroup& k);

/// J with J/F(G) = F(G/F(G)).
Subgroup compute_J(const Group& g);

/// J = J*, i.e. F*(G/F(G)) = F(G/F(G)).
bool j_equals_jstar(const Group& g);

struct SylowReport {
  std::uint64_t p;
  Subgroup sylow;
  std::uint64_t normalizer_order;
  std::uint64_t centralizer_order;
  std::uint64_t automizer;
  bool automizer_odd;
};

SylowReport sylow_automizer(const Group& g, std::uint64_t p);

struct AutomizerChain {
  std::vector<std::uint64_t> odd_automizer_primes;
  /// Longest p_1, ..., p_l with p_i | p_{i+1} - 1, all with odd automizer.
  std::vector<std::uint64_t> chain;
};

/// Considers odd primes only. Throws std::invalid_argument unless g is nonabelian simple.
AutomizerChain odd_automizer_chain(const Group& g);
std::size_t odd_automizer_chain_length(const Group& g);

/// Primes p | q^t - 1 with p not dividing q^i - 1 for 1 <= i < t.
std::set<std::uint64_t> primitive_prime_divisors(std::uint64_t q, unsigned t);

/// Some cyclic normal subgroup has cyclic quotient (exhaustive).
bool is_metacyclic(const Group& g);

enum class ThetaOutcome { Holds, Fails, NotApplicable };

struct ThetaCheck {
  ThetaOutcome outcome = ThetaOutcome::NotApplicable;
  std::uint64_t automizer_in_g = 0;         // |N_G(<x>) : C_G(x)|
  std::uint64_t automizer_in_quotient = 0;  // same for xF in G/F
  bool surjective = false;                  // N_G(<x>) maps onto N_{G/F}(<xF>)
  bool centralizer_image = false;           // C_G(x) maps onto C_{G/F}(xF)
};

/// Throws std::invalid_argument if x is the identity or not of prime order.
/// NotApplicable when N_G(<x>)F(G) is not Frobenius with kernel F(G) and
/// complement N_G(<x>).
ThetaCheck check_theta_isomorphism(const Group& g, ElementId x);

}  // namespace engelgraph

#include "engelgraph/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "engelgraph/engel.hpp"
#include "engelgraph/numtheory.hpp"

namespace engelgraph {

namespace {

// Union of the conjugacy classes of the representatives accepted by `keep`.
template <class Pred>
Subgroup union_of_classes(const Group& g, Pred keep) {
  const auto& cc = g.conjugacy_classes();
  std::vector<ElementId> ids;
  for (const auto& cls : cc.classes) {
    if (keep(cls.front())) ids.insert(ids.end(), cls.begin(), cls.end());
  }
  return Subgroup(g, std::move(ids));
}

Subgroup cyclic_subgroup(const Group& g, ElementId c) {
  std::vector<ElementId> ids{kIdentity};
  for (ElementId a = c; a != kIdentity; a = g.mul(a, c)) ids.push_back(a);
  return Subgroup(g, std::move(ids));
}

}  // namespace

Subgroup center(const Group& g) {
  auto gens = g.generator_ids();
  return centralizer(g, gens);
}

CentralSeries upper_central_series(const Group& g) {
  CentralSeries series;
  series.terms.push_back(trivial_subgroup(g));
  for (;;) {
    const Subgroup& prev = series.terms.back();
    std::vector<ElementId> next;
    for (ElementId x = 0; x < g.order(); ++x) {
      bool central = true;
      for (ElementId s : g.generator_ids()) {
        if (!prev.contains(g.comm(x, s))) {
          central = false;
          break;
        }
      }
      if (central) next.push_back(x);
    }
    Subgroup term(g, std::move(next));
    bool same = term == prev;
    series.terms.push_back(std::move(term));
    if (same) break;
  }
  series.stabilized = true;
  return series;
}

Subgroup hypercenter(const Group& g) { return upper_central_series(g).terms.back(); }

Subgroup hypercenter_engel_oracle(const Group& g) {
  return union_of_classes(g, [&](ElementId x) {
    auto into = engel_depths_into(g, x);
    if (std::any_of(into.begin(), into.end(), [](std::int32_t d) { return d < 0; })) return false;
    for (ElementId y = 0; y < g.order(); ++y) {
      if (!is_arc(g, x, y)) return false;
    }
    return true;
  });
}

Subgroup fitting(const Group& g) {
  Subgroup f = union_of_classes(g, [&](ElementId x) {
    auto into = engel_depths_into(g, x);
    return std::none_of(into.begin(), into.end(), [](std::int32_t d) { return d < 0; });
  });
  auto ids = f.ids();
  if (!is_subgroup(g, ids) && generate(g, std::vector<ElementId>(ids.begin(), ids.end())) != f) {
    throw std::logic_error("left Engel elements of " + g.name() + " do not form a subgroup");
  }
  if (!f.is_trivial() && !is_nilpotent(as_group(f, g.name() + ":F"))) {
    throw std::logic_error("left Engel subgroup of " + g.name() + " is not nilpotent");
  }
  return f;
}

bool fstar_equals_fitting(const Group& g) {
  Subgroup f = fitting(g);
  return centralizer(g, f).is_subset_of(f);
}

std::vector<Subgroup> lower_central_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  Subgroup all = whole_group(g);
  for (;;) {
    Subgroup next = commutator_subgroup(g, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  for (;;) {
    Subgroup next = commutator_subgroup(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const Group& g) { return lower_central_series(g).back().is_trivial(); }
bool is_soluble(const Group& g) { return derived_series(g).back().is_trivial(); }

bool is_abelian(const Group& g) {
  auto gens = g.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!g.commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool is_cyclic_of_prime_order(const Group& g) { return is_prime(g.order()); }

bool is_simple(const Group& g) {
  if (g.order() <= 1 || is_abelian(g)) return false;
  const auto& cc = g.conjugacy_classes();
  for (std::size_t c = 1; c < cc.classes.size(); ++c) {
    ElementId rep = cc.classes[c].front();
    if (normal_closure(g, std::span<const ElementId>(&rep, 1)).order() != g.order()) return false;
  }
  return true;
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  const auto& cc = g.conjugacy_classes();
  std::vector<Subgroup> closures;
  for (std::size_t c = 1; c < cc.classes.size(); ++c) {
    ElementId rep = cc.classes[c].front();
    Subgroup n = normal_closure(g, std::span<const ElementId>(&rep, 1));
    if (std::find(closures.begin(), closures.end(), n) == closures.end()) closures.push_back(std::move(n));
  }
  std::vector<Subgroup> minimal;
  for (const auto& n : closures) {
    bool is_min = std::none_of(closures.begin(), closures.end(), [&](const Subgroup& m) {
      return m.order() < n.order() && m.is_subset_of(n);
    });
    if (is_min) minimal.push_back(n);
  }
  return minimal;
}

bool is_almost_simple(const Group& g) {
  if (g.order() <= 1 || !fitting(g).is_trivial()) return false;
  auto mins = minimal_normal_subgroups(g);
  if (mins.size() != 1) return false;
  if (!is_simple(as_group(mins.front(), g.name() + ":socle"))) return false;
  return centralizer(g, mins.front()).is_trivial();
}

bool is_frobenius_with_kernel(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (k.order() <= 1 || k.order() >= h.order() || !k.is_subset_of(h)) return false;
  for (ElementId a : k.generators()) {
    for (ElementId s : h.generators()) {
      if (!k.contains(g.conj(a, s))) return false;
    }
  }
  for (ElementId x : k.ids()) {
    if (x == kIdentity) continue;
    for (ElementId y : h.ids()) {
      if (!k.contains(y) && g.commute(x, y)) return false;
    }
  }
  return true;
}

std::optional<FrobeniusWitness> is_frobenius(const Group& g) {
  Subgroup k = fitting(g);
  if (k.is_trivial() || k.is_whole()) return std::nullopt;
  // Conjugation-invariant condition: class representatives inside K suffice.
  const auto& cc = g.conjugacy_classes();
  for (const auto& cls : cc.classes) {
    ElementId x = cls.front();
    if (x == kIdentity || !k.contains(x)) continue;
    for (ElementId y = 0; y < g.order(); ++y) {
      if (!k.contains(y) && g.commute(x, y)) return std::nullopt;
    }
  }
  std::uint64_t complement = g.order() / k.order();
  return FrobeniusWitness{std::move(k), complement};
}

Subgroup compute_J(const Group& g) {
  Subgroup f = fitting(g);
  if (f.is_trivial()) return f;
  QuotientMap q = quotient(g, f);
  return q.preimage(g, fitting(q.group));
}

bool j_equals_jstar(const Group& g) {
  Subgroup f = fitting(g);
  if (f.is_trivial()) return fstar_equals_fitting(g);
  return fstar_equals_fitting(quotient(g, f).group);
}

SylowReport sylow_automizer(const Group& g, std::uint64_t p) {
  Subgroup s = sylow(g, p);
  std::uint64_t n = normalizer(g, s).order();
  std::uint64_t c = centralizer(g, s).order();
  if (n % c != 0) throw std::logic_error("centralizer order does not divide normalizer order");
  std::uint64_t a = n / c;
  return SylowReport{p, std::move(s), n, c, a, a % 2 == 1};
}

AutomizerChain odd_automizer_chain(const Group& g) {
  if (!is_simple(g)) throw std::invalid_argument(g.name() + " is not nonabelian simple");
  AutomizerChain result;
  for (std::uint64_t p : prime_divisors(g.order())) {
    if (p == 2) continue;
    if (sylow_automizer(g, p).automizer_odd) result.odd_automizer_primes.push_back(p);
  }
  const auto& ps = result.odd_automizer_primes;
  // longest[i]: best chain ending at ps[i]; primes ascending, so predecessors come first
  std::vector<std::size_t> longest(ps.size(), 1), prev(ps.size(), ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((ps[i] - 1) % ps[j] == 0 && longest[j] + 1 > longest[i]) {
        longest[i] = longest[j] + 1;
        prev[i] = j;
      }
    }
  }
  if (!ps.empty()) {
    std::size_t end = static_cast<std::size_t>(std::max_element(longest.begin(), longest.end()) - longest.begin());
    for (std::size_t i = end; i < ps.size(); i = prev[i]) result.chain.push_back(ps[i]);
    std::reverse(result.chain.begin(), result.chain.end());
  }
  return result;
}

std::size_t odd_automizer_chain_length(const Group& g) { return odd_automizer_chain(g).chain.size(); }

std::set<std::uint64_t> primitive_prime_divisors(std::uint64_t q, unsigned t) {
  if (q < 2 || t < 1) throw std::invalid_argument("primitive prime divisors need q >= 2, t >= 1");
  std::uint64_t value = checked_pow(q, t) - 1;
  std::set<std::uint64_t> out;
  if (value <= 1) return out;
  for (std::uint64_t p : prime_divisors(value)) {
    bool primitive = true;
    for (unsigned i = 1; i < t && primitive; ++i) {
      if (pow_mod(q, i, p) == 1) primitive = false;
    }
    if (primitive) out.insert(p);
  }
  return out;
}

bool is_metacyclic(const Group& g) {
  std::vector<bool> seen_generator(g.order(), false);
  for (ElementId c = 0; c < g.order(); ++c) {
    if (seen_generator[c]) continue;
    Subgroup cyc = cyclic_subgroup(g, c);
    // mark every generator of <c> so each cyclic subgroup is tried once
    for (ElementId a : cyc.ids()) {
      if (g.element_order(a) == cyc.order()) seen_generator[a] = true;
    }
    if (!is_normal(g, cyc)) continue;
    const std::size_t index = g.order() / cyc.order();
    for (ElementId x = 0; x < g.order(); ++x) {
      std::size_t k = 1;
      ElementId a = x;
      while (!cyc.contains(a)) {
        a = g.mul(a, x);
        ++k;
      }
      if (k == index) return true;
    }
  }
  return false;
}

ThetaCheck check_theta_isomorphism(const Group& g, ElementId x) {
  if (x == kIdentity) throw std::invalid_argument("theta check needs a non-identity element");
  if (!is_prime(g.element_order(x))) throw std::invalid_argument("theta check needs an element of prime order");

  ThetaCheck result;
  Subgroup f = fitting(g);
  Subgroup cyc = cyclic_subgroup(g, x);
  Subgroup n = normalizer(g, cyc);
  Subgroup nf = product(g, n, f);
  if (!intersection(n, f).is_trivial() || !is_frobenius_with_kernel(g, nf, f)) return result;

  Subgroup c = centralizer(g, std::span<const ElementId>(&x, 1));
  QuotientMap q = quotient(g, f);
  ElementId xq = q.image[x];
  Subgroup nq = normalizer(q.group, cyclic_subgroup(q.group, xq));
  Subgroup cq = centralizer(q.group, std::span<const ElementId>(&xq, 1));

  auto image_of = [&](const Subgroup& h) {
    std::vector<ElementId> ids;
    for (ElementId a : h.ids()) ids.push_back(q.image[a]);
    return Subgroup(q.group, std::move(ids));
  };
  result.automizer_in_g = n.order() / c.order();
  result.automizer_in_quotient = nq.order() / cq.order();
  result.surjective = image_of(n) == nq;
  result.centralizer_image = image_of(c) == cq;
  result.outcome = result.automizer_in_g == result.automizer_in_quotient ? ThetaOutcome::Holds
                                                                         : ThetaOutcome::Fails;
  return result;
}

}  // namespace engelgraph

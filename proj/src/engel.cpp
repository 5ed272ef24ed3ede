#include "engelgraph/engel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "engelgraph/numtheory.hpp"
#include "engelgraph/parallel.hpp"
#include "engelgraph/structure.hpp"

namespace engelgraph {

EngelTrace engel_trace(const Group& g, ElementId x, ElementId y) {
  EngelTrace t;
  t.source = x;
  t.target = y;
  std::unordered_map<ElementId, std::size_t> seen;
  ElementId a = x;
  for (;;) {
    if (a == kIdentity) {
      t.sequence.push_back(a);
      t.outcome = TraceOutcome::ReachesIdentity;
      t.depth = t.sequence.size() - 1;
      return t;
    }
    auto [it, fresh] = seen.emplace(a, t.sequence.size());
    if (!fresh) {
      t.outcome = TraceOutcome::EntersCycle;
      t.cycle_start = it->second;
      t.cycle_length = t.sequence.size() - it->second;
      return t;
    }
    t.sequence.push_back(a);
    a = g.comm(a, y);
  }
}

bool is_arc(const Group& g, ElementId x, ElementId y) { return arc_depth(g, x, y).has_value(); }

std::optional<std::size_t> arc_depth(const Group& g, ElementId x, ElementId y) {
  EngelTrace t = engel_trace(g, x, y);
  if (t.outcome != TraceOutcome::ReachesIdentity) return std::nullopt;
  return std::max<std::size_t>(1, t.depth);
}

std::vector<std::int32_t> engel_depths_into(const Group& g, ElementId y) {
  const std::size_t n = g.order();
  std::vector<ElementId> next(n);
  for (ElementId a = 0; a < n; ++a) next[a] = g.comm(a, y);

  constexpr std::int32_t kUnknown = -2, kOnPath = -3, kNever = -1;
  std::vector<std::int32_t> depth(n, kUnknown);
  depth[kIdentity] = 0;
  std::vector<ElementId> path;
  for (ElementId start = 0; start < n; ++start) {
    if (depth[start] != kUnknown) continue;
    path.clear();
    ElementId a = start;
    while (depth[a] == kUnknown) {
      depth[a] = kOnPath;
      path.push_back(a);
      a = next[a];
    }
    // a is resolved, or on the current path (a cycle avoiding the identity)
    std::int32_t d = depth[a] == kOnPath ? kNever : depth[a];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (d != kNever) ++d;
      depth[*it] = d;
    }
  }
  return depth;
}

namespace {

bool reaches_identity_within(const Group& g, ElementId x, ElementId y, unsigned n) {
  ElementId a = x;
  for (unsigned i = 0; i < n && a != kIdentity; ++i) a = g.comm(a, y);
  return a == kIdentity;
}

void check_budget(std::size_t vertices, const BuildOptions& options) {
  std::uint64_t required = static_cast<std::uint64_t>(vertices) * vertices;
  if (required > options.budget) {
    throw LimitExceeded("arc-test budget exceeded: need " + std::to_string(required) + ", budget " +
                            std::to_string(options.budget),
                        required);
  }
}

std::vector<ElementId> complement_of(const Group& g, const std::vector<bool>& excluded) {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < g.order(); ++a) {
    if (!excluded[a]) out.push_back(a);
  }
  return out;
}

std::vector<bool> membership(const Group& g, std::span<const ElementId> ids) {
  std::vector<bool> m(g.order(), false);
  for (ElementId a : ids) m[a] = true;
  return m;
}

}  // namespace

std::vector<ElementId> engel_class_in(const Group& g, unsigned n) {
  if (n < 1) throw std::invalid_argument("engel_class_in needs n >= 1");
  const auto& cc = g.conjugacy_classes();
  std::vector<ElementId> out;
  for (const auto& cls : cc.classes) {
    ElementId x = cls.front();
    auto into = engel_depths_into(g, x);
    bool ok = std::all_of(into.begin(), into.end(), [&](std::int32_t d) {
      return d >= 0 && d <= static_cast<std::int32_t>(n);
    });
    for (ElementId y = 0; ok && y < g.order(); ++y) ok = reaches_identity_within(g, x, y, n);
    if (ok) out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("ENGELGRAPH_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    std::uint64_t value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("ENGELGRAPH_BUDGET is not a non-negative integer: ") + raw);
  }
}

Digraph build_engel_graph(const Group& g, std::vector<ElementId> vertices, GraphKind kind, unsigned level,
                          const BuildOptions& options) {
  check_budget(vertices.size(), options);
  std::sort(vertices.begin(), vertices.end());
  const std::size_t v = vertices.size();
  // Row j of `into` holds the sources i of arcs i -> j; each worker owns one row.
  Digraph into(vertices, kind, level);
  parallel_for(v, options.jobs, [&](std::size_t j) {
    ElementId y = vertices[j];
    if (kind == GraphKind::Commuting) {
      for (std::size_t i = 0; i < v; ++i) {
        if (g.commute(vertices[i], y)) into.add_arc(j, i);
      }
      return;
    }
    auto depth = engel_depths_into(g, y);
    const std::int32_t cap = kind == GraphKind::GammaN ? static_cast<std::int32_t>(level) : -1;
    for (std::size_t i = 0; i < v; ++i) {
      std::int32_t d = depth[vertices[i]];
      if (d < 0) continue;
      if (cap >= 0 && std::max(d, 1) > cap) continue;
      into.add_arc(j, i);
    }
  });
  Digraph out(std::move(vertices), kind, level);
  for (std::size_t j = 0; j < v; ++j) {
    auto row = into.row(j);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (std::uint64_t word = row[w]; word != 0; word &= word - 1) {
        out.add_arc((w << 6) + static_cast<std::size_t>(std::countr_zero(word)), j);
      }
    }
  }
  return out;
}

Digraph build_lambda(const Group& g, const BuildOptions& options) {
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return build_engel_graph(g, std::move(all), GraphKind::Lambda, 0, options);
}

Digraph build_delta(const Group& g, const BuildOptions& options) {
  std::vector<ElementId> all(g.order() - 1);
  std::iota(all.begin(), all.end(), ElementId{1});
  return build_engel_graph(g, std::move(all), GraphKind::Delta, 0, options);
}

Digraph build_gamma(const Group& g, const BuildOptions& options) {
  Subgroup z = hypercenter(g);
  return build_engel_graph(g, complement_of(g, membership(g, z.ids())), GraphKind::Gamma, 0, options);
}

Digraph build_gamma_n(const Group& g, unsigned n, const BuildOptions& options) {
  auto in = engel_class_in(g, n);
  return build_engel_graph(g, complement_of(g, membership(g, in)), GraphKind::GammaN, n, options);
}

Digraph build_commuting(const Group& g, const BuildOptions& options) {
  Subgroup z = center(g);
  return build_engel_graph(g, complement_of(g, membership(g, z.ids())), GraphKind::Commuting, 1, options);
}

PrimeGraph prime_graph_from_orders(std::uint64_t group_order, const std::set<std::uint64_t>& element_orders) {
  PrimeGraph pg;
  pg.primes = prime_divisors(group_order);
  const std::size_t k = pg.primes.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::uint64_t rs = pg.primes[i] * pg.primes[j];
      bool edge = std::any_of(element_orders.begin(), element_orders.end(),
                              [&](std::uint64_t o) { return o % rs == 0; });
      if (edge) {
        adj[i][j] = adj[j][i] = true;
        pg.edges.emplace_back(pg.primes[i], pg.primes[j]);
      }
    }
  }
  std::vector<bool> done(k, false);
  for (std::size_t s = 0; s < k; ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> queue{s};
    done[s] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t t = 0; t < k; ++t) {
        if (adj[queue[q]][t] && !done[t]) {
          done[t] = true;
          queue.push_back(t);
        }
      }
    }
    std::vector<std::uint64_t> comp;
    for (std::size_t i : queue) comp.push_back(pg.primes[i]);
    std::sort(comp.begin(), comp.end());
    if (comp.front() == 2) pg.pi1 = comp;
    pg.components.push_back(std::move(comp));
  }
  std::sort(pg.components.begin(), pg.components.end());
  return pg;
}

PrimeGraph build_prime_graph(const Group& g) {
  std::set<std::uint64_t> orders;
  for (ElementId a = 0; a < g.order(); ++a) orders.insert(g.element_order(a));
  return prime_graph_from_orders(g.order(), orders);
}

namespace {

void even_partitions(unsigned remaining, unsigned max_part, std::uint64_t lcm_so_far, unsigned even_cycles,
                     std::set<std::uint64_t>& out) {
  if (remaining == 0) {
    if (even_cycles % 2 == 0) out.insert(lcm_so_far);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    even_partitions(remaining - part, part, std::lcm(lcm_so_far, std::uint64_t{part}),
                    even_cycles + (part % 2 == 0 ? 1 : 0), out);
  }
}

}  // namespace

std::set<std::uint64_t> alternating_element_orders(unsigned n) {
  if (n < 1 || n > 40) throw std::invalid_argument("alternating_element_orders supports 1 <= n <= 40");
  std::set<std::uint64_t> out;
  even_partitions(n, n, 1, 0, out);
  return out;
}

std::uint64_t alternating_order(unsigned n) {
  if (n < 2 || n > 20) throw std::invalid_argument("alternating_order supports 2 <= n <= 20");
  std::uint64_t f = 1;
  for (unsigned i = 3; i <= n; ++i) f *= i;
  return f;
}

AltIdentityResult alt_identity(unsigned p) {
  if (p < 7 || p > 23 || !is_prime(p)) {
    throw std::invalid_argument("alt identity needs a prime 7 <= p <= 23, got " + std::to_string(p));
  }
  std::string long_cycle = "(";
  for (unsigned i = 1; i <= p; ++i) long_cycle += std::to_string(i) + (i < p ? "," : ")");
  Permutation x = Permutation::from_cycles(long_cycle, p);
  Permutation y = Permutation::from_cycles("(1,3,5)", p);
  Permutation c = commutator(y, x);
  AltIdentityResult r;
  r.commutator = c.to_cycles();
  r.matches = c == Permutation::from_cycles("(1,5,3)(2,4,6)", p);
  r.engel2 = commutator(commutator(x, y), y).is_identity();
  return r;
}

bool alt_identity_check(unsigned p) {
  AltIdentityResult r = alt_identity(p);
  return r.matches && r.engel2;
}

}  // namespace engelgraph

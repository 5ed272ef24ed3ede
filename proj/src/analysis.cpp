#include "engelgraph/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "engelgraph/numtheory.hpp"
#include "engelgraph/structure.hpp"

namespace engelgraph {

namespace {

bool is_prime_power(std::uint64_t q) {
  auto f = factorize(q);
  return f.size() == 1;
}

std::optional<std::uint64_t> psl2_field_size(std::uint64_t order) {
  for (std::uint64_t q = 4; q * (q * q - 1) / 2 <= order; ++q) {
    if (!is_prime_power(q)) continue;
    std::uint64_t o = q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
    if (o == order) return q;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> suzuki_field_size(std::uint64_t order) {
  for (std::uint64_t q = 8; q * q * (q * q + 1) * (q - 1) <= order; q *= 4) {
    if (q * q * (q * q + 1) * (q - 1) == order) return q;
  }
  return std::nullopt;
}

std::string diameter_text(const std::optional<std::uint32_t>& d) {
  return d ? std::to_string(*d) : std::string("infinite");
}

}  // namespace

GraphSummary summarize(const Digraph& d, unsigned jobs) {
  GraphSummary s;
  s.vertex_count = d.size();
  s.arc_count = d.arc_count();
  SccResult c = scc(d);
  s.scc_count = c.component_count;
  s.strongly_connected = c.strongly_connected;
  DiameterResult dm = diameter(d, jobs);
  s.diameter = dm.diameter;
  if (dm.witness) s.witness = std::pair(d.vertices()[dm.witness->first], d.vertices()[dm.witness->second]);
  s.degenerate = c.degenerate;
  return s;
}

std::vector<CommutingComponent> commuting_components(const Digraph& commuting) {
  std::vector<CommutingComponent> out;
  for (const auto& comp : undirected_components(commuting)) {
    out.push_back({comp.size(), component_diameter(commuting, comp)});
  }
  return out;
}

ConnectivityPrediction predict_connectivity(const Group& g) {
  ConnectivityPrediction p;
  Subgroup z = hypercenter(g);
  if (z.is_whole()) {
    p.degenerate = true;
    p.reason = "nilpotent";
    return p;
  }
  auto decide = [&](const Group& q) {
    if (is_frobenius(q)) return std::string("frobenius");
    if (is_simple(q)) {
      if (auto f = psl2_field_size(q.order()); f && (*f % 2 == 0 || *f % 8 == 5)) return std::string("psl2");
      if (suzuki_field_size(q.order())) return std::string("suzuki");
      return std::string("none");
    }
    if (is_almost_simple(q)) {
      Subgroup socle = minimal_normal_subgroups(q).front();
      if (auto s = suzuki_field_size(socle.order())) {
        std::uint64_t index = q.order() / socle.order();
        if (is_prime(index) && index % 2 == 1 && (std::uint64_t{1} << index) == *s) return std::string("aut_suzuki");
      }
    }
    return std::string("none");
  };
  p.reason = z.is_trivial() ? decide(g) : decide(quotient(g, z).group);
  p.disconnected = p.reason != "none";
  return p;
}

AnalysisReport analyze(const Group& g, const BuildOptions& options) {
  AnalysisReport r;
  r.name = g.name();
  r.order = g.order();
  r.degree = g.degree();
  Subgroup z = hypercenter(g);
  Subgroup f = fitting(g);
  r.z_infty_order = z.order();
  r.fitting_order = f.order();
  r.nilpotent = z.is_whole();
  r.soluble = is_soluble(g);
  r.simple = is_simple(g);
  r.almost_simple = is_almost_simple(g);
  r.frobenius = is_frobenius(g).has_value();
  r.fstar_eq_f = fstar_equals_fitting(g);

  Digraph gamma = build_gamma(g, options);
  r.gamma = summarize(gamma, options.jobs);
  if (r.gamma.witness) {
    r.witness_from = g.element(r.gamma.witness->first).to_cycles();
    r.witness_to = g.element(r.gamma.witness->second).to_cycles();
  }
  r.commuting = commuting_components(build_commuting(g, options));
  r.prime_graph = build_prime_graph(g);
  r.j_order = compute_J(g).order();
  if (r.nilpotent) {
    r.jstar_note = "G nilpotent: J = J* = G";
  } else if (f.is_trivial()) {
    r.jstar_note = "F(G) = 1: J = 1 and J* = F*(G) != 1";
  } else {
    r.jstar_note = j_equals_jstar(g) ? "J = J*" : "J != J*";
  }
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json gamma = {
      {"vertex_count", r.gamma.vertex_count},
      {"arc_count", r.gamma.arc_count},
      {"scc_count", r.gamma.scc_count},
      {"strongly_connected", r.gamma.strongly_connected},
      {"degenerate", r.gamma.degenerate},
  };
  gamma["diameter"] = r.gamma.diameter ? json(*r.gamma.diameter) : json("infinite");
  gamma["witness_pair"] = r.gamma.witness ? json::array({r.witness_from, r.witness_to}) : json(nullptr);

  json commuting = json::array();
  for (const auto& c : r.commuting) commuting.push_back({{"component_size", c.size}, {"diameter", c.diameter}});

  json edges = json::array();
  for (const auto& [a, b] : r.prime_graph.edges) edges.push_back({a, b});

  return json{
      {"group", {{"name", r.name}, {"order", r.order}, {"degree", r.degree}}},
      {"z_infty_order", r.z_infty_order},
      {"fitting_order", r.fitting_order},
      {"flags",
       {{"nilpotent", r.nilpotent},
        {"soluble", r.soluble},
        {"simple", r.simple},
        {"almost_simple", r.almost_simple},
        {"frobenius", r.frobenius},
        {"fstar_eq_f", r.fstar_eq_f}}},
      {"gamma", gamma},
      {"commuting", commuting},
      {"prime_graph",
       {{"primes", r.prime_graph.primes},
        {"edges", edges},
        {"components", r.prime_graph.components},
        {"pi1", r.prime_graph.pi1}}},
      {"j_order", r.j_order},
      {"jstar_note", r.jstar_note},
  };
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << r.name << ": order " << r.order << ", degree " << r.degree << "\n";
  out << "  |Z_inf| = " << r.z_infty_order << ", |F| = " << r.fitting_order << ", |J| = " << r.j_order << " ("
      << r.jstar_note << ")\n";
  out << "  nilpotent " << yn(r.nilpotent) << ", soluble " << yn(r.soluble) << ", simple " << yn(r.simple)
      << ", almost simple " << yn(r.almost_simple) << ", frobenius " << yn(r.frobenius) << ", F* = F "
      << yn(r.fstar_eq_f) << "\n";
  out << "  gamma: " << r.gamma.vertex_count << " vertices, " << r.gamma.arc_count << " arcs, " << r.gamma.scc_count
      << " strong components, diameter " << diameter_text(r.gamma.diameter);
  if (r.gamma.witness) out << " (" << r.witness_from << " -> " << r.witness_to << ")";
  if (r.gamma.degenerate) out << " [degenerate]";
  out << "\n  commuting components (size:diameter):";
  for (const auto& c : r.commuting) out << " " << c.size << ":" << c.diameter;
  out << "\n  prime graph components:";
  for (const auto& comp : r.prime_graph.components) {
    out << " {";
    for (std::size_t i = 0; i < comp.size(); ++i) out << (i ? "," : "") << comp[i];
    out << "}";
  }
  out << "\n";
  return out.str();
}

namespace {

// Ladder for a group with trivial hypercenter and strongly connected Gamma.
void trace_centerless(const Group& h, ProofTrace& t) {
  if (!fstar_equals_fitting(h)) {
    if (is_almost_simple(h)) {
      t.branch = "almost simple";
      t.bound = 16;
    } else {
      t.branch = "F* != F, not almost simple: central product of F and E(G)";
      t.bound = 7;
    }
    t.steps.push_back("F*(G) != F(G)");
    return;
  }
  t.steps.push_back("F*(G) = F(G)");
  if (j_equals_jstar(h)) {
    t.branch = "J = J*: G is not Frobenius, so no two vertices are at distance > 4";
    t.bound = 4;
    return;
  }
  t.steps.push_back("J != J*");
  Subgroup f = fitting(h);
  Subgroup j = compute_J(h);
  if (j == f) {
    t.branch = "J = F(G): Delta(J*) has diameter at most 8";
    t.bound = 12;
  } else if (!is_frobenius_with_kernel(h, j, f)) {
    t.branch = "J > F(G) and J is not Frobenius";
    t.bound = 8;
  } else {
    t.branch = "J Frobenius with kernel F(G): split on a Sylow 2-subgroup of J*/F(G)";
    t.bound = 8;
  }
}

}  // namespace

ProofTrace trace_proof(const Group& g, const BuildOptions& options) {
  ProofTrace t;
  Subgroup z = hypercenter(g);
  if (z.is_whole()) {
    t.branch = "nilpotent: Gamma(G) is empty";
    t.degenerate = true;
    t.measured = 0;
    return t;
  }
  DiameterResult dm = diameter(build_gamma(g, options), options.jobs);
  t.measured = dm.diameter;
  if (!dm.diameter) {
    ConnectivityPrediction p = predict_connectivity(g);
    t.branch = "not strongly connected: G/Z_inf(G) is of type " + p.reason;
    t.holds = p.disconnected;
    if (!p.disconnected) t.steps.push_back("classification predicts a strongly connected graph");
    return t;
  }
  if (z.is_trivial()) {
    t.steps.push_back("Z_inf(G) = 1");
    trace_centerless(g, t);
  } else {
    QuotientMap q = quotient(g, z);
    DiameterResult dq = diameter(build_gamma(q.group, options), options.jobs);
    bool equal = dq.diameter == dm.diameter;
    t.steps.push_back("Z_inf(G) != 1 (order " + std::to_string(z.order()) + "): reduce to G/Z_inf(G), diameter " +
                      diameter_text(dq.diameter) + (equal ? " (equal)" : " (DIFFERENT)"));
    if (!equal) t.holds = false;
    trace_centerless(q.group, t);
  }
  if (t.bound && *t.measured > *t.bound) t.holds = false;
  return t;
}

std::string to_text(const ProofTrace& t) {
  std::ostringstream out;
  for (const auto& s : t.steps) out << "step: " << s << "\n";
  out << "branch: " << t.branch << "\n";
  out << "bound: " << (t.bound ? std::to_string(*t.bound) : std::string("none")) << "\n";
  out << "measured diameter: " << diameter_text(t.measured) << (t.degenerate ? " [degenerate]" : "") << "\n";
  out << "status: " << (t.holds ? "holds" : "VIOLATED") << "\n";
  return out.str();
}

EngelPath engel_path(const Group& g, ElementId from, ElementId to, const BuildOptions& options) {
  Subgroup z = hypercenter(g);
  for (ElementId e : {from, to}) {
    if (z.contains(e)) throw std::invalid_argument("not a vertex: " + g.element(e).to_cycles() + " lies in Z_inf(G)");
  }
  Digraph d = build_gamma(g, options);
  const std::size_t s = *d.index_of(from), t = *d.index_of(to);
  std::vector<std::size_t> parent(d.size(), d.size());
  std::vector<bool> seen(d.size(), false);
  std::vector<std::size_t> queue{s};
  seen[s] = true;
  for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
    std::size_t u = queue[head];
    for (std::size_t v = 0; v < d.size(); ++v) {
      if (!seen[v] && d.has_arc(u, v)) {
        seen[v] = true;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  EngelPath path;
  if (!seen[t]) return path;
  path.reachable = true;
  for (std::size_t v = t; v != s; v = parent[v]) path.vertices.push_back(d.vertices()[v]);
  path.vertices.push_back(from);
  std::reverse(path.vertices.begin(), path.vertices.end());
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    path.depths.push_back(*arc_depth(g, path.vertices[i], path.vertices[i + 1]));
  }
  return path;
}

std::string to_text(const Group& g, const EngelPath& path) {
  if (!path.reachable) return "unreachable\n";
  std::ostringstream out;
  out << "path length " << path.depths.size() << "\n";
  out << "  " << g.element(path.vertices.front()).to_cycles() << "\n";
  for (std::size_t i = 0; i < path.depths.size(); ++i) {
    out << "  -> " << g.element(path.vertices[i + 1]).to_cycles() << "  [depth " << path.depths[i] << "]\n";
  }
  return out.str();
}

}  // namespace engelgraph

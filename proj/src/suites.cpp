#include "engelgraph/suites.hpp"

#include <algorithm>
#include <functional>
#include <cctype>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "engelgraph/analysis.hpp"
#include "engelgraph/digraph.hpp"
#include "engelgraph/engel.hpp"
#include "engelgraph/numtheory.hpp"
#include "engelgraph/parallel.hpp"
#include "engelgraph/structure.hpp"

namespace engelgraph {

using nlohmann::json;

namespace {

namespace anchor {
constexpr const char* kBound16 = "at most $16$";
constexpr const char* kBound12 = "at most $12$";
constexpr const char* kSoluble = "diameter at most $4$";
constexpr const char* kSolubleAttained = "there exist soluble groups attaining the bound $4$";
constexpr const char* kFrobenius = "is a Frobenius group";
constexpr const char* kPsl2 = "$q\\ge 4$ even or with $q\\equiv 5\\pmod 8$";
constexpr const char* kQuotient =
    "$\\mathrm{diam}(\\Gamma(G/{\\bf Z}_\\infty(G)))= \\mathrm{diam}(\\Gamma(G))$";
constexpr const char* kNormal = "$\\mathrm{diam}(\\Delta(G))\\le k+4$";
constexpr const char* kCentral = "$\\mathrm{diam}(\\Delta(G))\\le 3$";
constexpr const char* kLeftEngel = "the set of left Engel elements";
constexpr const char* kCommutingDiameter = "diameter at most 10";
constexpr const char* kHall = "abelian Hall $\\psi$-subgroup $H$ which is isolated";
constexpr const char* kEvenComponent =
    "unique connected component containing all the elements of even order";
constexpr const char* kAlt56 = "the connected components of the prime graph are $\\{2\\},\\{3\\}$ and $\\{5\\}$";
constexpr const char* kAlt7 = "are $\\{2,3\\},\\{5\\}$ and $\\{7\\}$";
constexpr const char* kAltLarge = "there exists a prime $p$ with $n\\in \\{p,p+1,p+2\\}$";
constexpr const char* kPrimeComponent = "In particular, $\\psi$ is a connected component of the prime graph";
constexpr const char* kTable1 = "appears in Table~$\\ref{table1}$";
constexpr const char* kChain = "Then $\\ell\\le 2$";
constexpr const char* kTheta = "is surjective and the image";
constexpr const char* kJStar = "If $J = J^\\ast$, then $G$ is a Frobenius group";
constexpr const char* kOddCentralizer = "has odd order and it is metacyclic";
constexpr const char* kAltIdentity = "(1,5,3)(2,4,6)";
constexpr const char* kProductOfSimples = "diameter at most $8$";
constexpr const char* kHypercenter =
    "for every $y\\in G$, there exists $n\\in\\mathbb{N}$ with $[x,_ny]=[y,_nx]=1$";
constexpr const char* kSubgraph = "$\\Gamma_n(G)$ is a subgraph of $\\Gamma_{n+1}(G)$";
constexpr const char* kConjugation = "arc sets are invariant under automorphisms";
}  // namespace anchor

constexpr const char* kNoInstance = "no instance in catalog";
constexpr const char* kBeyondBudget = "full graph beyond arc-test budget";

Claim verdict(std::string id, const char* anchor, bool pass, json measured, json bound = nullptr) {
  return {std::move(id), anchor, pass ? ClaimStatus::Pass : ClaimStatus::Fail, "", std::move(measured),
          std::move(bound)};
}

Claim skipped(std::string id, const char* anchor, std::string reason) {
  return {std::move(id), anchor, ClaimStatus::Skipped, std::move(reason), nullptr, nullptr};
}

json diameter_json(const std::optional<std::uint32_t>& d) {
  return d ? json(*d) : json("infinite");
}

template <class T>
struct Lazy {
  std::optional<T> value;
  template <class F>
  const T& get(F&& make) {
    if (!value) value.emplace(make());
    return *value;
  }
};

}  // namespace

// One catalog group and everything the suites derive from it. Entries are
// heap allocated so the Subgroups' parent pointers stay valid.
struct BenchEntry {
  GroupSpec spec;
  BuildOptions build;

  Lazy<Group> group_;
  Lazy<Subgroup> hyper_, center_, fit_;
  Lazy<bool> soluble_, simple_, fstar_, quotient_almost_simple_;
  Lazy<ConnectivityPrediction> prediction_;
  Lazy<Digraph> gamma_, delta_, commuting_;
  Lazy<SccResult> gamma_scc_, delta_scc_;
  Lazy<DiameterResult> gamma_diam_, delta_diam_;
  Lazy<PrimeGraph> prime_;
  Lazy<std::vector<Subgroup>> closures_;

  const std::string& name() const { return spec.name; }
  const Group& group() { return group_.get([&] { return engelgraph::build(spec); }); }
  const Subgroup& hypercenter() { return hyper_.get([&] { return engelgraph::hypercenter(group()); }); }
  const Subgroup& center() { return center_.get([&] { return engelgraph::center(group()); }); }
  const Subgroup& fitting() { return fit_.get([&] { return engelgraph::fitting(group()); }); }
  bool nilpotent() { return hypercenter().is_whole(); }
  bool soluble() { return soluble_.get([&] { return is_soluble(group()); }); }
  bool simple() { return simple_.get([&] { return is_simple(group()); }); }
  bool fstar_eq_f() { return fstar_.get([&] { return fstar_equals_fitting(group()); }); }
  bool quotient_almost_simple() {
    return quotient_almost_simple_.get([&] {
      if (hypercenter().is_trivial()) return is_almost_simple(group());
      return is_almost_simple(quotient(group(), hypercenter()).group);
    });
  }
  const ConnectivityPrediction& prediction() {
    return prediction_.get([&] { return predict_connectivity(group()); });
  }
  bool fits_budget() {
    std::uint64_t n = group().order();
    return n * n <= build.budget;
  }
  const Digraph& gamma() { return gamma_.get([&] { return build_gamma(group(), build); }); }
  const SccResult& gamma_scc() { return gamma_scc_.get([&] { return scc(gamma()); }); }
  const DiameterResult& gamma_diameter() {
    return gamma_diam_.get([&] { return diameter(gamma(), build.jobs); });
  }
  // Delta(G) and Gamma(G) coincide when the hypercenter is trivial.
  const Digraph& delta() {
    if (hypercenter().is_trivial()) return gamma();
    return delta_.get([&] { return build_delta(group(), build); });
  }
  const SccResult& delta_scc() {
    if (hypercenter().is_trivial()) return gamma_scc();
    return delta_scc_.get([&] { return scc(delta()); });
  }
  const DiameterResult& delta_diameter() {
    if (hypercenter().is_trivial()) return gamma_diameter();
    return delta_diam_.get([&] { return diameter(delta(), build.jobs); });
  }
  const Digraph& commuting() { return commuting_.get([&] { return build_commuting(group(), build); }); }
  const PrimeGraph& prime_graph() { return prime_.get([&] { return build_prime_graph(group()); }); }
  // Distinct normal closures of the non-identity class representatives, by order then ids.
  const std::vector<Subgroup>& normal_closures() {
    return closures_.get([&] {
      const Group& g = group();
      std::vector<Subgroup> out;
      for (const auto& cls : g.conjugacy_classes().classes) {
        if (cls.front() == kIdentity) continue;
        ElementId rep = cls.front();
        Subgroup n = normal_closure(g, std::span<const ElementId>(&rep, 1));
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
      }
      std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return std::lexicographical_compare(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end());
      });
      return out;
    });
  }
};

struct Workbench::Impl {
  Tier tier;
  unsigned jobs;
  std::uint64_t budget;
  std::vector<std::unique_ptr<BenchEntry>> entries;

  BenchEntry* find(const std::string& name) {
    for (auto& e : entries)
      if (e->name() == name) return e.get();
    return nullptr;
  }

  // Runs fn on every entry in a work pool; per-entry claims are gathered in
  // catalog order regardless of completion order.
  std::vector<Claim> per_entry(const std::function<void(BenchEntry&, std::vector<Claim>&)>& fn) {
    std::vector<std::vector<Claim>> slots(entries.size());
    parallel_for(entries.size(), jobs, [&](std::size_t i) { fn(*entries[i], slots[i]); });
    std::vector<Claim> out;
    for (auto& s : slots)
      for (auto& c : s) out.push_back(std::move(c));
    return out;
  }
};

Workbench::Workbench(const VerifyOptions& options) : impl_(std::make_unique<Impl>()) {
  impl_->tier = options.tier;
  impl_->jobs = std::max(1u, options.jobs);
  std::uint64_t fallback = options.tier == Tier::Fast ? 20'000'000 : 100'000'000;
  impl_->budget = options.budget ? *options.budget : budget_from_env(fallback);
  // Graph builds inside a pooled item stay single-threaded; the pool already
  // uses the requested number of workers.
  for (auto& spec : catalog_tier(options.tier)) {
    auto e = std::make_unique<BenchEntry>();
    e->spec = spec;
    e->build = {impl_->budget, 1};
    impl_->entries.push_back(std::move(e));
  }
}

Workbench::~Workbench() = default;

namespace {

using Impl = Workbench::Impl;

const std::map<std::string, bool>& expected_disconnected() {
  static const std::map<std::string, bool> m = {
      {"S3", true},      {"D10", true},      {"AGL1(5)", true},  {"AGL1(7)", true},  {"SL(2,3)", true},
      {"A5", true},      {"PSL2(5)", true},  {"PSL2(4)", true},  {"PSL2(8)", true},  {"PSL2(13)", true},
      {"S4", false},     {"S5", false},      {"S6", false},      {"A6", false},      {"A7", false},
      {"PSL2(7)", false}, {"PSL2(11)", false}, {"M11", false}};
  return m;
}

// Certificate that Gamma(G) is not strongly connected without building it:
// for an isolated odd prime p of the prime graph and a Sylow p-subgroup P,
// no arc leaves P \ {1}, so that proper vertex set is a sink.
std::optional<json> sylow_sink_certificate(BenchEntry& e) {
  const Group& g = e.group();
  const Subgroup& z = e.hypercenter();
  for (const auto& comp : e.prime_graph().components) {
    if (comp.size() != 1 || comp[0] == 2) continue;
    Subgroup p = sylow(g, comp[0]);
    bool sink = true;
    for (ElementId h : p.ids()) {
      if (h == kIdentity || z.contains(h)) continue;
      for (ElementId y = 0; y < g.order() && sink; ++y) {
        if (p.contains(y) || z.contains(y)) continue;
        if (is_arc(g, h, y)) sink = false;
      }
      if (!sink) break;
    }
    if (sink) return json{{"prime", comp[0]}, {"sink_size", p.order() - 1}};
  }
  return std::nullopt;
}

std::vector<Claim> suite_classification(Impl& wb) {
  return wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    const auto& pred = e.prediction();
    const char* a = pred.reason == "psl2" ? anchor::kPsl2 : anchor::kFrobenius;
    std::string id = "classification/" + e.name();
    json bound{{"prediction", pred.reason}, {"disconnected", pred.disconnected}};
    auto it = expected_disconnected().find(e.name());
    if (it != expected_disconnected().end()) bound["expected_disconnected"] = it->second;
    bool expected_ok = it == expected_disconnected().end() || it->second == pred.disconnected;
    if (e.fits_budget()) {
      const auto& c = e.gamma_scc();
      json measured{{"vertex_count", e.gamma().size()},
                    {"scc_count", c.component_count},
                    {"strongly_connected", c.strongly_connected},
                    {"degenerate", c.degenerate && e.gamma().size() == 0}};
      bool pass;
      if (pred.degenerate) {
        pass = e.gamma().size() == 0;
      } else {
        pass = c.strongly_connected == !pred.disconnected && expected_ok;
      }
      out.push_back(verdict(id, a, pass, measured, bound));
    } else if (pred.disconnected) {
      auto cert = sylow_sink_certificate(e);
      json measured{{"certificate", cert ? *cert : json(nullptr)}, {"strongly_connected", !cert}};
      out.push_back(verdict(id, a, cert.has_value() && expected_ok, measured, bound));
    } else {
      out.push_back(skipped(id, a, kBeyondBudget));
    }
  });
}

std::vector<Claim> suite_diameter(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (e.nilpotent()) return;
    if (!e.fits_budget()) {
      out.push_back(skipped("diameter/le16/" + e.name(), anchor::kBound16, kBeyondBudget));
      return;
    }
    const auto& d = e.gamma_diameter();
    if (!d.diameter || d.degenerate) return;
    json m{{"diameter", *d.diameter}};
    out.push_back(verdict("diameter/le16/" + e.name(), anchor::kBound16, *d.diameter <= 16, m, 16));
    if (!e.quotient_almost_simple())
      out.push_back(verdict("diameter/le12/" + e.name(), anchor::kBound12, *d.diameter <= 12, m, 12));
  });
  std::optional<std::uint32_t> best;
  json at = json::array();
  for (auto& e : wb.entries) {
    if (!e->gamma_diam_.value) continue;
    const auto& d = *e->gamma_diam_.value;
    if (!d.diameter || d.degenerate) continue;
    if (!best || *d.diameter > *best) {
      best = *d.diameter;
      at = json::array();
    }
    if (*d.diameter == *best) at.push_back(e->name());
  }
  if (best) {
    claims.push_back(verdict("diameter/max", anchor::kBound16, *best <= 16,
                             {{"diameter", *best}, {"groups", at}}, 16));
  } else {
    claims.push_back(skipped("diameter/max", anchor::kBound16, kNoInstance));
  }
  return claims;
}

std::vector<Claim> suite_soluble(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (e.nilpotent() || !e.fits_budget() || !e.soluble()) return;
    const auto& d = e.gamma_diameter();
    if (!d.diameter || d.degenerate) return;
    out.push_back(verdict("soluble/le4/" + e.name(), anchor::kSoluble, *d.diameter <= 4,
                          {{"diameter", *d.diameter}}, 4));
  });
  if (claims.empty()) {
    claims.push_back(skipped("soluble/attained", anchor::kSolubleAttained, kNoInstance));
    return claims;
  }
  json at = json::array();
  for (auto& c : claims)
    if (c.measured["diameter"] == 4) at.push_back(c.id.substr(std::string("soluble/le4/").size()));
  claims.push_back(verdict("soluble/attained", anchor::kSolubleAttained, !at.empty(), {{"groups", at}}, 4));
  return claims;
}

std::vector<Claim> suite_quotient(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (e.nilpotent() || e.hypercenter().is_trivial() || !e.fits_budget()) return;
    QuotientMap q = quotient(e.group(), e.hypercenter());
    Digraph gq = build_gamma(q.group, e.build);
    DiameterResult dq = diameter(gq);
    const auto& dg = e.gamma_diameter();
    json m{{"diameter", diameter_json(dg.diameter)},
           {"quotient_order", q.group.order()},
           {"quotient_diameter", diameter_json(dq.diameter)}};
    out.push_back(verdict("quotient/" + e.name(), anchor::kQuotient, dg.diameter == dq.diameter, m));
  });
  auto compare = [&](const std::string& a, const std::string& b, bool by_diameter) {
    std::string id = "quotient/" + a + "-vs-" + b;
    BenchEntry* ea = wb.find(a);
    BenchEntry* eb = wb.find(b);
    if (!ea || !eb) return;
    const auto& da = ea->gamma_diameter();
    const auto& db = eb->gamma_diameter();
    bool sa = ea->gamma_scc().strongly_connected, sb = eb->gamma_scc().strongly_connected;
    json m{{a, {{"diameter", diameter_json(da.diameter)}, {"strongly_connected", sa}}},
           {b, {{"diameter", diameter_json(db.diameter)}, {"strongly_connected", sb}}}};
    claims.push_back(verdict(id, anchor::kQuotient, by_diameter ? da.diameter == db.diameter : sa == sb, m));
  };
  compare("C2xS4", "S4", true);
  compare("SL(2,3)", "A4", false);
  if (claims.empty()) claims.push_back(skipped("quotient", anchor::kQuotient, kNoInstance));
  return claims;
}

// Largest Delta(G)-distance between distinct elements of N \ {1}; nullopt if
// some pair is unreachable.
std::optional<std::int32_t> max_distance_within(BenchEntry& e, const Subgroup& n) {
  const Digraph& d = e.delta();
  if (n.is_whole()) {
    const auto& dm = e.delta_diameter();
    if (!dm.diameter) return std::nullopt;
    return static_cast<std::int32_t>(*dm.diameter);
  }
  std::int32_t k = 0;
  for (ElementId a : n.ids()) {
    if (a == kIdentity) continue;
    auto dist = bfs_distances(d, *d.index_of(a));
    for (ElementId b : n.ids()) {
      if (b == kIdentity || b == a) continue;
      std::int32_t x = dist[*d.index_of(b)];
      if (x < 0) return std::nullopt;
      k = std::max(k, x);
    }
  }
  return k;
}

std::vector<Claim> suite_normal_subgroup(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (e.nilpotent() || !e.fits_budget()) return;
    json instances = json::array();
    bool pass = true;
    const auto& dm = e.delta_diameter();
    for (const auto& n : e.normal_closures()) {
      if (is_nilpotent(as_group(n, "N"))) continue;
      auto k = max_distance_within(e, n);
      if (!k) continue;
      instances.push_back({{"order", n.order()}, {"k", *k}});
      if (!dm.diameter || static_cast<std::int32_t>(*dm.diameter) > *k + 4) pass = false;
    }
    if (instances.empty()) return;
    out.push_back(verdict("normal-subgroup/" + e.name(), anchor::kNormal, pass,
                          {{"delta_diameter", diameter_json(dm.diameter)}, {"subgroups", instances}},
                          "k+4"));
  });
  if (claims.empty()) claims.push_back(skipped("normal-subgroup", anchor::kNormal, kNoInstance));
  return claims;
}

bool centralize(const Group& g, const Subgroup& x, const Subgroup& y) {
  for (ElementId a : x.generators())
    for (ElementId b : y.generators())
      if (!g.commute(a, b)) return false;
  return true;
}

std::vector<Claim> suite_central_product(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (!e.fits_budget() || e.group().order() == 1) return;
    const Group& g = e.group();
    std::vector<Subgroup> cand = e.normal_closures();
    Subgroup whole = whole_group(g);
    if (std::find(cand.begin(), cand.end(), whole) == cand.end()) cand.push_back(whole);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      for (std::size_t j = i; j < cand.size(); ++j) {
        const Subgroup &x = cand[i], &y = cand[j];
        if (!centralize(g, x, y)) continue;
        if (x.order() * y.order() / intersection(x, y).order() != g.order()) continue;
        const auto& c = e.delta_scc();
        const auto& dm = e.delta_diameter();
        bool pass = c.strongly_connected && dm.diameter && *dm.diameter <= 3;
        out.push_back(verdict("central-product/" + e.name(), anchor::kCentral, pass,
                              {{"X_order", x.order()},
                               {"Y_order", y.order()},
                               {"delta_diameter", diameter_json(dm.diameter)}},
                              3));
        return;
      }
    }
  });
  if (claims.empty()) claims.push_back(skipped("central-product", anchor::kCentral, kNoInstance));
  return claims;
}

std::vector<Claim> suite_fitting_sink(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    const Group& g = e.group();
    const Subgroup& f = e.fitting();
    if (f.is_trivial()) return;
    std::uint64_t checked = 0, missing = 0;
    for (ElementId x : f.ids()) {
      if (x == kIdentity) continue;
      for (ElementId y = 0; y < g.order(); ++y) {
        ++checked;
        if (engel_trace(g, y, x).outcome != TraceOutcome::ReachesIdentity) ++missing;
      }
    }
    out.push_back(verdict("fitting-sink/" + e.name(), anchor::kLeftEngel, missing == 0,
                          {{"fitting_order", f.order()}, {"pairs", checked}, {"missing_arcs", missing}}, 0));
  });
  if (claims.empty()) claims.push_back(skipped("fitting-sink", anchor::kLeftEngel, kNoInstance));
  return claims;
}

std::uint64_t hall_order(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  std::uint64_t h = 1;
  for (auto p : primes) h *= p_part(n, p);
  return h;
}

bool is_prime_graph_component(const PrimeGraph& pg, const std::vector<std::uint64_t>& primes) {
  return std::find(pg.components.begin(), pg.components.end(), primes) != pg.components.end();
}

std::vector<Claim> suite_commuting(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    const Group& g = e.group();
    if (g.order() == 1 || !e.center().is_trivial()) return;
    bool hall_applies = !e.soluble();
    std::size_t involution_classes = 0;
    for (const auto& cls : g.conjugacy_classes().classes)
      if (g.element_order(cls.front()) == 2) ++involution_classes;

    if (!e.fits_budget()) {
      out.push_back(skipped("commuting/diameter/" + e.name(), anchor::kCommutingDiameter, kBeyondBudget));
      if (involution_classes >= 2)
        out.push_back(skipped("commuting/even-component/" + e.name(), anchor::kEvenComponent, kBeyondBudget));
      if (!hall_applies) return;
      // Centralizer form: P abelian with C_G(x) = P for every x in P \ {1}
      // makes P \ {1} a whole, isolated component.
      json found = json::array();
      bool pass = true;
      for (const auto& comp : e.prime_graph().components) {
        if (comp[0] == 2 || comp.size() != 1) continue;
        Subgroup p = sylow(g, comp[0]);
        bool ok = is_abelian(as_group(p, "P"));
        for (ElementId x : p.ids()) {
          if (!ok) break;
          if (x != kIdentity) ok = centralizer(g, std::span<const ElementId>(&x, 1)) == p;
        }
        found.push_back({{"primes", comp}, {"size", p.order() - 1}, {"isolated_abelian", ok}});
        pass = pass && ok;
      }
      out.push_back(verdict("commuting/hall/" + e.name(), anchor::kHall, pass, {{"odd_components", found}}));
      return;
    }

    const Digraph& d = e.commuting();
    auto comps = undirected_components(d);
    std::uint32_t worst = 0;
    for (const auto& c : comps) worst = std::max(worst, component_diameter(d, c));
    out.push_back(verdict("commuting/diameter/" + e.name(), anchor::kCommutingDiameter, worst <= 10,
                          {{"components", comps.size()}, {"max_component_diameter", worst}}, 10));

    if (hall_applies) {
      json found = json::array();
      bool pass = true;
      for (const auto& c : comps) {
        std::vector<ElementId> ids{kIdentity};
        bool odd = true;
        std::set<std::uint64_t> primes;
        for (auto v : c) {
          ElementId x = d.vertices()[v];
          ids.push_back(x);
          if (g.element_order(x) % 2 == 0) odd = false;
          for (auto p : prime_divisors(g.element_order(x))) primes.insert(p);
        }
        if (!odd) continue;
        std::sort(ids.begin(), ids.end());
        std::vector<std::uint64_t> psi(primes.begin(), primes.end());
        bool subgroup = is_subgroup(g, ids);
        bool abelian = true;
        for (std::size_t i = 0; i < c.size() && abelian; ++i)
          for (std::size_t j = i + 1; j < c.size() && abelian; ++j) abelian = d.has_arc(c[i], c[j]);
        bool hall = ids.size() == hall_order(g.order(), psi);
        bool component = is_prime_graph_component(e.prime_graph(), psi);
        bool ok = subgroup && abelian && hall && component;
        pass = pass && ok;
        found.push_back({{"primes", psi},
                         {"size", c.size()},
                         {"subgroup", subgroup},
                         {"abelian", abelian},
                         {"hall", hall},
                         {"prime_graph_component", component}});
      }
      out.push_back(verdict("commuting/hall/" + e.name(), anchor::kHall, pass, {{"odd_components", found}}));
    }

    if (involution_classes >= 2) {
      std::size_t with_even = 0;
      for (const auto& c : comps) {
        bool even = std::any_of(c.begin(), c.end(),
                                [&](std::size_t v) { return g.element_order(d.vertices()[v]) % 2 == 0; });
        if (even) ++with_even;
      }
      out.push_back(verdict("commuting/even-component/" + e.name(), anchor::kEvenComponent, with_even == 1,
                            {{"involution_classes", involution_classes}, {"components_with_even_order", with_even}},
                            1));
    }
  });
  if (claims.empty()) claims.push_back(skipped("commuting", anchor::kCommutingDiameter, kNoInstance));
  return claims;
}

json components_json(const PrimeGraph& pg) { return pg.components; }

std::vector<Claim> suite_prime_graph(Impl& wb) {
  std::vector<Claim> claims;
  if (wb.tier == Tier::Fast) {
    struct Quoted {
      const char* name;
      unsigned n;
      std::vector<std::vector<std::uint64_t>> components;
      const char* anchor;
    };
    const std::vector<Quoted> quoted = {{"A5", 5, {{2}, {3}, {5}}, anchor::kAlt56},
                                        {"A6", 6, {{2}, {3}, {5}}, anchor::kAlt56},
                                        {"A7", 7, {{2, 3}, {5}, {7}}, anchor::kAlt7}};
    for (const auto& q : quoted) {
      BenchEntry* e = wb.find(q.name);
      if (!e) continue;
      PrimeGraph full = e->prime_graph();
      PrimeGraph stats = prime_graph_from_orders(alternating_order(q.n), alternating_element_orders(q.n));
      bool pass = full.components == q.components && stats.components == q.components;
      claims.push_back(verdict(std::string("prime-graph/Alt(") + std::to_string(q.n) + ")", q.anchor, pass,
                               {{"from_group", components_json(full)}, {"from_cycle_types", components_json(stats)}},
                               q.components));
    }
    for (unsigned n : {11u, 12u, 13u}) {
      PrimeGraph pg = prime_graph_from_orders(alternating_order(n), alternating_element_orders(n));
      // pi(T) = pi_1(T) u {p}: exactly one component besides pi_1, a single prime p with n - p in {0,1,2}.
      std::optional<std::uint64_t> p;
      if (pg.components.size() == 2) {
        for (const auto& c : pg.components)
          if (c != pg.pi1 && c.size() == 1 && n >= c[0] && n - c[0] <= 2) p = c[0];
      }
      json m{{"components", components_json(pg)}, {"pi1", pg.pi1}};
      if (p) m["p"] = *p;
      claims.push_back(verdict("prime-graph/Alt(" + std::to_string(n) + ")", anchor::kAltLarge, p.has_value(), m,
                               "pi(T) = pi_1(T) u {p}"));
    }
    return claims;
  }
  // Larger tiers: every odd component of the prime graph is a single prime
  // whose Sylow subgroup is abelian and self-centralizing elementwise.
  claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (!e.simple()) return;
    const Group& g = e.group();
    const PrimeGraph& pg = e.prime_graph();
    bool pass = true;
    for (const auto& comp : pg.components) {
      if (comp[0] == 2) continue;
      if (comp.size() != 1) {
        pass = false;
        continue;
      }
      Subgroup p = sylow(g, comp[0]);
      bool ok = is_abelian(as_group(p, "P"));
      for (ElementId x : p.ids())
        if (ok && x != kIdentity) ok = centralizer(g, std::span<const ElementId>(&x, 1)) == p;
      pass = pass && ok;
    }
    out.push_back(verdict("prime-graph/" + e.name(), anchor::kPrimeComponent, pass,
                          {{"components", components_json(pg)}, {"pi1", pg.pi1}}));
  });
  if (claims.empty()) claims.push_back(skipped("prime-graph", anchor::kPrimeComponent, kNoInstance));
  return claims;
}

// Names of a simple group under the families that head the rows of the
// exceptional automizer table.
struct Identity {
  enum Kind { Alt, Psl, M11, M12, Suzuki } kind;
  unsigned n = 0;
  std::uint64_t q = 0;
};

std::vector<Identity> identities(const std::string& name, std::uint64_t order) {
  std::vector<Identity> out;
  switch (order) {  // the small exceptional isomorphisms
    case 60: return {{Identity::Alt, 5}, {Identity::Psl, 2, 4}, {Identity::Psl, 2, 5}};
    case 168: return {{Identity::Psl, 2, 7}, {Identity::Psl, 3, 2}};
    case 360: return {{Identity::Alt, 6}, {Identity::Psl, 2, 9}};
    default: break;
  }
  if (name == "M11") return {{Identity::M11}};
  if (name == "M12") return {{Identity::M12}};
  if (name == "Sz(8)") return {{Identity::Suzuki, 0, 8}};
  if (name.size() >= 2 && name[0] == 'A' && std::isdigit(static_cast<unsigned char>(name[1])))
    return {{Identity::Alt, static_cast<unsigned>(std::stoul(name.substr(1)))}};
  if (name.rfind("PSL2(", 0) == 0) return {{Identity::Psl, 2, std::stoull(name.substr(5))}};
  return out;
}

std::optional<std::uint64_t> table1_value(const Identity& s, std::uint64_t p) {
  switch (s.kind) {
    case Identity::Alt:
      if ((s.n == p || s.n == p + 1) && p % 4 == 3) return (p - 1) / 2;
      return std::nullopt;
    case Identity::Psl:
      if (s.n == 2 && s.q % p == 0 && s.q % 4 == 3) return (s.q - 1) / 2;
      for (unsigned l = 1; l <= s.n; l += 2)
        if (p > s.n && 2 * l > s.n && primitive_prime_divisors(s.q, l).count(p)) return l;
      return std::nullopt;
    case Identity::M11:
    case Identity::M12:
      if (p == 11) return 5;
      return std::nullopt;
    case Identity::Suzuki: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Claim> suite_table1(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (!e.simple()) return;
    const Group& g = e.group();
    auto ids = identities(e.name(), g.order());
    json automizers = json::object();
    bool pass = true, recognized = !ids.empty();
    std::map<std::uint64_t, std::uint64_t> odd;
    for (auto p : prime_divisors(g.order())) {
      if (p == 2) continue;
      auto r = sylow_automizer(g, p);
      automizers[std::to_string(p)] = r.automizer;
      if (r.automizer % 2 == 0) continue;
      odd[p] = r.automizer;
      bool row = std::any_of(ids.begin(), ids.end(), [&](const Identity& s) {
        auto v = table1_value(s, p);
        return v && *v == r.automizer;
      });
      pass = pass && row;
    }
    std::string id = "table1/" + e.name();
    if (!recognized && !odd.empty()) {
      out.push_back(skipped(id, anchor::kTable1, "simple group not recognized"));
    } else {
      out.push_back(verdict(id, anchor::kTable1, pass, {{"automizers", automizers}}, "odd automizers match a row"));
    }
    static const std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> quoted = {
        {"M11", {11, 5}}, {"M12", {11, 5}}, {"A7", {7, 3}}, {"PSL2(7)", {7, 3}}, {"PSL2(11)", {11, 5}}};
    if (auto it = quoted.find(e.name()); it != quoted.end()) {
      auto [p, want] = it->second;
      auto got = automizers[std::to_string(p)].get<std::uint64_t>();
      out.push_back(verdict(id + "/p=" + std::to_string(p), anchor::kTable1, got == want, got, want));
    }
    if (e.name() == "A5") {
      out.push_back(verdict(id + "/even", anchor::kTable1, odd.empty(), {{"automizers", automizers}}, "all even"));
    }
  });
  if (claims.empty()) claims.push_back(skipped("table1", anchor::kTable1, kNoInstance));
  return claims;
}

std::vector<Claim> suite_chain(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (!e.simple()) return;
    auto c = odd_automizer_chain(e.group());
    out.push_back(verdict("chain/" + e.name(), anchor::kChain, c.chain.size() <= 2,
                          {{"length", c.chain.size()}, {"chain", c.chain}, {"odd_automizer_primes", c.odd_automizer_primes}},
                          2));
  });
  if (claims.empty()) claims.push_back(skipped("chain", anchor::kChain, kNoInstance));
  return claims;
}

std::vector<Claim> suite_theta(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (e.nilpotent() || e.fitting().is_trivial() || !e.fits_budget()) return;
    const Group& g = e.group();
    json cases = json::array();
    bool pass = true;
    for (const auto& cls : g.conjugacy_classes().classes) {
      ElementId x = cls.front();
      if (x == kIdentity || !is_prime(g.element_order(x))) continue;
      ThetaCheck t = check_theta_isomorphism(g, x);
      if (t.outcome == ThetaOutcome::NotApplicable) continue;
      pass = pass && t.outcome == ThetaOutcome::Holds;
      cases.push_back({{"element", g.element(x).to_cycles()},
                       {"automizer", t.automizer_in_g},
                       {"automizer_in_quotient", t.automizer_in_quotient},
                       {"surjective", t.surjective},
                       {"centralizer_image", t.centralizer_image}});
    }
    if (cases.empty()) return;
    out.push_back(verdict("theta/" + e.name(), anchor::kTheta, pass, {{"cases", cases}}));
  });
  if (claims.empty()) claims.push_back(skipped("theta", anchor::kTheta, kNoInstance));
  return claims;
}

bool delta_has_far_pair(BenchEntry& e) {
  const auto& c = e.delta_scc();
  const auto& d = e.delta_diameter();
  if (c.degenerate) return false;
  return !d.diameter || *d.diameter > 4;
}

std::vector<Claim> suite_j_jstar(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (!e.fits_budget() || !e.hypercenter().is_trivial() || !e.fstar_eq_f()) return;
    if (!delta_has_far_pair(e)) return;
    bool jj = j_equals_jstar(e.group());
    bool frob = is_frobenius(e.group()).has_value();
    out.push_back(verdict("j-jstar/" + e.name(), anchor::kJStar, !jj || frob,
                          {{"j_equals_jstar", jj},
                           {"frobenius", frob},
                           {"delta_diameter", diameter_json(e.delta_diameter().diameter)}}));
  });
  if (claims.empty()) claims.push_back(skipped("j-jstar", anchor::kJStar, kNoInstance));
  return claims;
}

std::vector<Claim> suite_odd_centralizer(Impl& wb) {
  auto claims = wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (!e.fits_budget() || !e.hypercenter().is_trivial() || !e.fstar_eq_f()) return;
    const Group& g = e.group();
    if (is_frobenius(g) || !delta_has_far_pair(e)) return;
    const Digraph& d = e.gamma();
    std::vector<bool> far(d.size(), false);
    for (std::size_t s = 0; s < d.size(); ++s) {
      auto dist = bfs_distances(d, s);
      for (std::size_t t = 0; t < d.size(); ++t)
        if (t != s && (dist[t] < 0 || dist[t] > 4)) far[t] = true;
    }
    std::set<ElementId> centres;
    for (std::size_t t = 0; t < d.size(); ++t) {
      if (!far[t]) continue;
      ElementId y = d.vertices()[t];
      for (auto r : prime_divisors(g.element_order(y))) centres.insert(g.pow(y, g.element_order(y) / r));
    }
    bool pass = true;
    json cases = json::array();
    for (ElementId yr : centres) {
      Subgroup c = centralizer(g, std::span<const ElementId>(&yr, 1));
      bool odd = c.order() % 2 == 1;
      bool meta = is_metacyclic(as_group(c, "C"));
      pass = pass && odd && meta;
      cases.push_back({{"element", g.element(yr).to_cycles()}, {"centralizer_order", c.order()}, {"metacyclic", meta}});
    }
    out.push_back(verdict("odd-centralizer/" + e.name(), anchor::kOddCentralizer, pass, {{"cases", cases}}));
  });
  if (claims.empty()) claims.push_back(skipped("odd-centralizer", anchor::kOddCentralizer, kNoInstance));
  return claims;
}

std::vector<Claim> suite_alt_identity(Impl& wb) {
  std::vector<Claim> claims;
  if (wb.tier != Tier::Fast) {
    claims.push_back(skipped("alt-identity", anchor::kAltIdentity, "fast tier only"));
    return claims;
  }
  for (unsigned p : {7u, 11u, 13u}) {
    auto r = alt_identity(p);
    claims.push_back(verdict("alt-identity/p=" + std::to_string(p), anchor::kAltIdentity, r.matches && r.engel2,
                             {{"commutator", r.commutator}, {"engel2", r.engel2}}, "(1,5,3)(2,4,6)"));
  }
  return claims;
}

// Number of simple factors when G/F(G) is a direct product of nonabelian
// simple groups, otherwise 0.
std::size_t simple_factor_count(const Group& q) {
  auto mins = minimal_normal_subgroups(q);
  if (mins.empty()) return 0;
  Subgroup prod = trivial_subgroup(q);
  for (const auto& m : mins) {
    if (!is_simple(as_group(m, "S"))) return 0;
    prod = product(q, prod, m);
  }
  return prod.is_whole() ? mins.size() : 0;
}

std::vector<Claim> suite_product_of_simples(Impl& wb) {
  std::size_t max_factors = 0;
  std::mutex lock;
  auto claims = wb.per_entry([&](BenchEntry& e, std::vector<Claim>& out) {
    if (!e.fits_budget() || e.nilpotent()) return;
    const Subgroup& f = e.fitting();
    if (f.is_trivial() || !e.fstar_eq_f()) return;
    std::size_t l = simple_factor_count(quotient(e.group(), f).group);
    if (l == 0) return;
    {
      std::lock_guard g(lock);
      max_factors = std::max(max_factors, l);
    }
    const auto& dm = e.delta_diameter();
    bool pass = e.delta_scc().strongly_connected && dm.diameter && *dm.diameter <= 8;
    out.push_back(verdict("product-of-simples/" + e.name(), anchor::kProductOfSimples, pass,
                          {{"simple_factors", l}, {"delta_diameter", diameter_json(dm.diameter)}}, 8));
  });
  if (max_factors < 2)
    claims.push_back(skipped("product-of-simples/l>=2", anchor::kProductOfSimples, kNoInstance));
  if (max_factors == 0) claims.push_back(skipped("product-of-simples/l=1", anchor::kProductOfSimples, kNoInstance));
  return claims;
}

// Oracle for F(G): the subgroup generated by every nilpotent normal closure
// of a single element.
Subgroup fitting_class_closure_oracle(BenchEntry& e) {
  const Group& g = e.group();
  std::vector<ElementId> gens;
  for (const auto& n : e.normal_closures())
    if (is_nilpotent(as_group(n, "N")))
      for (ElementId x : n.generators()) gens.push_back(x);
  return generate(g, gens);
}

std::vector<ElementId> left_engel_elements(const Group& g) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    auto depth = engel_depths_into(g, x);
    if (std::all_of(depth.begin(), depth.end(), [](std::int32_t v) { return v >= 0; })) out.push_back(x);
  }
  return out;
}

std::vector<Claim> suite_invariants(Impl& wb) {
  if (wb.tier != Tier::Fast) return {skipped("invariants", anchor::kHypercenter, "fast tier only")};
  return wb.per_entry([](BenchEntry& e, std::vector<Claim>& out) {
    if (!e.fits_budget()) return;
    const Group& g = e.group();
    Subgroup oracle = hypercenter_engel_oracle(g);
    out.push_back(verdict("invariants/hypercenter/" + e.name(), anchor::kHypercenter, oracle == e.hypercenter(),
                          {{"upper_central_series", e.hypercenter().order()}, {"engel_oracle", oracle.order()}}));

    Subgroup closure = fitting_class_closure_oracle(e);
    auto left = left_engel_elements(g);
    std::vector<ElementId> fit(e.fitting().ids().begin(), e.fitting().ids().end());
    bool same = closure == e.fitting() && left == fit;
    out.push_back(verdict("invariants/fitting/" + e.name(), anchor::kLeftEngel, same,
                          {{"fitting", fit.size()}, {"left_engel", left.size()}, {"class_closure", closure.order()}}));

    std::vector<Digraph> levels;
    for (unsigned n = 1; n <= 5; ++n) levels.push_back(build_gamma_n(g, n, e.build));
    std::uint64_t lost = 0;
    for (unsigned n = 1; n <= 4; ++n) {
      const Digraph &a = levels[n - 1], &b = levels[n];
      std::vector<std::optional<std::size_t>> map(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) map[i] = b.index_of(a.vertices()[i]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!map[i]) continue;
        for (std::size_t j = 0; j < a.size(); ++j)
          if (map[j] && a.has_arc(i, j) && !b.has_arc(*map[i], *map[j])) ++lost;
      }
    }
    out.push_back(verdict("invariants/gamma-n/" + e.name(), anchor::kSubgraph, lost == 0,
                          {{"arcs_missing_at_next_level", lost}}, 0));

    const Digraph& d = e.gamma();
    std::mt19937_64 rng(g.order() * 1000003u + g.degree());
    std::uint64_t broken = 0;
    for (int t = 0; t < 20; ++t) {
      ElementId c = static_cast<ElementId>(rng() % g.order());
      std::vector<std::size_t> map(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) map[i] = *d.index_of(g.conj(d.vertices()[i], c));
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
          if (d.has_arc(i, j) != d.has_arc(map[i], map[j])) ++broken;
    }
    out.push_back(verdict("invariants/automorphism/" + e.name(), anchor::kConjugation, broken == 0,
                          {{"conjugations", 20}, {"mismatched_pairs", broken}}, 0));
  });
}

using SuiteFn = std::vector<Claim> (*)(Impl&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"classification", suite_classification},
      {"diameter", suite_diameter},
      {"soluble", suite_soluble},
      {"quotient", suite_quotient},
      {"normal-subgroup", suite_normal_subgroup},
      {"central-product", suite_central_product},
      {"fitting-sink", suite_fitting_sink},
      {"commuting", suite_commuting},
      {"prime-graph", suite_prime_graph},
      {"table1", suite_table1},
      {"chain", suite_chain},
      {"theta", suite_theta},
      {"j-jstar", suite_j_jstar},
      {"odd-centralizer", suite_odd_centralizer},
      {"alt-identity", suite_alt_identity},
      {"product-of-simples", suite_product_of_simples},
      {"invariants", suite_invariants},
  };
  return r;
}

}  // namespace

bool SuiteResult::failed() const {
  return std::any_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, Workbench& bench) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult r{name, fn(bench.impl())};
    std::stable_sort(r.claims.begin(), r.claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return r;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& options) {
  if (name != "all" && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + name);
  Workbench bench(options);
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names())
    if (name == "all" || n == name) out.push_back(run_suite(n, bench));
  return out;
}

std::string status_text(const Claim& c) {
  switch (c.status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped(" + c.reason + ")";
  }
  return "fail";
}

json to_json(const std::vector<SuiteResult>& results, Tier tier) {
  json suites = json::array();
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : results) {
    json claims = json::array();
    for (const auto& c : r.claims) {
      claims.push_back({{"id", c.id},
                        {"anchor", c.anchor},
                        {"status", status_text(c)},
                        {"measured", c.measured},
                        {"bound", c.bound}});
      (c.status == ClaimStatus::Pass ? pass : c.status == ClaimStatus::Fail ? fail : skip)++;
    }
    suites.push_back({{"suite", r.suite}, {"claims", claims}});
  }
  return {{"tier", to_string(tier)},
          {"suites", suites},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skip}}}};
}

std::string to_text(const std::vector<SuiteResult>& results, Tier tier) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, skip = 0;
  os << "tier " << to_string(tier) << "\n";
  for (const auto& r : results) {
    os << "suite " << r.suite << "\n";
    for (const auto& c : r.claims) {
      os << "  " << status_text(c) << "  " << c.id;
      if (!c.measured.is_null()) os << "  measured=" << c.measured.dump();
      if (!c.bound.is_null()) os << "  bound=" << c.bound.dump();
      os << "\n";
      (c.status == ClaimStatus::Pass ? pass : c.status == ClaimStatus::Fail ? fail : skip)++;
    }
  }
  os << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
  return os.str();
}

int exit_code(const std::vector<SuiteResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.failed(); }) ? 1 : 0;
}

}  // namespace engelgraph

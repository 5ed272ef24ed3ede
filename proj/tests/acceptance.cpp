// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "engelgraph/suites.hpp"

using namespace engelgraph;

namespace {

using Results = std::vector<SuiteResult>;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
};

void merge(Results& into, const Results& more) { into.insert(into.end(), more.begin(), more.end()); }

const Claim* find_claim(const Results& rs, const std::string& id) {
  for (const auto& r : rs)
    for (const auto& c : r.claims)
      if (c.id == id) return &c;
  return nullptr;
}

// Every claim under one of the prefixes must not fail, and each listed id must exist and pass.
Verdict gate(const Results& rs, const std::vector<std::string>& prefixes, const std::vector<std::string>& required) {
  Verdict v;
  std::size_t passed = 0;
  for (const auto& r : rs) {
    for (const auto& c : r.claims) {
      bool in_scope = false;
      for (const auto& p : prefixes) in_scope = in_scope || c.id.rfind(p, 0) == 0;
      if (!in_scope) continue;
      if (c.status == ClaimStatus::Pass) ++passed;
      if (c.status == ClaimStatus::Fail) {
        v.pass = false;
        v.detail << " failed " << c.id << " measured=" << c.measured.dump() << ";";
      }
    }
  }
  for (const auto& id : required) {
    const Claim* c = find_claim(rs, id);
    if (c == nullptr || c->status != ClaimStatus::Pass) {
      v.pass = false;
      v.detail << " missing " << id << (c ? " (" + status_text(*c) + ")" : std::string()) << ";";
    }
  }
  v.detail << " " << passed << " claims pass";
  return v;
}

std::vector<std::string> with_prefix(const std::string& prefix, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(prefix + n);
  return out;
}

}  // namespace

int main() {
  const VerifyOptions fast{Tier::Fast, 1, std::nullopt};
  Results all_fast = run_suites("all", fast);

  Results slow, targeted;
  {
    Workbench wb({Tier::Slow, 1, std::nullopt});
    for (const char* s : {"classification", "diameter", "commuting", "table1", "chain"}) slow.push_back(run_suite(s, wb));
  }
  {
    Workbench wb({Tier::Targeted, 1, std::nullopt});
    for (const char* s : {"classification", "table1", "chain"}) targeted.push_back(run_suite(s, wb));
  }
  Results every = all_fast;
  merge(every, slow);
  merge(every, targeted);

  std::map<int, std::pair<std::string, Verdict>> out;

  out[1] = {"classification of non-strongly-connected Engel graphs",
            gate(every, {"classification/"},
                 with_prefix("classification/", {"S3", "D10", "AGL1(5)", "AGL1(7)", "SL(2,3)", "A5", "PSL2(5)",
                                                 "PSL2(4)", "PSL2(8)", "PSL2(13)", "S4", "S5", "S6", "A6", "A7",
                                                 "PSL2(7)", "PSL2(11)", "M11"}))};
  out[2] = {"diameter bounds 16 / 12 / soluble 4, bound 4 attained",
            gate(every, {"diameter/", "soluble/"}, {"diameter/max", "soluble/attained", "diameter/le12/S4"})};
  out[3] = {"diameter unchanged by passing to G/Z_inf(G)",
            gate(all_fast, {"quotient/"}, {"quotient/C2xS4-vs-S4", "quotient/SL(2,3)-vs-A4"})};
  out[4] = {"commuting graph components: diameter <= 10, isolated Hall components",
            gate(every, {"commuting/"},
                 with_prefix("commuting/hall/", {"A5", "A6", "A7", "PSL2(7)", "PSL2(11)", "PSL2(13)"}))};
  out[5] = {"prime graph components of alternating groups",
            gate(all_fast, {"prime-graph/Alt("},
                 with_prefix("prime-graph/", {"Alt(5)", "Alt(6)", "Alt(7)", "Alt(11)", "Alt(12)", "Alt(13)"}))};
  out[6] = {"Sylow automizer table rows and chain length <= 2",
            gate(every, {"table1/", "chain/"},
                 {"table1/M11/p=11", "table1/M12/p=11", "table1/A7/p=7", "table1/PSL2(7)/p=7", "table1/PSL2(11)/p=11",
                  "table1/A5/even", "chain/A5", "chain/A7", "chain/PSL2(13)", "chain/M11", "chain/M12"})};
  out[7] = {"alternating commutator identity for p = 7, 11, 13",
            gate(all_fast, {"alt-identity/"}, {"alt-identity/p=7", "alt-identity/p=11", "alt-identity/p=13"})};
  {
    std::vector<std::string> req;
    for (const auto& spec : catalog_tier(Tier::Fast)) {
      for (const char* k : {"hypercenter", "fitting", "gamma-n", "automorphism"})
        req.push_back(std::string("invariants/") + k + "/" + spec.name);
    }
    out[8] = {"dual-oracle invariants on the fast tier", gate(all_fast, {"invariants/", "fitting-sink/"}, req)};
  }
  {
    Verdict v;
    std::string first = to_json(all_fast, Tier::Fast).dump();
    std::string again = to_json(run_suites("all", fast), Tier::Fast).dump();
    std::string pooled = to_json(run_suites("all", {Tier::Fast, 4, std::nullopt}), Tier::Fast).dump();
    v.pass = first == again && first == pooled;
    v.detail << " repeat " << (first == again ? "identical" : "DIFFERS") << ", 1 vs 4 workers "
             << (first == pooled ? "identical" : "DIFFERS") << " (" << first.size() << " bytes)";
    out[9] = {"byte-identical reports across runs and worker counts", std::move(v)};
  }

  int failures = 0;
  for (auto& [n, entry] : out) {
    auto& [title, v] = entry;
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " --" << v.detail.str() << "\n";
  }
  return failures == 0 ? 0 : 1;
}

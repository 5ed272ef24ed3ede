#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "engelgraph/analysis.hpp"
#include "engelgraph/catalog.hpp"
#include "engelgraph/digraph.hpp"
#include "engelgraph/engel.hpp"
#include "engelgraph/suites.hpp"

using namespace engelgraph;

namespace {

constexpr int kUsageError = 2;

BuildOptions build_options(unsigned jobs, std::optional<std::uint64_t> budget) {
  return {budget ? *budget : budget_from_env(BuildOptions{}.budget), std::max(1u, jobs)};
}

Digraph build_kind(const Group& g, const std::string& kind, const BuildOptions& opts) {
  if (kind == "gamma") return build_gamma(g, opts);
  if (kind == "delta") return build_delta(g, opts);
  if (kind == "lambda") return build_lambda(g, opts);
  if (kind == "commuting") return build_commuting(g, opts);
  if (kind.rfind("gamma_n:", 0) == 0) {
    std::size_t used = 0;
    std::string digits = kind.substr(8);
    unsigned long n = 0;
    try {
      n = std::stoul(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size() || n == 0) throw std::invalid_argument("bad level in kind: " + kind);
    return build_gamma_n(g, static_cast<unsigned>(n), opts);
  }
  throw std::invalid_argument("unknown graph kind: " + kind + " (gamma|gamma_n:<n>|delta|lambda|commuting)");
}

std::string dot_of(const Group& g, const Digraph& d) {
  return export_dot(d, [&](ElementId x) { return g.element(x).to_cycles(); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Engel graphs, commuting graphs and prime graphs of finite permutation groups"};
  app.require_subcommand(1);

  std::string group, format, suite = "all", tier = "fast", from, to, kind = "gamma", out;
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;

  auto* analyze = app.add_subcommand("analyze", "Structure and graph report for one group");
  analyze->add_option("--group", group, "Catalog name, parametric name (S5, PSL2(11), ...) or group file")
      ->required();
  analyze->add_option("--format", format, "json|text|dot")->check(CLI::IsMember({"json", "text", "dot"}));
  analyze->add_option("--jobs", jobs, "Worker threads");
  analyze->add_option("--budget", budget, "Arc-test budget");

  auto* verify = app.add_subcommand("verify", "Run verification suites against the catalog");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->add_option("--tier", tier, "fast|slow|targeted")->check(CLI::IsMember({"fast", "slow", "targeted"}));
  verify->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--budget", budget, "Arc-test budget");

  auto* trace = app.add_subcommand("trace-proof", "Which case of the diameter argument applies");
  trace->add_option("--group", group, "Group")->required();
  trace->add_option("--jobs", jobs, "Worker threads");
  trace->add_option("--budget", budget, "Arc-test budget");

  auto* path = app.add_subcommand("engel-path", "Shortest directed path in Gamma(G)");
  path->add_option("--group", group, "Group")->required();
  path->add_option("--from", from, "Source element in 1-based cycle notation")->required();
  path->add_option("--to", to, "Target element in 1-based cycle notation")->required();
  path->add_option("--jobs", jobs, "Worker threads");
  path->add_option("--budget", budget, "Arc-test budget");

  auto* dot = app.add_subcommand("export-dot", "Write a graph as DOT");
  dot->add_option("--group", group, "Group")->required();
  dot->add_option("--kind", kind, "gamma|gamma_n:<n>|delta|lambda|commuting");
  dot->add_option("--out", out, "Output path")->required();
  dot->add_option("--jobs", jobs, "Worker threads");
  dot->add_option("--budget", budget, "Arc-test budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    BuildOptions opts = build_options(jobs, budget);
    if (*analyze) {
      Group g = resolve_group(group);
      if (format == "dot") {
        std::cout << dot_of(g, build_gamma(g, opts));
        return 0;
      }
      AnalysisReport r = engelgraph::analyze(g, opts);
      if (format == "text") {
        std::cout << to_text(r);
      } else {
        std::cout << to_json(r).dump(2) << "\n";
      }
      return 0;
    }
    if (*verify) {
      VerifyOptions vo{parse_tier(tier), std::max(1u, jobs), budget};
      auto results = run_suites(suite, vo);
      if (format == "text") {
        std::cout << to_text(results, vo.tier);
      } else {
        std::cout << to_json(results, vo.tier).dump(2) << "\n";
      }
      return exit_code(results);
    }
    if (*trace) {
      Group g = resolve_group(group);
      ProofTrace t = trace_proof(g, opts);
      std::cout << to_text(t);
      return t.holds ? 0 : 1;
    }
    if (*path) {
      Group g = resolve_group(group);
      ElementId x = g.id_of(Permutation::from_cycles(from, g.degree()));
      ElementId y = g.id_of(Permutation::from_cycles(to, g.degree()));
      std::cout << to_text(g, engel_path(g, x, y, opts));
      return 0;
    }
    if (*dot) {
      Group g = resolve_group(group);
      Digraph d = build_kind(g, kind, opts);
      if (d.size() == 0) std::cerr << "warning: " << kind << " graph of " << g.name() << " is empty (degenerate)\n";
      std::ofstream f(out);
      if (!f) throw std::runtime_error("cannot open " + out + " for writing");
      f << dot_of(g, d);
      if (!f) throw std::runtime_error("write failed: " + out);
      std::cerr << "wrote " << d.size() << " nodes to " << out << "\n";
      return 0;
    }
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << " (requires " << e.required() << "; raise --budget or ENGELGRAPH_BUDGET)\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

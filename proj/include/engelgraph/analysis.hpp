#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "engelgraph/digraph.hpp"
#include "engelgraph/engel.hpp"
#include "engelgraph/group.hpp"

namespace engelgraph {

struct GraphSummary {
  std::size_t vertex_count = 0;
  std::uint64_t arc_count = 0;
  std::size_t scc_count = 0;
  bool strongly_connected = true;
  std::optional<std::uint32_t> diameter;  // nullopt = infinite
  std::optional<std::pair<ElementId, ElementId>> witness;
  bool degenerate = false;
};

GraphSummary summarize(const Digraph& d, unsigned jobs = 1);

struct CommutingComponent {
  std::size_t size = 0;
  std::uint32_t diameter = 0;
};

std::vector<CommutingComponent> commuting_components(const Digraph& commuting);

/// What the known classification of non-strongly-connected Engel graphs
/// predicts for G, read off from G/Z_inf(G).
struct ConnectivityPrediction {
  bool degenerate = false;    // G nilpotent: Gamma(G) is empty
  bool disconnected = false;  // Gamma(G) not strongly connected
  std::string reason;         // frobenius | psl2 | suzuki | aut_suzuki | none | nilpotent
};

/// Order-based recognition of the simple quotients involved; exact for
/// PSL2(q) and Suzuki groups, whose orders are shared by no other simple group.
ConnectivityPrediction predict_connectivity(const Group& g);

struct AnalysisReport {
  std::string name;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::uint64_t z_infty_order = 0;
  std::uint64_t fitting_order = 0;
  bool nilpotent = false, soluble = false, simple = false, almost_simple = false, frobenius = false,
       fstar_eq_f = false;
  GraphSummary gamma;
  std::string witness_from, witness_to;  // cycle notation
  std::vector<CommutingComponent> commuting;
  PrimeGraph prime_graph;
  std::uint64_t j_order = 0;
  std::string jstar_note;
};

AnalysisReport analyze(const Group& g, const BuildOptions& options);

nlohmann::json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

/// The branch of the inductive diameter argument that applies to G.
struct ProofTrace {
  std::vector<std::string> steps;
  std::string branch;
  std::optional<unsigned> bound;          // nullopt when no bound applies
  std::optional<std::uint32_t> measured;  // diameter of Gamma(G), nullopt = infinite
  bool degenerate = false;
  bool holds = true;  // false iff measured exceeds bound
};

ProofTrace trace_proof(const Group& g, const BuildOptions& options);
std::string to_text(const ProofTrace& t);

struct EngelPath {
  bool reachable = false;
  std::vector<ElementId> vertices;
  std::vector<std::size_t> depths;  // Engel depth of each arc
};

/// Shortest directed path in Gamma(G). Throws std::invalid_argument if an
/// endpoint lies in Z_inf(G).
EngelPath engel_path(const Group& g, ElementId from, ElementId to, const BuildOptions& options);
std::string to_text(const Group& g, const EngelPath& path);

}  // namespace engelgraph

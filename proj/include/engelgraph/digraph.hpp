#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "engelgraph/group.hpp"

namespace engelgraph {

enum class GraphKind { Lambda, Delta, Gamma, GammaN, Commuting };

std::string to_string(GraphKind kind);

/// Directed graph on a set of group elements with dense bitset adjacency.
///
/// Vertices are addressed by index 0..size()-1; `vertices()` maps an index to
/// the element id it stands for and is sorted ascending. Self-loops are never
/// stored.
class Digraph {
public:
  static constexpr std::size_t kMaxVertices = 100000;

  Digraph(std::vector<ElementId> vertices, GraphKind kind, unsigned engel_level = 0);

  std::size_t size() const { return vertices_.size(); }
  std::span<const ElementId> vertices() const { return vertices_; }
  std::optional<std::size_t> index_of(ElementId element) const;

  GraphKind kind() const { return kind_; }
  /// n for GammaN, 1 for Commuting, 0 otherwise.
  unsigned engel_level() const { return level_; }

  bool has_arc(std::size_t from, std::size_t to) const {
    return (bits_[from * words_ + (to >> 6)] >> (to & 63)) & 1u;
  }
  void add_arc(std::size_t from, std::size_t to) {
    if (from != to) bits_[from * words_ + (to >> 6)] |= std::uint64_t{1} << (to & 63);
  }

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(std::size_t from) const {
    return {bits_.data() + from * words_, words_};
  }

  std::uint64_t arc_count() const;
  bool is_symmetric() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

private:
  std::vector<ElementId> vertices_;
  GraphKind kind_;
  unsigned level_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct SccResult {
  std::vector<std::uint32_t> component;  // per vertex index
  std::size_t component_count = 0;
  bool strongly_connected = true;
  /// Fewer than two vertices: strongly connected by convention.
  bool degenerate = false;
};

/// Exact strongly connected components (iterative Tarjan).
SccResult scc(const Digraph& d);

struct DiameterResult {
  /// nullopt means Infinite (not strongly connected).
  std::optional<std::uint32_t> diameter;
  /// (source index, target index) realizing the diameter; lexicographically least.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// Per-vertex eccentricity, -1 where some vertex is unreachable.
  std::vector<std::int32_t> eccentricities;
  bool degenerate = false;
};

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<std::int32_t> bfs_distances(const Digraph& d, std::size_t source);

/// All-pairs BFS with word-parallel frontier expansion, one source per task.
DiameterResult diameter(const Digraph& d, unsigned jobs = 1);

/// Connected components of a symmetric graph, each sorted, ordered by least vertex.
/// Throws std::invalid_argument if `d` is not symmetric.
std::vector<std::vector<std::size_t>> undirected_components(const Digraph& d);

/// Diameter of the subgraph induced on one connected component.
std::uint32_t component_diameter(const Digraph& d, std::span<const std::size_t> component);

using VertexLabeler = std::function<std::string(ElementId)>;

/// Deterministic DOT text: `graph` for symmetric kinds, `digraph` otherwise;
/// nodes by element id, one edge per line in (source, target) order.
std::string export_dot(const Digraph& d, const VertexLabeler& label);

}  // namespace engelgraph

#include "engelgraph/digraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "engelgraph/parallel.hpp"

namespace engelgraph {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Least set bit at position >= from in a bitset row, or kNone.
std::size_t next_bit(std::span<const std::uint64_t> row, std::size_t from, std::size_t limit) {
  std::size_t w = from >> 6;
  if (w >= row.size()) return kNone;
  std::uint64_t word = row[w] & (~std::uint64_t{0} << (from & 63));
  for (;;) {
    if (word != 0) {
      std::size_t pos = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return pos < limit ? pos : kNone;
    }
    if (++w >= row.size()) return kNone;
    word = row[w];
  }
}

}  // namespace

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Lambda: return "lambda";
    case GraphKind::Delta: return "delta";
    case GraphKind::Gamma: return "gamma";
    case GraphKind::GammaN: return "gamma_n";
    case GraphKind::Commuting: return "commuting";
  }
  return "unknown";
}

Digraph::Digraph(std::vector<ElementId> vertices, GraphKind kind, unsigned engel_level)
    : vertices_(std::move(vertices)), kind_(kind), level_(engel_level) {
  if (vertices_.size() > kMaxVertices) {
    throw LimitExceeded("digraph vertex cap exceeded", vertices_.size());
  }
  if (!std::is_sorted(vertices_.begin(), vertices_.end())) {
    throw std::invalid_argument("digraph vertices must be sorted");
  }
  words_ = (vertices_.size() + 63) / 64;
  bits_.assign(words_ * vertices_.size(), 0);
}

std::optional<std::size_t> Digraph::index_of(ElementId element) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), element);
  if (it == vertices_.end() || *it != element) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::uint64_t Digraph::arc_count() const {
  std::uint64_t total = 0;
  for (auto w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool Digraph::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = next_bit(row(i), 0, size()); j != kNone; j = next_bit(row(i), j + 1, size())) {
      if (!has_arc(j, i)) return false;
    }
  }
  return true;
}

SccResult scc(const Digraph& d) {
  const std::size_t n = d.size();
  SccResult result;
  result.component.assign(n, 0);
  if (n <= 1) {
    result.component_count = n;
    result.strongly_connected = true;
    result.degenerate = true;
    return result;
  }

  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  struct Frame {
    std::size_t v;
    std::size_t next;  // next neighbour candidate position
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;
  std::uint32_t comp = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      std::size_t w = next_bit(d.row(f.v), f.next, n);
      if (w != kNone) {
        f.next = w + 1;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        for (;;) {
          std::size_t x = stack.back();
          stack.pop_back();
          on_stack[x] = false;
          result.component[x] = comp;
          if (x == v) break;
        }
        ++comp;
      }
    }
  }
  result.component_count = comp;
  result.strongly_connected = comp <= 1;
  return result;
}

namespace {

struct BfsSummary {
  std::int32_t eccentricity;  // -1 if some vertex unreachable
  std::size_t farthest;       // least index at maximal distance
};

BfsSummary bfs_summary(const Digraph& d, std::size_t source, std::vector<std::int32_t>* dist_out) {
  const std::size_t n = d.size();
  const std::size_t words = d.words_per_row();
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  visited[source >> 6] |= std::uint64_t{1} << (source & 63);
  frontier[source >> 6] |= std::uint64_t{1} << (source & 63);
  if (dist_out) {
    dist_out->assign(n, -1);
    (*dist_out)[source] = 0;
  }
  std::size_t reached = 1;
  std::int32_t level = 0;
  std::size_t farthest = source;

  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        std::size_t v = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        auto r = d.row(v);
        for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
      }
    }
    bool any = false;
    std::size_t first = kNone;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      if (next[w]) {
        any = true;
        if (first == kNone) first = (w << 6) + static_cast<std::size_t>(std::countr_zero(next[w]));
        visited[w] |= next[w];
        reached += static_cast<std::size_t>(std::popcount(next[w]));
      }
    }
    if (!any) break;
    ++level;
    farthest = first;
    if (dist_out) {
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = next[w];
        while (bits) {
          (*dist_out)[(w << 6) + static_cast<std::size_t>(std::countr_zero(bits))] = level;
          bits &= bits - 1;
        }
      }
    }
    frontier.swap(next);
  }
  return {reached == n ? level : -1, farthest};
}

}  // namespace

std::vector<std::int32_t> bfs_distances(const Digraph& d, std::size_t source) {
  std::vector<std::int32_t> dist;
  bfs_summary(d, source, &dist);
  return dist;
}

DiameterResult diameter(const Digraph& d, unsigned jobs) {
  const std::size_t n = d.size();
  DiameterResult result;
  if (n <= 1) {
    result.diameter = 0;
    result.eccentricities.assign(n, 0);
    result.degenerate = true;
    return result;
  }
  std::vector<BfsSummary> summaries(n);
  parallel_for(n, jobs, [&](std::size_t s) { summaries[s] = bfs_summary(d, s, nullptr); });

  result.eccentricities.resize(n);
  bool finite = true;
  std::int32_t best = -1;
  std::size_t best_source = 0;
  for (std::size_t s = 0; s < n; ++s) {
    result.eccentricities[s] = summaries[s].eccentricity;
    if (summaries[s].eccentricity < 0) finite = false;
    if (summaries[s].eccentricity > best) {
      best = summaries[s].eccentricity;
      best_source = s;
    }
  }
  if (finite) {
    result.diameter = static_cast<std::uint32_t>(best);
    result.witness = std::make_pair(best_source, summaries[best_source].farthest);
  }
  return result;
}

std::vector<std::vector<std::size_t>> undirected_components(const Digraph& d) {
  if (!d.is_symmetric()) throw std::invalid_argument("undirected analysis needs a symmetric graph");
  const std::size_t n = d.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      auto r = d.row(comp[i]);
      for (std::size_t j = next_bit(r, 0, n); j != kNone; j = next_bit(r, j + 1, n)) {
        if (!seen[j]) {
          seen[j] = true;
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::uint32_t component_diameter(const Digraph& d, std::span<const std::size_t> component) {
  std::uint32_t best = 0;
  for (std::size_t s : component) {
    auto dist = bfs_distances(d, s);
    for (std::size_t t : component) {
      if (dist[t] < 0) throw std::invalid_argument("vertex set is not a connected component");
      best = std::max(best, static_cast<std::uint32_t>(dist[t]));
    }
  }
  return best;
}

std::string export_dot(const Digraph& d, const VertexLabeler& label) {
  const bool undirected = d.kind() == GraphKind::Commuting;
  std::ostringstream out;
  out << (undirected ? "graph" : "digraph") << " \"" << to_string(d.kind());
  if (d.kind() == GraphKind::GammaN) out << "_" << d.engel_level();
  out << "\" {\n";
  for (ElementId v : d.vertices()) {
    out << "  " << v << " [label=\"" << label(v) << "\"];\n";
  }
  const char* arrow = undirected ? " -- " : " -> ";
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto r = d.row(i);
    for (std::size_t j = next_bit(r, 0, d.size()); j != kNone; j = next_bit(r, j + 1, d.size())) {
      if (undirected && j < i) continue;
      out << "  " << d.vertices()[i] << arrow << d.vertices()[j] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace engelgraph

#pragma once

// Deliberately naive reference computations used to cross-check the library.
// They work on raw image arrays or brute-force scans and share no code paths
// with the ids, tables and memoized walks they are compared against.

#include <cstddef>
#include <set>
#include <vector>

#include "engelgraph/digraph.hpp"
#include "engelgraph/group.hpp"
#include "engelgraph/permutation.hpp"

namespace oracle {

using Images = std::vector<engelgraph::Point>;

inline Images images(const engelgraph::Permutation& p) { return {p.images().begin(), p.images().end()}; }

// Apply a first, then b.
inline Images then(const Images& a, const Images& b) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Images invert(const Images& a) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<engelgraph::Point>(i);
  return r;
}

inline bool is_identity(const Images& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

// x^-1 y^-1 x y by chasing every point through the four factors.
inline Images commutator(const Images& x, const Images& y) {
  Images xi = invert(x), yi = invert(y), r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[yi[xi[i]]]];
  return r;
}

// Least n >= 1 with [x,_n y] = 1, or 0 if the sequence never reaches 1.
inline std::size_t engel_depth(const Images& x, const Images& y, std::size_t group_order) {
  Images a = x;
  for (std::size_t n = 1; n <= group_order + 1; ++n) {
    a = commutator(a, y);
    if (is_identity(a)) return n;
  }
  return 0;
}

// All elements of g commuting with every element of s, by image comparison.
inline std::set<engelgraph::ElementId> centralizer(const engelgraph::Group& g,
                                                   const std::vector<engelgraph::ElementId>& s) {
  std::set<engelgraph::ElementId> out;
  for (engelgraph::ElementId x = 0; x < g.order(); ++x) {
    Images ix = images(g.element(x));
    bool ok = true;
    for (auto y : s) {
      Images iy = images(g.element(y));
      if (then(ix, iy) != then(iy, ix)) ok = false;
    }
    if (ok) out.insert(x);
  }
  return out;
}

// Distances by boolean matrix powers: dist[i][j] is the least k with (A^k)_ij = 1.
inline std::vector<std::vector<int>> matrix_power_distances(const engelgraph::Digraph& d) {
  std::size_t n = d.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0)), power(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    dist[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = power[i][j] = d.has_arc(i, j);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power[i][j] && dist[i][j] < 0) dist[i][j] = static_cast<int>(k);
    std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m)
        if (power[i][m])
          for (std::size_t j = 0; j < n; ++j)
            if (a[m][j]) next[i][j] = 1;
    power = std::move(next);
  }
  return dist;
}

}  // namespace oracle

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace engelgraph {

using Point = std::uint16_t;

/// A bijection of {0, ..., n-1} stored as its image array.
///
/// Products are read left to right: (a * b)(i) = b(a(i)), i.e. the first
/// factor is applied first. Cycle notation in text is 1-based.
class Permutation {
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "()".
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::span<const Point> images() const { return images_; }
  Point operator()(Point i) const { return images_[i]; }

  Permutation inverse() const;
  bool is_identity() const;

  /// 1-based cycle notation; the identity prints as "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

/// Left-to-right product: apply `a` first, then `b`.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

/// [a,b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Least k >= 1 with a^k = 1 (lcm of the cycle lengths).
std::uint64_t order(const Permutation& a);

/// Cycle notation for a raw image array (no validation).
std::string cycles_of(std::span<const Point> images);

}  // namespace engelgraph

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "engelgraph/permutation.hpp"

namespace engelgraph {

/// Index of an element in a Group's element table. Id 0 is always the identity.
using ElementId = std::uint32_t;
inline constexpr ElementId kIdentity = 0;

/// Raised when a configured size or work budget would be exceeded.
class LimitExceeded : public std::runtime_error {
public:
  LimitExceeded(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

private:
  std::uint64_t required_;
};

struct EnumerationOptions {
  std::size_t closure_limit = 200000;
  /// A full Cayley table is built only up to this order.
  std::size_t table_limit = 4096;
};

struct ConjugacyClasses {
  /// Each class is sorted; classes are ordered by their least id (the representative).
  std::vector<std::vector<ElementId>> classes;
  std::vector<std::uint32_t> class_of;
};

/// A finite permutation group with a fully enumerated, indexed element table.
///
/// Immutable after construction. Products of element ids come from the Cayley
/// table when one was built, otherwise from composing image arrays and looking
/// the result up in a hash index. Safe to share between threads.
class Group {
public:
  /// Breadth-first closure of `generators`. Throws LimitExceeded when the
  /// closure grows past `options.closure_limit`, std::invalid_argument on an
  /// empty generator list or mixed degrees.
  static Group enumerate(std::vector<Permutation> generators, std::string name,
                         const EnumerationOptions& options = {});

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }

  std::span<const Permutation> generators() const { return generators_; }
  std::span<const ElementId> generator_ids() const { return generator_ids_; }

  std::span<const Point> images(ElementId a) const {
    return {elements_.data() + static_cast<std::size_t>(a) * degree_, degree_};
  }
  Permutation element(ElementId a) const;

  ElementId mul(ElementId a, ElementId b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return mul_slow(a, b);
  }
  ElementId inv(ElementId a) const { return inverses_[a]; }
  /// g^-1 a g
  ElementId conj(ElementId a, ElementId g) const { return mul(mul(inverses_[g], a), g); }
  /// [a,b] = a^-1 b^-1 a b
  ElementId comm(ElementId a, ElementId b) const {
    if (!table_.empty()) return mul(inverses_[a], conj(a, b));
    return comm_slow(a, b);
  }
  ElementId pow(ElementId a, std::uint64_t e) const;

  std::uint32_t element_order(ElementId a) const { return orders_[a]; }
  bool commute(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }

  std::optional<ElementId> find(std::span<const Point> images) const;
  /// Throws std::invalid_argument if `p` is not in the group.
  ElementId id_of(const Permutation& p) const;

  bool has_table() const { return !table_.empty(); }

  /// Computed on first use and cached.
  const ConjugacyClasses& conjugacy_classes() const;

  /// Copy under a different name.
  Group renamed(std::string name) const;

private:
  Group() = default;
  ElementId mul_slow(ElementId a, ElementId b) const;
  ElementId comm_slow(ElementId a, ElementId b) const;
  std::uint64_t hash_images(std::span<const Point> images) const;
  void insert_index(ElementId id);

  std::string name_;
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Point> elements_;
  std::vector<ElementId> slots_;
  std::size_t slot_mask_ = 0;
  std::vector<ElementId> inverses_;
  std::vector<std::uint32_t> orders_;
  std::vector<ElementId> table_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// A subgroup of a Group as an explicit, sorted set of element ids.
///
/// Holds a pointer to its parent; the parent must outlive it.
class Subgroup {
public:
  Subgroup(const Group& parent, std::vector<ElementId> ids);

  const Group& parent() const { return *parent_; }
  std::span<const ElementId> ids() const { return ids_; }
  std::size_t order() const { return ids_.size(); }
  bool contains(ElementId a) const { return member_[a]; }
  bool is_trivial() const { return ids_.size() == 1; }
  bool is_whole() const { return ids_.size() == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const;

  /// A small generating set, chosen greedily in id order.
  std::vector<ElementId> generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.ids_ == b.ids_; }

private:
  const Group* parent_;
  std::vector<ElementId> ids_;
  std::vector<bool> member_;
};

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

/// Subgroup generated by `gens`.
Subgroup generate(const Group& g, std::span<const ElementId> gens);

/// True iff `ids` (which must contain the identity) is closed under products.
bool is_subgroup(const Group& g, std::span<const ElementId> ids);
bool is_normal(const Group& g, const Subgroup& h);

/// All elements commuting with every element of `set`.
Subgroup centralizer(const Group& g, std::span<const ElementId> set);
Subgroup centralizer(const Group& g, const Subgroup& h);

/// {x : h^x = h}. Throws std::invalid_argument if `h` is not closed.
Subgroup normalizer(const Group& g, const Subgroup& h);

/// Smallest normal subgroup containing `set`.
Subgroup normal_closure(const Group& g, std::span<const ElementId> set);

/// [A,B] for normal subgroups A, B of g.
Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b);

/// Set product AB (assumed to be a subgroup, e.g. when one factor is normal).
Subgroup product(const Group& g, const Subgroup& a, const Subgroup& b);

Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// The natural map G -> G/N realized as a permutation group on right cosets.
struct QuotientMap {
  Group group;
  /// image[g] is the id in `group` of the coset N g.
  std::vector<ElementId> image;

  /// Full preimage in the parent of a subgroup of the quotient.
  Subgroup preimage(const Group& parent, const Subgroup& h) const;
};

/// Throws std::invalid_argument if `n` is not normal.
QuotientMap quotient(const Group& g, const Subgroup& n);

/// A Sylow p-subgroup. Throws std::invalid_argument unless p is a prime dividing |g|.
Subgroup sylow(const Group& g, std::uint64_t p);

/// The subgroup `h` as a standalone enumerated group (same degree).
Group as_group(const Subgroup& h, const std::string& name);

/// Ids in `g` of the elements of `sub`, in `sub`'s id order.
std::vector<ElementId> embed(const Group& sub, const Group& g);

}  // namespace engelgraph

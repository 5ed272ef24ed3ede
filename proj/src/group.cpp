#include "engelgraph/group.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>

#include "engelgraph/numtheory.hpp"

namespace engelgraph {

namespace {

constexpr ElementId kEmptySlot = std::numeric_limits<ElementId>::max();

// Closure of a growing generating set, kept as an explicit element list.
class SubgroupBuilder {
public:
  explicit SubgroupBuilder(const Group& g) : g_(g), member_(g.order(), false) {
    member_[kIdentity] = true;
    elements_.push_back(kIdentity);
  }

  bool contains(ElementId a) const { return member_[a]; }
  std::size_t size() const { return elements_.size(); }

  void add_generator(ElementId s) {
    if (member_[s]) return;
    gens_.push_back(s);
    // Every old element must be re-multiplied by the new generator; new
    // elements are multiplied by all generators.
    std::size_t old_size = elements_.size();
    for (std::size_t i = 0; i < old_size; ++i) push(g_.mul(elements_[i], s));
    for (std::size_t i = old_size; i < elements_.size(); ++i) {
      for (ElementId t : gens_) push(g_.mul(elements_[i], t));
    }
  }

  Subgroup finish() && { return Subgroup(g_, std::move(elements_)); }

private:
  void push(ElementId a) {
    if (!member_[a]) {
      member_[a] = true;
      elements_.push_back(a);
    }
  }

  const Group& g_;
  std::vector<bool> member_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> gens_;
};

}  // namespace

struct Group::Cache {
  std::once_flag classes_once;
  ConjugacyClasses classes;
};

std::uint64_t Group::hash_images(std::span<const Point> images) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : images) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return h ^ (h >> 29);
}

void Group::insert_index(ElementId id) {
  if ((order_ + 1) * 2 > slots_.size()) {
    std::size_t cap = std::max<std::size_t>(64, slots_.size() * 2);
    slots_.assign(cap, kEmptySlot);
    slot_mask_ = cap - 1;
    for (ElementId e = 0; e < id; ++e) {
      std::size_t s = hash_images(images(e)) & slot_mask_;
      while (slots_[s] != kEmptySlot) s = (s + 1) & slot_mask_;
      slots_[s] = e;
    }
  }
  std::size_t s = hash_images(images(id)) & slot_mask_;
  while (slots_[s] != kEmptySlot) s = (s + 1) & slot_mask_;
  slots_[s] = id;
}

std::optional<ElementId> Group::find(std::span<const Point> img) const {
  if (img.size() != degree_) return std::nullopt;
  std::size_t s = hash_images(img) & slot_mask_;
  while (slots_[s] != kEmptySlot) {
    auto cand = images(slots_[s]);
    if (std::equal(cand.begin(), cand.end(), img.begin())) return slots_[s];
    s = (s + 1) & slot_mask_;
  }
  return std::nullopt;
}

ElementId Group::id_of(const Permutation& p) const {
  auto id = find(p.images());
  if (!id) throw std::invalid_argument(p.to_cycles() + " is not an element of " + name_);
  return *id;
}

Permutation Group::element(ElementId a) const {
  auto img = images(a);
  return Permutation(std::vector<Point>(img.begin(), img.end()));
}

ElementId Group::mul_slow(ElementId a, ElementId b) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  const Point* pa = elements_.data() + static_cast<std::size_t>(a) * degree_;
  const Point* pb = elements_.data() + static_cast<std::size_t>(b) * degree_;
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = pb[pa[i]];
  auto id = find(buf);
  if (!id) throw std::logic_error("product left the element table of " + name_);
  return *id;
}

ElementId Group::comm_slow(ElementId a, ElementId b) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  auto ia = images(inverses_[a]);
  auto ib = images(inverses_[b]);
  auto pa = images(a);
  auto pb = images(b);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = pb[pa[ib[ia[i]]]];
  auto id = find(buf);
  if (!id) throw std::logic_error("commutator left the element table of " + name_);
  return *id;
}

ElementId Group::pow(ElementId a, std::uint64_t e) const {
  ElementId result = kIdentity;
  ElementId base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Group Group::enumerate(std::vector<Permutation> generators, std::string name,
                       const EnumerationOptions& options) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  const std::size_t n = generators.front().degree();
  for (const auto& s : generators) {
    if (s.degree() != n) throw std::invalid_argument("generators have different degrees");
  }

  Group g;
  g.name_ = std::move(name);
  g.degree_ = n;
  g.generators_ = std::move(generators);
  auto id = Permutation::identity(n);
  g.elements_.assign(id.images().begin(), id.images().end());
  g.insert_index(0);
  g.order_ = 1;

  std::vector<Point> buf(n);
  for (std::size_t cur = 0; cur < g.order_; ++cur) {
    for (const auto& s : g.generators_) {
      const Point* pa = g.elements_.data() + cur * n;
      for (std::size_t i = 0; i < n; ++i) buf[i] = s(pa[i]);
      if (g.find(buf)) continue;
      if (g.order_ >= options.closure_limit) {
        throw LimitExceeded("closure limit exceeded (" + std::to_string(options.closure_limit) +
                                " elements) while enumerating " + g.name_,
                            options.closure_limit + 1);
      }
      g.elements_.insert(g.elements_.end(), buf.begin(), buf.end());
      g.insert_index(static_cast<ElementId>(g.order_));
      ++g.order_;
    }
  }

  for (const auto& s : g.generators_) g.generator_ids_.push_back(g.id_of(s));

  g.inverses_.resize(g.order_);
  g.orders_.resize(g.order_);
  for (ElementId a = 0; a < g.order_; ++a) {
    auto img = g.images(a);
    for (std::size_t i = 0; i < n; ++i) buf[img[i]] = static_cast<Point>(i);
    g.inverses_[a] = *g.find(buf);
    std::uint64_t ord = 1;
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !done[j]; j = img[j]) {
        done[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    g.orders_[a] = static_cast<std::uint32_t>(ord);
  }

  if (g.order_ <= options.table_limit) {
    std::vector<ElementId> table(g.order_ * g.order_);
    for (ElementId a = 0; a < g.order_; ++a) {
      for (ElementId b = 0; b < g.order_; ++b) table[a * g.order_ + b] = g.mul_slow(a, b);
    }
    g.table_ = std::move(table);
  }
  g.cache_ = std::make_shared<Cache>();
  return g;
}

Group Group::renamed(std::string name) const {
  Group copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

const ConjugacyClasses& Group::conjugacy_classes() const {
  std::call_once(cache_->classes_once, [this] {
    auto& cc = cache_->classes;
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    cc.class_of.assign(order_, kUnset);
    for (ElementId x = 0; x < order_; ++x) {
      if (cc.class_of[x] != kUnset) continue;
      auto index = static_cast<std::uint32_t>(cc.classes.size());
      std::vector<ElementId> cls{x};
      cc.class_of[x] = index;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (ElementId s : generator_ids_) {
          ElementId y = conj(cls[i], s);
          if (cc.class_of[y] == kUnset) {
            cc.class_of[y] = index;
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      cc.classes.push_back(std::move(cls));
    }
  });
  return cache_->classes;
}

// --- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(const Group& parent, std::vector<ElementId> ids)
    : parent_(&parent), ids_(std::move(ids)), member_(parent.order(), false) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  for (ElementId a : ids_) {
    if (a >= parent.order()) throw std::out_of_range("element id out of range");
    member_[a] = true;
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(ids_.begin(), ids_.end(), [&](ElementId a) { return other.contains(a); });
}

std::vector<ElementId> Subgroup::generators() const {
  SubgroupBuilder b(*parent_);
  std::vector<ElementId> gens;
  for (ElementId a : ids_) {
    if (b.size() == ids_.size()) break;
    if (!b.contains(a)) {
      gens.push_back(a);
      b.add_generator(a);
    }
  }
  return gens;
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup(g, {kIdentity}); }

Subgroup whole_group(const Group& g) {
  std::vector<ElementId> ids(g.order());
  std::iota(ids.begin(), ids.end(), ElementId{0});
  return Subgroup(g, std::move(ids));
}

Subgroup generate(const Group& g, std::span<const ElementId> gens) {
  SubgroupBuilder b(g);
  for (ElementId s : gens) b.add_generator(s);
  return std::move(b).finish();
}

bool is_subgroup(const Group& g, std::span<const ElementId> ids) {
  Subgroup h(g, std::vector<ElementId>(ids.begin(), ids.end()));
  if (!h.contains(kIdentity)) return false;
  for (ElementId a : h.ids()) {
    for (ElementId b : h.ids()) {
      if (!h.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (ElementId a : h.generators()) {
    for (ElementId s : g.generator_ids()) {
      if (!h.contains(g.conj(a, s))) return false;
    }
  }
  return true;
}

Subgroup centralizer(const Group& g, std::span<const ElementId> set) {
  for (ElementId a : set) {
    if (a >= g.order()) throw std::out_of_range("element id out of range");
  }
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = std::all_of(set.begin(), set.end(), [&](ElementId a) { return g.commute(x, a); });
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  auto gens = h.generators();
  return centralizer(g, gens);
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  auto gens = h.generators();
  // closed under multiplication by its generators <=> subgroup (finite case)
  for (ElementId a : h.ids()) {
    for (ElementId s : gens) {
      if (!h.contains(g.mul(a, s))) throw std::invalid_argument("not a subgroup");
    }
  }
  if (!h.contains(kIdentity)) throw std::invalid_argument("not a subgroup");
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = std::all_of(gens.begin(), gens.end(),
                          [&](ElementId a) { return h.contains(g.conj(a, x)); });
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup normal_closure(const Group& g, std::span<const ElementId> set) {
  const auto& cc = g.conjugacy_classes();
  SubgroupBuilder b(g);
  for (ElementId a : set) {
    for (ElementId c : cc.classes[cc.class_of[a]]) b.add_generator(c);
  }
  return std::move(b).finish();
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  auto ga = a.generators();
  auto gb = b.generators();
  std::vector<ElementId> comms;
  for (ElementId x : ga) {
    for (ElementId y : gb) comms.push_back(g.comm(x, y));
  }
  return normal_closure(g, comms);
}

Subgroup product(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementId> out;
  for (ElementId x : a.ids()) {
    for (ElementId y : b.ids()) {
      ElementId z = g.mul(x, y);
      if (!seen[z]) {
        seen[z] = true;
        out.push_back(z);
      }
    }
  }
  return Subgroup(g, std::move(out));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> out;
  for (ElementId x : a.ids()) {
    if (b.contains(x)) out.push_back(x);
  }
  return Subgroup(a.parent(), std::move(out));
}

Subgroup QuotientMap::preimage(const Group& parent, const Subgroup& h) const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < parent.order(); ++x) {
    if (h.contains(image[x])) out.push_back(x);
  }
  return Subgroup(parent, std::move(out));
}

QuotientMap quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("subgroup is not normal in " + g.name());
  constexpr ElementId kUnset = std::numeric_limits<ElementId>::max();
  const std::size_t index = g.order() / n.order();
  if (index > 0xFFFF) throw LimitExceeded("quotient degree exceeds 65535", index);

  std::vector<ElementId> coset_of(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    auto c = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId m : n.ids()) coset_of[g.mul(m, x)] = c;
  }

  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) {
    std::vector<Point> img(index);
    for (std::size_t c = 0; c < index; ++c) img[c] = static_cast<Point>(coset_of[g.mul(reps[c], s)]);
    gens.emplace_back(std::move(img));
  }
  EnumerationOptions opts;
  opts.closure_limit = std::max<std::size_t>(opts.closure_limit, index);
  QuotientMap q{Group::enumerate(std::move(gens), g.name() + "/N", opts), {}};

  q.image.assign(g.order(), kUnset);
  q.image[kIdentity] = kIdentity;
  std::vector<ElementId> queue{kIdentity};
  auto gen_g = g.generator_ids();
  auto gen_q = q.group.generator_ids();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementId x = queue[i];
    for (std::size_t k = 0; k < gen_g.size(); ++k) {
      ElementId y = g.mul(x, gen_g[k]);
      if (q.image[y] == kUnset) {
        q.image[y] = q.group.mul(q.image[x], gen_q[k]);
        queue.push_back(y);
      }
    }
  }
  return q;
}

Subgroup sylow(const Group& g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0) {
    throw std::invalid_argument(std::to_string(p) + " is not a prime dividing |" + g.name() + "|");
  }
  const std::uint64_t target = p_part(g.order(), p);
  auto is_p_power = [&](std::uint64_t m) { return m > 1 && p_part(m, p) == m; };

  std::vector<ElementId> gens;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (is_p_power(g.element_order(x))) {
      gens.push_back(x);
      break;
    }
  }
  Subgroup pgrp = generate(g, gens);
  while (pgrp.order() < target) {
    Subgroup norm = normalizer(g, pgrp);
    std::optional<ElementId> ext;
    for (ElementId x : norm.ids()) {
      if (!pgrp.contains(x) && pgrp.contains(g.pow(x, p))) {
        ext = x;
        break;
      }
    }
    if (!ext) throw std::logic_error("Sylow extension step found no p-element");
    gens = pgrp.generators();
    gens.push_back(*ext);
    pgrp = generate(g, gens);
  }
  return pgrp;
}

Group as_group(const Subgroup& h, const std::string& name) {
  const Group& g = h.parent();
  std::vector<Permutation> perms;
  for (ElementId a : h.generators()) perms.push_back(g.element(a));
  if (perms.empty()) perms.push_back(Permutation::identity(g.degree()));
  EnumerationOptions opts;
  opts.closure_limit = std::max<std::size_t>(opts.closure_limit, h.order());
  return Group::enumerate(std::move(perms), name, opts);
}

std::vector<ElementId> embed(const Group& sub, const Group& g) {
  std::vector<ElementId> out(sub.order());
  for (ElementId a = 0; a < sub.order(); ++a) {
    auto id = g.find(sub.images(a));
    if (!id) throw std::invalid_argument("group " + sub.name() + " is not contained in " + g.name());
    out[a] = *id;
  }
  return out;
}

}  // namespace engelgraph

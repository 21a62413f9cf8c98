#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bracoid/perm.hpp"

namespace bracoid {

using Elem = std::uint32_t;
/// A set of group elements, always kept sorted and duplicate-free.
using ElementSet = std::vector<Elem>;

/// A finite group given by its Cayley table over 0..order-1. Element 0 is the
/// identity. Values are immutable and cheap to copy (the table is shared).
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  /// Validates the table: square, Latin, 0 is the identity, associative
  /// (exhaustively up to order 64, on a fixed pseudo-random sample above).
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table, std::string label = {});

  std::size_t order() const { return d_->n; }
  Elem mul(Elem a, Elem b) const { return d_->table[a * d_->n + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  Elem pow(Elem a, long long k) const;
  std::size_t element_order(Elem a) const { return d_->orders[a]; }
  bool is_abelian() const;

  std::vector<std::vector<Elem>> table() const;
  /// Group spec string ("D4", "C2xC2", ...) when known; empty otherwise.
  const std::string& label() const { return d_->label; }
  FiniteGroup relabeled(std::string label) const;

  /// Same carrier with a ⋆op b = b ⋆ a.
  FiniteGroup opposite() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t n = 1;
    std::vector<Elem> table{0};
    std::vector<Elem> inverse{0};
    std::vector<std::size_t> orders{1};
    std::string label;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FiniteGroup build(std::size_t n, std::vector<Elem> flat, std::string label);

  friend class PermGroup;
  std::shared_ptr<const Data> d_;
};

/// A validated homomorphism between FiniteGroups.
class GroupHom {
 public:
  /// Throws InvalidArgument if `images` is not multiplicative.
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> images);
  static GroupHom identity(const FiniteGroup& g);

  const FiniteGroup& domain() const { return dom_; }
  const FiniteGroup& codomain() const { return cod_; }
  const std::vector<Elem>& images() const { return images_; }
  Elem operator()(Elem a) const { return images_[a]; }

  ElementSet kernel() const;
  ElementSet image() const;
  bool is_injective() const;
  bool is_surjective() const;

  /// (*this) ∘ first.
  GroupHom after(const GroupHom& first) const;
  /// Inverse of a bijective hom.
  GroupHom inverse() const;

  /// Skips validation; the caller has already established multiplicativity.
  static GroupHom trusted(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> images);

 private:
  GroupHom() = default;

  FiniteGroup dom_;
  FiniteGroup cod_;
  std::vector<Elem> images_;
};

// Standard families. D_n has order 2n and index 2i+j is r^i s^j.
FiniteGroup make_cyclic(std::size_t n);
FiniteGroup make_dihedral(std::size_t n);
FiniteGroup make_symmetric(std::size_t n);
FiniteGroup make_quaternion();
/// (a, b) has index a·|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Subgroup machinery. Functions taking a subgroup H verify it and throw
// InvalidArgument otherwise.
bool is_subgroup(const FiniteGroup& g, const ElementSet& h);
ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens);
ElementSet whole_group(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const ElementSet& h);
ElementSet conjugate_subgroup(const FiniteGroup& g, const ElementSet& h, Elem x);
ElementSet normal_core(const FiniteGroup& g, const ElementSet& h);
ElementSet normalizer(const FiniteGroup& g, const ElementSet& h);
/// Left cosets xH, ordered by their minimal element (so the first one is H).
std::vector<ElementSet> left_cosets(const FiniteGroup& g, const ElementSet& h);
ElementSet intersect(const ElementSet& a, const ElementSet& b);
bool is_subset(const ElementSet& a, const ElementSet& b);

struct Quotient {
  FiniteGroup group;          // coset i ↦ element i
  GroupHom projection;        // G ↠ G/K
  std::vector<Elem> reps;     // minimal representative of each coset
};
Quotient quotient_group(const FiniteGroup& g, const ElementSet& k);

struct Embedded {
  FiniteGroup group;     // element i is h[i]
  GroupHom inclusion;
};
Embedded subgroup_as_group(const FiniteGroup& g, const ElementSet& h);

/// Greedy generating set: repeatedly adds the element of largest order (then
/// smallest index) not yet in the generated subgroup.
std::vector<Elem> generating_set(const FiniteGroup& g);

/// Calls `visit` on every homomorphism a → b in a fixed order until it returns
/// false. With `injective_orders`, generator images must have the same order
/// as the generators (used for isomorphism search).
void for_each_hom(const FiniteGroup& a, const FiniteGroup& b, bool injective_orders,
                  const std::function<bool(const GroupHom&)>& visit);
std::vector<GroupHom> homomorphisms(const FiniteGroup& a, const FiniteGroup& b);
std::vector<GroupHom> surjections(const FiniteGroup& a, const FiniteGroup& b);
std::optional<GroupHom> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
inline bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_group_isomorphism(a, b).has_value();
}

/// Aut(N) as permutations of element indices, sorted. Bounded.
std::vector<Permutation> automorphisms(const FiniteGroup& n);
PermGroup automorphism_group(const FiniteGroup& n);
PermGroup left_regular_rep(const FiniteGroup& n);
/// The permutation η ↦ μ⋆η of N.
Permutation left_translation(const FiniteGroup& n, Elem mu);
PermGroup holomorph(const FiniteGroup& n);
/// Whether σ ∈ Perm(N) lies in λ(N)·Aut(N).
bool in_holomorph(const FiniteGroup& n, const Permutation& sigma);

/// Every subgroup of g, sorted by (order, element list). Bounded by
/// `limit` (defaults to the configured subgroup search bound).
std::vector<ElementSet> all_subgroups(const FiniteGroup& g, std::optional<std::size_t> limit = {});
/// Subgroups of a permutation group, sorted lexicographically.
std::vector<PermGroup> subgroups(const PermGroup& p, std::optional<std::size_t> limit = {});
std::vector<PermGroup> transitive_subgroups(const PermGroup& p, std::optional<std::size_t> limit = {});
/// Transitive subgroups of Hol(N); allowed whenever |N| is within the
/// enumeration bound even though |Hol(N)| may exceed the subgroup bound.
std::vector<PermGroup> holomorph_transitive_subgroups(const FiniteGroup& n);

}  // namespace bracoid

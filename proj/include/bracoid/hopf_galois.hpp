#pragma once

#include <optional>
#include <vector>

#include "bracoid/bracoid.hpp"
#include "bracoid/group.hpp"
#include "bracoid/perm.hpp"

namespace bracoid {

/// X = G/G′ with G acting by left translation of cosets. Cosets are ordered
/// by their minimal element, so G′ itself is coset 0.
struct CosetSpace {
  FiniteGroup G;
  ElementSet G_prime;
  std::vector<ElementSet> cosets;
  std::vector<Elem> rep;                 // minimal element of each coset
  std::vector<Elem> coset_of;            // g ↦ index of gG′
  std::vector<Permutation> translation;  // λ_⊙(g) on coset indices

  std::size_t size() const { return cosets.size(); }
};
/// Throws InvalidArgument if G′ is not a subgroup.
CosetSpace coset_space(const FiniteGroup& g, const ElementSet& g_prime);

/// One representative of each isomorphism type of group of order m ≤ 8.
std::vector<FiniteGroup> groups_of_order(std::size_t m);

/// A group structure ⋆ on X making (G, X, ⋆, translation) a skew bracoid,
/// together with ρ_⋆(X) ≤ Perm(X), ρ_⋆(x)(y) = y ⋆ x⁻¹.
struct HgsStructure {
  CosetSpace space;
  FiniteGroup star;
  PermGroup rho;
  SkewBracoid bracoid;
};

/// Assembles and validates the structure for a given ⋆. Throws
/// AxiomViolation if the relation fails and Error if an invariant breaks.
HgsStructure make_hgs(const CosetSpace& space, const FiniteGroup& star);
/// ⋆ recovered from a G-stable regular N ≤ Perm(X) through a(η) = η⁻¹[ē].
/// Throws InvalidArgument unless N is regular and G-stable.
HgsStructure hgs_from_regular_subgroup(const CosetSpace& space, const PermGroup& n);

/// ρ_⋆(x̄) for every x̄, indexed by x̄.
std::vector<Permutation> right_regular(const FiniteGroup& star);
/// Centralizer of a regular subgroup of Perm(X).
PermGroup regular_centralizer(const PermGroup& n);

/// Every skew bracoid structure on X, sorted by star table. |X| is bounded.
std::vector<HgsStructure> enumerate_hgs(const CosetSpace& space);

/// Transposed ⋆; ρ_{⋆op} is checked against the centralizer of ρ_⋆.
HgsStructure opposite_hgs(const HgsStructure& h);

/// φ_X(gG′) = φ(g)G′ for φ ∈ Aut(G) with φ(G′) = G′.
Permutation induced_on_cosets(const CosetSpace& space, const Permutation& phi);
/// Aut_{G′}(G) as permutations of G.
std::vector<Permutation> automorphisms_fixing(const CosetSpace& space);

struct HgsPartition {
  std::vector<std::size_t> class_of;            // structure index ↦ class id
  std::vector<std::vector<std::size_t>> classes;
  std::size_t aut_fixing_order = 0;             // |Aut_{G′}(G)|
  std::vector<std::size_t> star_stabilizer;     // |Aut_{G′,⋆}(G)| per class
  bool counts_consistent = false;               // size · stabilizer = |Aut_{G′}(G)|
};
/// Class ids follow first appearance in `hs`.
HgsPartition hgs_isomorphism_classes(const CosetSpace& space, const std::vector<HgsStructure>& hs);

struct CorrespondenceEntry {
  ElementSet Y;
  ElementSet G_Y;
  ElementSet realizable_field;  // fixing subgroup of L^Y, equal to G_Y
  bool has_quotient_structure = false;
  bool field_is_galois_over_K = false;
};
/// One entry per left ideal of the bracoid, sorted by |Y|. Throws Error if
/// Y = G_Y/G′ or the degree count fails.
std::vector<CorrespondenceEntry> hg_correspondence(const HgsStructure& h);

/// ker λ_⊙, checked against the normal core of G′.
ElementSet galois_closure_check(const HgsStructure& h);

struct BraceQuotientWitness {
  SkewBrace brace;           // (G, ⋆_G, ·)
  ElementSet strong_left_ideal;
  SkewBracoid quotient;
};
/// First skew brace on G (in enumerate_hgs order) whose quotient by G′ is
/// equivalent to h.bracoid. Empty means none exists at this size.
std::optional<BraceQuotientWitness> detect_brace_quotient(const HgsStructure& h);
std::vector<BraceQuotientWitness> all_brace_quotients(const HgsStructure& h);

}  // namespace bracoid

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracoid/bracoid.hpp"
#include "bracoid/substructure.hpp"

namespace bracoid {

enum class HomFailure { ShapeMismatch, StabilizerCondition, NotMultiplicative, NotCompatible };
const char* to_string(HomFailure f);

/// Carries a witness pair: an element of S with φ(s) ∉ S′, a pair (η, μ)
/// where φ_N fails to multiply, or a pair (g, η) where compatibility fails.
class HomError : public Error {
 public:
  HomError(HomFailure f, Elem a, Elem b, const std::string& detail);
  HomFailure failure() const { return failure_; }
  Elem a() const { return a_; }
  Elem b() const { return b_; }

 private:
  HomFailure failure_;
  Elem a_, b_;
};

/// φ : G → G′ together with the induced φ_N(g ⊙ e) = φ(g) ⊙′ e′.
class BracoidHom {
 public:
  const SkewBracoid& source() const { return source_; }
  const SkewBracoid& target() const { return target_; }
  const GroupHom& phi() const { return phi_; }
  const GroupHom& phi_n() const { return phi_n_; }

 private:
  BracoidHom(SkewBracoid s, SkewBracoid t, GroupHom phi, GroupHom phi_n)
      : source_(std::move(s)), target_(std::move(t)), phi_(std::move(phi)), phi_n_(std::move(phi_n)) {}
  friend BracoidHom make_hom(const SkewBracoid&, const SkewBracoid&, const GroupHom&);

  SkewBracoid source_, target_;
  GroupHom phi_, phi_n_;
};

/// Throws HomError.
BracoidHom make_hom(const SkewBracoid& source, const SkewBracoid& target, const GroupHom& phi);
/// Checks that (φ, ψ) satisfies ψ(g ⊙ η) = φ(g) ⊙′ ψ(η) with ψ a group hom,
/// and returns the hom built by make_hom. Throws HomError.
BracoidHom verify_hom(const SkewBracoid& source, const SkewBracoid& target, const GroupHom& phi,
                      const std::vector<Elem>& psi);

/// ker φ_N, an ideal of the source.
ElementSet kernel(const BracoidHom& h);
/// (Im φ, Im φ_N) as a sub-bracoid of the target.
SubBracoid image(const BracoidHom& h);
bool is_isomorphism(const BracoidHom& h);

/// Isomorphism between reduced bracoids by Aut(N)-conjugation of λ-images,
/// returning the one with the least θ. Throws NotReduced.
std::optional<BracoidHom> find_isomorphism(const SkewBracoid& a, const SkewBracoid& b);
/// Reduces both sides first.
bool reduced_forms_isomorphic(const SkewBracoid& a, const SkewBracoid& b);
/// Search over all group isomorphisms φ : G → G′ with φ(S) = S′; works for
/// non-reduced inputs. Bounded by |G|.
std::optional<BracoidHom> find_isomorphism_exhaustive(const SkewBracoid& a, const SkewBracoid& b);

/// Whether the reduced forms of (G, N/ker φ_N) and the image are isomorphic.
bool first_isomorphism_check(const BracoidHom& h);

/// Automorphisms of N normalizing λ_⊙(G).
std::vector<Permutation> stabilizing_automorphisms(const SkewBracoid& b);
/// |Aut(N)| / |Aut_⊙(N)|. Throws NotReduced.
std::size_t count_equivalence_classes_in_iso_class(const SkewBracoid& b);

/// Whether the reduced forms admit an isomorphism with φ_N the identity.
/// Throws InvalidArgument if the N tables differ.
bool equivalence_as_identity_iso(const SkewBracoid& a, const SkewBracoid& b);

}  // namespace bracoid

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracoid/errors.hpp"
#include "bracoid/group.hpp"
#include "bracoid/perm.hpp"

namespace bracoid {

enum class Axiom { ShapeMismatch, NotHomomorphism, NotTransitive, RelationFails };
const char* to_string(Axiom a);

/// The first violated bracoid axiom. For NotHomomorphism the witness is the
/// pair (g, h) in `g`/`eta`; for RelationFails it is the triple (g, η, μ).
class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom kind, Elem g, Elem eta, Elem mu, const std::string& detail);
  Axiom kind() const { return kind_; }
  Elem g() const { return g_; }
  Elem eta() const { return eta_; }
  Elem mu() const { return mu_; }

 private:
  Axiom kind_;
  Elem g_, eta_, mu_;
};

/// (G, ·, N, ⋆, ⊙): a transitive action of G on N with
///   g ⊙ (η ⋆ μ) = (g ⊙ η) ⋆ (g ⊙ e)⁻¹ ⋆ (g ⊙ μ).
/// action[g] is the permutation η ↦ g ⊙ η. Always valid once constructed.
class SkewBracoid {
 public:
  /// Throws AxiomViolation.
  SkewBracoid(FiniteGroup g, FiniteGroup n, std::vector<Permutation> action);

  const FiniteGroup& G() const { return g_; }
  const FiniteGroup& N() const { return n_; }
  const std::vector<Permutation>& action() const { return action_; }
  Elem act(Elem g, Elem eta) const { return action_[g](eta); }
  /// g ⊙ e_N.
  Elem pi(Elem g) const { return action_[g](0); }
  ElementSet stabilizer(Elem eta = 0) const;

  friend bool operator==(const SkewBracoid& a, const SkewBracoid& b) {
    return a.g_ == b.g_ && a.n_ == b.n_ && a.action_ == b.action_;
  }

 private:
  FiniteGroup g_, n_;
  std::vector<Permutation> action_;
};

/// Scans g, then η, then μ in ascending order and reports the first failure.
std::optional<AxiomViolation> check_bracoid(const FiniteGroup& g, const FiniteGroup& n,
                                            const std::vector<Permutation>& action);
SkewBracoid verify_bracoid(const FiniteGroup& g, const FiniteGroup& n, const std::vector<Permutation>& action);

/// γ(g)(η) = (g⊙e)⁻¹ ⋆ (g⊙η), one automorphism of N per element of G.
std::vector<Permutation> gamma_function(const SkewBracoid& b);

/// λ_⊙(G) as a permutation group.
PermGroup lambda_image(const SkewBracoid& b);

struct HolSubgroup {
  PermGroup group;  // λ_⊙(G) ≤ Hol(N)
  GroupHom lambda;  // G ↠ group.as_finite_group()
};
HolSubgroup to_hol_subgroup(const SkewBracoid& b);
/// Without `delta`, G is A itself acting naturally. `delta` must map onto
/// A.as_finite_group().
SkewBracoid from_hol_subgroup(const FiniteGroup& n, const PermGroup& a, const std::optional<GroupHom>& delta = {});

struct GammaCocyclePair {
  FiniteGroup G, N;
  std::vector<Permutation> gamma;  // G → Aut(N)
  std::vector<Elem> pi;            // surjective 1-cocycle G → N
};
/// Throws InvalidArgument naming the failed condition.
void validate(const GammaCocyclePair& p);
GammaCocyclePair to_gamma_cocycle(const SkewBracoid& b);
/// g ⊙ η = π(g) ⋆ γ(g)(η).
SkewBracoid from_gamma_cocycle(const GammaCocyclePair& p);

/// Same G and action, N replaced by its opposite group.
SkewBracoid opposite(const SkewBracoid& b);

/// Two group structures on one carrier, both with identity 0, satisfying
/// a·(b⋆c) = (a·b) ⋆ a⁻¹ ⋆ (a·c).
class SkewBrace {
 public:
  /// Throws InvalidArgument with the failing triple.
  SkewBrace(FiniteGroup star, FiniteGroup dot);
  const FiniteGroup& star() const { return star_; }
  const FiniteGroup& dot() const { return dot_; }
  std::size_t order() const { return star_.order(); }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) { return a.star_ == b.star_ && a.dot_ == b.dot_; }

 private:
  FiniteGroup star_, dot_;
};

/// γ(a)(b) = a⁻¹ ⋆ (a·b), with ⋆-inverse.
std::vector<Permutation> brace_gamma(const SkewBrace& b);
/// ((B,·), (B,⋆), left multiplication).
SkewBracoid brace_as_bracoid(const SkewBrace& b);
bool is_essentially_brace(const SkewBracoid& b);
/// ∘ on N from (g⊙e) ∘ (h⊙e) = (gh) ⊙ e. Requires |G| = |N|.
SkewBrace transport_to_brace(const SkewBracoid& b);

enum class StrongLeftIdealFailure { NotSubgroup, NotGammaStable, NotNormal };
class StrongLeftIdealError : public Error {
 public:
  StrongLeftIdealError(StrongLeftIdealFailure f, const std::string& what) : Error(what), failure_(f) {}
  StrongLeftIdealFailure failure() const { return failure_; }

 private:
  StrongLeftIdealFailure failure_;
};

struct BraceQuotient {
  SkewBracoid bracoid;  // ((B,·), (B/A,⋆), left translation of cosets)
  Quotient star_quotient;
};
BraceQuotient brace_quotient_bracoid(const SkewBrace& b, const ElementSet& a);

ElementSet kernel_lambda(const SkewBracoid& b);
bool is_reduced(const SkewBracoid& b);
struct ReducedForm {
  SkewBracoid bracoid;
  GroupHom projection;  // G ↠ G / ker λ_⊙
};
ReducedForm reduced_form(const SkewBracoid& b);

/// Same N table and the same λ-image in Hol(N).
bool is_equivalent(const SkewBracoid& a, const SkewBracoid& b);

/// The family G = D_n, N = C_d (d | n), r^i s^j ⊙ η^k = η^{i + (−1)^j k}.
SkewBracoid dihedral_on_cyclic(std::size_t n, std::size_t d);

}  // namespace bracoid

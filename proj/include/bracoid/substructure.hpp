#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracoid/bracoid.hpp"

namespace bracoid {

/// Classification of a subset M ⊆ N. g_m = {g : g ⊙ e ∈ M} is filled in
/// for left ideals only; every flag is false for a non-subgroup.
struct IdealReport {
  ElementSet subset;
  bool subgroup = false;
  bool left_ideal = false;
  bool ideal = false;
  bool enhanced_left_ideal = false;
  bool enhanced_ideal = false;
  ElementSet g_m;

  friend bool operator==(const IdealReport&, const IdealReport&) = default;
};

IdealReport classify_subset(const SkewBracoid& b, const ElementSet& m);
/// {g : g ⊙ e ∈ M}.
ElementSet g_m_of(const SkewBracoid& b, const ElementSet& m);

/// A sub-bracoid (H, M); element i of bracoid.G() is g_part[i] in the
/// parent, element i of bracoid.N() is n_part[i].
struct SubBracoid {
  SkewBracoid bracoid;
  ElementSet g_part;
  ElementSet n_part;
};
/// (G_M, M) for a left ideal M. Throws InvalidArgument otherwise.
SubBracoid sub_bracoid(const SkewBracoid& b, const ElementSet& m);
/// (H, M) with the restricted action. Throws InvalidArgument unless it is a
/// sub-bracoid.
SubBracoid restrict_bracoid(const SkewBracoid& b, const ElementSet& h, const ElementSet& m);
/// Whether (H, M) is a sub-bracoid: H ≤ G, M ≤ N, H ⊙ M ⊆ M, transitive.
bool is_sub_bracoid(const SkewBracoid& b, const ElementSet& h, const ElementSet& m);

struct OrbitSubgroup {
  ElementSet m_h;                         // {h ⊙ e : h ∈ H}
  bool gamma_stable = false;              // γ(G) M_H = M_H
  std::optional<ElementSet> left_ideal;   // M_H when gamma_stable
};
OrbitSubgroup orbit_subgroup(const SkewBracoid& b, const ElementSet& h);

struct QuotientBracoid {
  SkewBracoid bracoid;   // (G, N/M)
  Quotient n_quotient;   // N ↠ N/M
};
/// Throws InvalidArgument unless M is an ideal.
QuotientBracoid quotient_bracoid(const SkewBracoid& b, const ElementSet& m);

struct EnhancedCheck {
  bool enhanced = false;
  bool reduced_quotient_is_brace = false;
};
EnhancedCheck enhanced_iff_brace_check(const SkewBracoid& b, const ElementSet& m);

struct CorrespondencePair {
  ElementSet upstairs;    // P ⊇ M in N
  ElementSet downstairs;  // P/M in N/M
  IdealReport upstairs_report;
  IdealReport downstairs_report;
  bool flags_match = false;   // all four ideal flags agree
  bool g_sets_match = false;  // G_{P/M} = G_P whenever P is a left ideal
};
/// One pair per subgroup of N/M, in enumerate_ideals order of the quotient.
std::vector<CorrespondencePair> ideal_correspondence(const SkewBracoid& b, const ElementSet& m);

/// classify_subset over every subgroup of N, sorted by (order, elements).
std::vector<IdealReport> enumerate_ideals(const SkewBracoid& b);

}  // namespace bracoid

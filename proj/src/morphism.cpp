#include "bracoid/morphism.hpp"

#include <algorithm>
#include <unordered_map>

#include "bracoid/bounds.hpp"

namespace bracoid {

const char* to_string(HomFailure f) {
  switch (f) {
    case HomFailure::ShapeMismatch: return "shape-mismatch";
    case HomFailure::StabilizerCondition: return "stabilizer-condition";
    case HomFailure::NotMultiplicative: return "not-multiplicative";
    case HomFailure::NotCompatible: return "not-compatible";
  }
  return "unknown";
}

HomError::HomError(HomFailure f, Elem a, Elem b, const std::string& detail)
    : Error(std::string(to_string(f)) + ": " + detail), failure_(f), a_(a), b_(b) {}

BracoidHom make_hom(const SkewBracoid& source, const SkewBracoid& target, const GroupHom& phi) {
  if (!(phi.domain() == source.G()) || !(phi.codomain() == target.G()))
    throw HomError(HomFailure::ShapeMismatch, 0, 0, "phi does not map G to G'");
  for (Elem s : source.stabilizer(0))
    if (target.pi(phi(s)) != 0)
      throw HomError(HomFailure::StabilizerCondition, s, phi(s),
                     "stabilizer element " + std::to_string(s) + " maps outside the target stabilizer");

  const FiniteGroup &n = source.N(), &n2 = target.N();
  std::vector<Elem> map(n.order());
  for (Elem g = 0; g < source.G().order(); ++g) map[source.pi(g)] = target.pi(phi(g));
  for (Elem a = 0; a < n.order(); ++a)
    for (Elem b = 0; b < n.order(); ++b)
      if (map[n.mul(a, b)] != n2.mul(map[a], map[b]))
        throw HomError(HomFailure::NotMultiplicative, a, b,
                       "induced map fails to multiply at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  for (Elem g = 0; g < source.G().order(); ++g)
    for (Elem eta = 0; eta < n.order(); ++eta)
      if (map[source.act(g, eta)] != target.act(phi(g), map[eta]))
        throw HomError(HomFailure::NotCompatible, g, eta, "compatibility fails");
  return BracoidHom(source, target, phi, GroupHom::trusted(n, n2, std::move(map)));
}

BracoidHom verify_hom(const SkewBracoid& source, const SkewBracoid& target, const GroupHom& phi,
                      const std::vector<Elem>& psi) {
  const FiniteGroup &n = source.N(), &n2 = target.N();
  if (psi.size() != n.order()) throw HomError(HomFailure::ShapeMismatch, 0, 0, "psi has the wrong length");
  for (Elem v : psi)
    if (v >= n2.order()) throw HomError(HomFailure::ShapeMismatch, 0, 0, "psi value out of range");
  for (Elem a = 0; a < n.order(); ++a)
    for (Elem b = 0; b < n.order(); ++b)
      if (psi[n.mul(a, b)] != n2.mul(psi[a], psi[b]))
        throw HomError(HomFailure::NotMultiplicative, a, b, "psi is not a group homomorphism");
  for (Elem g = 0; g < source.G().order(); ++g)
    for (Elem eta = 0; eta < n.order(); ++eta)
      if (psi[source.act(g, eta)] != target.act(phi(g), psi[eta]))
        throw HomError(HomFailure::NotCompatible, g, eta,
                       "psi(g . eta) != phi(g) . psi(eta) at (" + std::to_string(g) + ", " + std::to_string(eta) + ")");
  BracoidHom h = make_hom(source, target, phi);
  if (h.phi_n().images() != psi) throw Error("hand-supplied psi differs from the induced map");
  return h;
}

ElementSet kernel(const BracoidHom& h) { return h.phi_n().kernel(); }

SubBracoid image(const BracoidHom& h) { return restrict_bracoid(h.target(), h.phi().image(), h.phi_n().image()); }

bool is_isomorphism(const BracoidHom& h) {
  return h.phi().is_injective() && h.phi().is_surjective() && h.phi_n().is_injective() && h.phi_n().is_surjective();
}

std::optional<BracoidHom> find_isomorphism(const SkewBracoid& a, const SkewBracoid& b) {
  if (!is_reduced(a) || !is_reduced(b)) throw NotReduced("find_isomorphism needs reduced bracoids");
  if (a.G().order() != b.G().order() || a.N().order() != b.N().order()) return std::nullopt;
  auto rho = find_group_isomorphism(b.N(), a.N());
  if (!rho) return std::nullopt;

  // b's λ-image transported onto N's carrier: σ ↦ ρ σ ρ⁻¹.
  const std::size_t n = a.N().order();
  std::unordered_map<Permutation, Elem, PermutationHash> relabeled;
  std::vector<Permutation> b_image;
  for (Elem g = 0; g < b.G().order(); ++g) {
    std::vector<Point> im(n);
    for (Elem x = 0; x < n; ++x) im[(*rho)(x)] = (*rho)(b.act(g, x));
    Permutation s(std::move(im));
    relabeled.emplace(s, g);
    b_image.push_back(std::move(s));
  }
  const PermGroup target = PermGroup::from_group_elements(n, std::move(b_image));
  const PermGroup source = lambda_image(a);

  for (const auto& theta : automorphisms(a.N())) {
    if (source.conjugate(theta) != target) continue;
    const Permutation tinv = theta.inverse();
    std::vector<Elem> phi(a.G().order());
    for (Elem g = 0; g < a.G().order(); ++g) phi[g] = relabeled.at(theta * a.action()[g] * tinv);
    BracoidHom h = make_hom(a, b, GroupHom(a.G(), b.G(), std::move(phi)));
    const GroupHom rho_inv = rho->inverse();
    for (Elem x = 0; x < n; ++x)
      if (h.phi_n()(x) != rho_inv(theta(x))) throw Error("induced map differs from the conjugating automorphism");
    return h;
  }
  return std::nullopt;
}

bool reduced_forms_isomorphic(const SkewBracoid& a, const SkewBracoid& b) {
  return find_isomorphism(reduced_form(a).bracoid, reduced_form(b).bracoid).has_value();
}

std::optional<BracoidHom> find_isomorphism_exhaustive(const SkewBracoid& a, const SkewBracoid& b) {
  require_within("exhaustive isomorphism order", a.G().order(), bounds().exhaustive_iso);
  if (a.G().order() != b.G().order() || a.N().order() != b.N().order()) return std::nullopt;
  const ElementSet s = a.stabilizer(0), s2 = b.stabilizer(0);
  std::optional<BracoidHom> found;
  for_each_hom(a.G(), b.G(), true, [&](const GroupHom& phi) {
    if (!phi.is_injective()) return true;
    ElementSet img;
    for (Elem x : s) img.push_back(phi(x));
    std::sort(img.begin(), img.end());
    if (img != s2) return true;
    try {
      BracoidHom h = make_hom(a, b, phi);
      if (!is_isomorphism(h)) return true;
      found = std::move(h);
      return false;
    } catch (const HomError&) {
      return true;
    }
  });
  return found;
}

bool first_isomorphism_check(const BracoidHom& h) {
  const SkewBracoid q = quotient_bracoid(h.source(), kernel(h)).bracoid;
  const SkewBracoid im = image(h).bracoid;
  return find_isomorphism(reduced_form(q).bracoid, reduced_form(im).bracoid).has_value();
}

std::vector<Permutation> stabilizing_automorphisms(const SkewBracoid& b) {
  const PermGroup a = lambda_image(b);
  std::vector<Permutation> out;
  for (const auto& theta : automorphisms(b.N()))
    if (a.normalized_by(theta)) out.push_back(theta);
  return out;
}

std::size_t count_equivalence_classes_in_iso_class(const SkewBracoid& b) {
  if (!is_reduced(b)) throw NotReduced("counting needs a reduced bracoid");
  return automorphisms(b.N()).size() / stabilizing_automorphisms(b).size();
}

bool equivalence_as_identity_iso(const SkewBracoid& a, const SkewBracoid& b) {
  if (!(a.N() == b.N())) throw InvalidArgument("bracoids have different N");
  const SkewBracoid ra = reduced_form(a).bracoid, rb = reduced_form(b).bracoid;
  if (ra.G().order() != rb.G().order()) return false;
  // In a reduced bracoid an identity φ_N forces λ′(φ(g)) = λ(g).
  std::unordered_map<Permutation, Elem, PermutationHash> where;
  for (Elem g = 0; g < rb.G().order(); ++g) where.emplace(rb.action()[g], g);
  std::vector<Elem> phi(ra.G().order());
  for (Elem g = 0; g < ra.G().order(); ++g) {
    auto it = where.find(ra.action()[g]);
    if (it == where.end()) return false;
    phi[g] = it->second;
  }
  try {
    BracoidHom h = make_hom(ra, rb, GroupHom(ra.G(), rb.G(), std::move(phi)));
    return is_isomorphism(h) && h.phi_n().images() == GroupHom::identity(ra.N()).images();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace bracoid

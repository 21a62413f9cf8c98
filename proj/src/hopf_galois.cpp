#include "bracoid/hopf_galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bracoid/bounds.hpp"
#include "bracoid/substructure.hpp"

namespace bracoid {

CosetSpace coset_space(const FiniteGroup& g, const ElementSet& g_prime) {
  if (!is_subgroup(g, g_prime)) throw InvalidArgument("G' is not a subgroup of G");
  CosetSpace s{g, g_prime, left_cosets(g, g_prime), {}, std::vector<Elem>(g.order()), {}};
  for (std::size_t i = 0; i < s.cosets.size(); ++i) {
    s.rep.push_back(s.cosets[i].front());
    for (Elem x : s.cosets[i]) s.coset_of[x] = static_cast<Elem>(i);
  }
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Point> im(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) im[i] = s.coset_of[g.mul(x, s.rep[i])];
    s.translation.emplace_back(std::move(im));
  }
  return s;
}

std::vector<FiniteGroup> groups_of_order(std::size_t m) {
  const auto c = make_cyclic;
  switch (m) {
    case 1: case 2: case 3: case 5: case 7: return {c(m)};
    case 4: return {c(4), direct_product(c(2), c(2))};
    case 6: return {c(6), make_dihedral(3)};
    case 8:
      return {c(8), direct_product(c(4), c(2)), direct_product(direct_product(c(2), c(2)), c(2)),
              make_dihedral(4), make_quaternion()};
  }
  throw BoundExceeded("catalogue group order", m, 8);
}

std::vector<Permutation> right_regular(const FiniteGroup& star) {
  const std::size_t m = star.order();
  std::vector<Permutation> out;
  for (Elem x = 0; x < m; ++x) {
    std::vector<Point> im(m);
    for (Elem y = 0; y < m; ++y) im[y] = star.mul(y, star.inv(x));
    out.emplace_back(std::move(im));
  }
  return out;
}

PermGroup regular_centralizer(const PermGroup& n) {
  if (!n.is_regular()) throw InvalidArgument("centralizer expects a regular group");
  const std::size_t m = n.degree();
  // η ∈ N is determined by η(0); a commuting σ is determined by σ(0).
  std::vector<const Permutation*> by_point(m);
  for (const auto& eta : n.elements()) by_point[eta(0)] = &eta;
  const auto gens = n.generators();
  std::vector<Permutation> out;
  for (Point c = 0; c < m; ++c) {
    std::vector<Point> im(m);
    for (Point p = 0; p < m; ++p) im[p] = (*by_point[p])(c);
    Permutation sigma(std::move(im));
    bool commutes = std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return g * sigma == sigma * g; });
    if (commutes) out.push_back(std::move(sigma));
  }
  return PermGroup::from_elements(m, std::move(out));
}

HgsStructure make_hgs(const CosetSpace& space, const FiniteGroup& star) {
  const std::size_t m = space.size();
  if (star.order() != m) throw InvalidArgument("star table has the wrong size");
  SkewBracoid b(space.G, star, space.translation);
  const auto rho_of = right_regular(star);
  PermGroup rho = PermGroup::from_group_elements(m, rho_of);
  if (!rho.is_regular()) throw Error("rho is not regular");

  const auto gamma = gamma_function(b);
  for (Elem g = 0; g < space.G.order(); ++g) {
    const Permutation& l = space.translation[g];
    const Permutation linv = l.inverse();
    for (Elem x = 0; x < m; ++x)
      if (l * rho_of[x] * linv != rho_of[gamma[g](x)]) throw Error("rho is not G-stable in the expected way");
  }
  // a(η) = η⁻¹[ē] carries composition in rho to ⋆.
  for (const auto& eta : rho.elements())
    for (const auto& mu : rho.elements())
      if ((eta * mu).inverse()(0) != star.mul(eta.inverse()(0), mu.inverse()(0)))
        throw Error("a is not multiplicative");
  return {space, star, std::move(rho), std::move(b)};
}

HgsStructure hgs_from_regular_subgroup(const CosetSpace& space, const PermGroup& n) {
  const std::size_t m = space.size();
  if (n.degree() != m || !n.is_regular()) throw InvalidArgument("N is not a regular subgroup of Perm(X)");
  for (const auto& l : space.translation)
    if (!n.normalized_by(l)) throw InvalidArgument("N is not G-stable");
  std::vector<const Permutation*> by_a(m);
  for (const auto& eta : n.elements()) by_a[eta.inverse()(0)] = &eta;
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) t[x][y] = (*by_a[x] * *by_a[y]).inverse()(0);
  HgsStructure h = make_hgs(space, FiniteGroup::from_table(t));
  if (!(h.rho == n)) throw Error("rho differs from N");
  return h;
}

namespace {

bool relation_holds(const FiniteGroup& star, const Permutation& l) {
  const std::size_t m = star.order();
  const Elem pinv = star.inv(l(0));
  for (Elem a = 0; a < m; ++a) {
    const Elem left = star.mul(l(a), pinv);
    for (Elem b = 0; b < m; ++b)
      if (l(star.mul(a, b)) != star.mul(left, l(b))) return false;
  }
  return true;
}

}  // namespace

std::vector<HgsStructure> enumerate_hgs(const CosetSpace& space) {
  const std::size_t m = space.size();
  require_within("coset space size", m, bounds().coset_space);
  std::vector<Permutation> gen_actions;
  for (Elem g : generating_set(space.G)) gen_actions.push_back(space.translation[g]);

  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> survivors;
  for (const auto& t : groups_of_order(m)) {
    std::vector<Elem> f(m);
    std::iota(f.begin(), f.end(), 0);
    do {
      std::vector<Elem> flat(m * m);
      for (Elem a = 0; a < m; ++a)
        for (Elem b = 0; b < m; ++b) flat[f[a] * m + f[b]] = f[t.mul(a, b)];
      if (!seen.insert(flat).second) continue;
      std::vector<std::vector<Elem>> rows(m);
      for (Elem a = 0; a < m; ++a) rows[a].assign(flat.begin() + a * m, flat.begin() + (a + 1) * m);
      const FiniteGroup star = FiniteGroup::from_table(rows);
      if (std::all_of(gen_actions.begin(), gen_actions.end(),
                      [&](const Permutation& l) { return relation_holds(star, l); }))
        survivors.push_back(std::move(flat));
    } while (m > 1 && std::next_permutation(f.begin() + 1, f.end()));
  }
  std::sort(survivors.begin(), survivors.end());

  std::vector<HgsStructure> out;
  for (const auto& flat : survivors) {
    std::vector<std::vector<Elem>> rows(m);
    for (Elem a = 0; a < m; ++a) rows[a].assign(flat.begin() + a * m, flat.begin() + (a + 1) * m);
    out.push_back(make_hgs(space, FiniteGroup::from_table(rows)));
  }
  return out;
}

HgsStructure opposite_hgs(const HgsStructure& h) {
  HgsStructure op = make_hgs(h.space, h.star.opposite());
  if (!(regular_centralizer(h.rho) == op.rho)) throw Error("rho of the opposite is not the centralizer of rho");
  return op;
}

Permutation induced_on_cosets(const CosetSpace& space, const Permutation& phi) {
  std::vector<Point> im(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) im[i] = space.coset_of[phi(space.rep[i])];
  return Permutation(std::move(im));
}

std::vector<Permutation> automorphisms_fixing(const CosetSpace& space) {
  std::vector<Permutation> out;
  for (const auto& phi : automorphisms(space.G)) {
    ElementSet img;
    for (Elem x : space.G_prime) img.push_back(phi(x));
    std::sort(img.begin(), img.end());
    if (img == space.G_prime) out.push_back(phi);
  }
  return out;
}

HgsPartition hgs_isomorphism_classes(const CosetSpace& space, const std::vector<HgsStructure>& hs) {
  const auto auts = automorphisms_fixing(space);
  std::vector<Permutation> on_x;
  for (const auto& phi : auts) on_x.push_back(induced_on_cosets(space, phi));

  HgsPartition p;
  p.aut_fixing_order = auts.size();
  std::map<PermGroup, std::size_t> index;
  for (std::size_t i = 0; i < hs.size(); ++i) index.emplace(hs[i].rho, i);
  p.class_of.assign(hs.size(), hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (p.class_of[i] != hs.size()) continue;
    const std::size_t id = p.classes.size();
    std::vector<std::size_t> members;
    for (const auto& phx : on_x) {
      auto it = index.find(hs[i].rho.conjugate(phx));
      if (it != index.end() && p.class_of[it->second] == hs.size()) {
        p.class_of[it->second] = id;
        members.push_back(it->second);
      }
    }
    std::sort(members.begin(), members.end());
    p.classes.push_back(std::move(members));

    const FiniteGroup& star = hs[i].star;
    std::size_t stab = 0;
    for (const auto& phx : on_x) {
      bool hom = true;
      for (Elem a = 0; a < star.order() && hom; ++a)
        for (Elem b = 0; b < star.order() && hom; ++b) hom = phx(star.mul(a, b)) == star.mul(phx(a), phx(b));
      stab += hom;
    }
    p.star_stabilizer.push_back(stab);
  }
  p.counts_consistent = true;
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    if (p.classes[c].size() * p.star_stabilizer[c] != p.aut_fixing_order) p.counts_consistent = false;
  return p;
}

std::vector<CorrespondenceEntry> hg_correspondence(const HgsStructure& h) {
  const CosetSpace& s = h.space;
  std::vector<CorrespondenceEntry> out;
  for (const auto& r : enumerate_ideals(h.bracoid)) {
    if (!r.left_ideal) continue;
    ElementSet image;
    for (Elem g : r.g_m) image.push_back(s.coset_of[g]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image != r.subset) throw Error("Y is not the image of G_Y");
    if (!is_subset(s.G_prime, r.g_m)) throw Error("G' is not contained in G_Y");
    if (r.g_m.size() != s.G_prime.size() * r.subset.size()) throw Error("|G_Y| != |G'| |Y|");
    out.push_back({r.subset, r.g_m, r.g_m, r.ideal, r.enhanced_left_ideal});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CorrespondenceEntry& a, const CorrespondenceEntry& b) { return a.Y.size() < b.Y.size(); });
  return out;
}

ElementSet galois_closure_check(const HgsStructure& h) {
  ElementSet k = kernel_lambda(h.bracoid);
  if (k != normal_core(h.space.G, h.space.G_prime)) throw Error("ker lambda differs from the normal core of G'");
  return k;
}

namespace {

std::vector<BraceQuotientWitness> brace_quotients(const HgsStructure& h, bool first_only) {
  const FiniteGroup& g = h.space.G;
  require_within("brace quotient search order", g.order(), bounds().hom_search);
  std::vector<BraceQuotientWitness> out;
  for (const auto& full : enumerate_hgs(coset_space(g, {0}))) {
    SkewBrace brace(full.star, g);
    try {
      BraceQuotient q = brace_quotient_bracoid(brace, h.space.G_prime);
      if (!is_equivalent(q.bracoid, h.bracoid)) continue;
      out.push_back({std::move(brace), h.space.G_prime, std::move(q.bracoid)});
      if (first_only) break;
    } catch (const StrongLeftIdealError&) {
    }
  }
  return out;
}

}  // namespace

std::optional<BraceQuotientWitness> detect_brace_quotient(const HgsStructure& h) {
  auto all = brace_quotients(h, true);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<BraceQuotientWitness> all_brace_quotients(const HgsStructure& h) { return brace_quotients(h, false); }

}  // namespace bracoid

#include "bracoid/substructure.hpp"

#include <algorithm>

namespace bracoid {

namespace {

std::vector<bool> members(std::size_t n, const ElementSet& s) {
  std::vector<bool> in(n, false);
  for (Elem x : s)
    if (x < n) in[x] = true;
  return in;
}

bool gamma_stable(const SkewBracoid& b, const std::vector<Permutation>& gamma, const ElementSet& m) {
  auto in = members(b.N().order(), m);
  for (const auto& t : gamma)
    for (Elem x : m)
      if (!in[t(x)]) return false;
  return true;
}

IdealReport classify_with(const SkewBracoid& b, const std::vector<Permutation>& gamma, const ElementSet& m) {
  IdealReport r;
  r.subset = m;
  if (!is_subgroup(b.N(), m)) return r;
  r.subgroup = true;
  r.left_ideal = gamma_stable(b, gamma, m);
  if (!r.left_ideal) return r;
  r.ideal = is_normal(b.N(), m);
  r.g_m = g_m_of(b, m);
  r.enhanced_left_ideal = is_normal(b.G(), r.g_m);
  r.enhanced_ideal = r.ideal && r.enhanced_left_ideal;
  return r;
}

}  // namespace

ElementSet g_m_of(const SkewBracoid& b, const ElementSet& m) {
  auto in = members(b.N().order(), m);
  ElementSet out;
  for (Elem g = 0; g < b.G().order(); ++g)
    if (in[b.pi(g)]) out.push_back(g);
  return out;
}

IdealReport classify_subset(const SkewBracoid& b, const ElementSet& m) {
  return classify_with(b, gamma_function(b), m);
}

bool is_sub_bracoid(const SkewBracoid& b, const ElementSet& h, const ElementSet& m) {
  if (!is_subgroup(b.G(), h) || !is_subgroup(b.N(), m)) return false;
  auto in = members(b.N().order(), m);
  for (Elem g : h)
    for (Elem x : m)
      if (!in[b.act(g, x)]) return false;
  std::vector<bool> hit(b.N().order(), false);
  for (Elem g : h) hit[b.pi(g)] = true;
  return std::all_of(m.begin(), m.end(), [&](Elem x) { return hit[x]; });
}

SubBracoid restrict_bracoid(const SkewBracoid& b, const ElementSet& h, const ElementSet& m) {
  if (!is_sub_bracoid(b, h, m)) throw InvalidArgument("(H, M) is not a sub-bracoid");
  Embedded gs = subgroup_as_group(b.G(), h);
  Embedded ns = subgroup_as_group(b.N(), m);
  std::vector<Elem> pos(b.N().order(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) pos[m[i]] = static_cast<Elem>(i);
  std::vector<Permutation> action;
  for (Elem g : h) {
    std::vector<Point> im(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) im[i] = pos[b.act(g, m[i])];
    action.emplace_back(std::move(im));
  }
  return {SkewBracoid(gs.group, ns.group, std::move(action)), h, m};
}

SubBracoid sub_bracoid(const SkewBracoid& b, const ElementSet& m) {
  IdealReport r = classify_subset(b, m);
  if (!r.left_ideal) throw InvalidArgument("subset is not a left ideal");
  return restrict_bracoid(b, r.g_m, m);
}

OrbitSubgroup orbit_subgroup(const SkewBracoid& b, const ElementSet& h) {
  if (!is_subgroup(b.G(), h)) throw InvalidArgument("H is not a subgroup of G");
  OrbitSubgroup out;
  for (Elem g : h) out.m_h.push_back(b.pi(g));
  std::sort(out.m_h.begin(), out.m_h.end());
  out.m_h.erase(std::unique(out.m_h.begin(), out.m_h.end()), out.m_h.end());
  out.gamma_stable = gamma_stable(b, gamma_function(b), out.m_h);
  if (out.gamma_stable) {
    if (!is_subgroup(b.N(), out.m_h)) throw Error("gamma-stable orbit of a subgroup is not a subgroup of N");
    out.left_ideal = out.m_h;
  }
  return out;
}

QuotientBracoid quotient_bracoid(const SkewBracoid& b, const ElementSet& m) {
  if (!classify_subset(b, m).ideal) throw InvalidArgument("subset is not an ideal");
  Quotient q = quotient_group(b.N(), m);
  std::vector<Permutation> action;
  for (Elem g = 0; g < b.G().order(); ++g) {
    std::vector<Point> im(q.reps.size());
    for (std::size_t i = 0; i < q.reps.size(); ++i) im[i] = q.projection(b.act(g, q.reps[i]));
    action.emplace_back(std::move(im));
  }
  return {SkewBracoid(b.G(), q.group, std::move(action)), std::move(q)};
}

EnhancedCheck enhanced_iff_brace_check(const SkewBracoid& b, const ElementSet& m) {
  EnhancedCheck c;
  c.enhanced = classify_subset(b, m).enhanced_left_ideal;
  c.reduced_quotient_is_brace = is_essentially_brace(reduced_form(quotient_bracoid(b, m).bracoid).bracoid);
  return c;
}

std::vector<CorrespondencePair> ideal_correspondence(const SkewBracoid& b, const ElementSet& m) {
  QuotientBracoid qb = quotient_bracoid(b, m);
  const Quotient& q = qb.n_quotient;
  const auto gamma_up = gamma_function(b);
  const auto gamma_down = gamma_function(qb.bracoid);
  std::vector<CorrespondencePair> out;
  for (const auto& down : all_subgroups(q.group, b.N().order())) {
    auto in = members(q.group.order(), down);
    ElementSet up;
    for (Elem x = 0; x < b.N().order(); ++x)
      if (in[q.projection(x)]) up.push_back(x);
    CorrespondencePair p{up, down, classify_with(b, gamma_up, up), classify_with(qb.bracoid, gamma_down, down)};
    const IdealReport &u = p.upstairs_report, &d = p.downstairs_report;
    p.flags_match = u.left_ideal == d.left_ideal && u.ideal == d.ideal &&
                    u.enhanced_left_ideal == d.enhanced_left_ideal && u.enhanced_ideal == d.enhanced_ideal;
    p.g_sets_match = !u.left_ideal || u.g_m == d.g_m;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<IdealReport> enumerate_ideals(const SkewBracoid& b) {
  const auto gamma = gamma_function(b);
  std::vector<IdealReport> out;
  for (const auto& m : all_subgroups(b.N())) out.push_back(classify_with(b, gamma, m));
  return out;
}

}  // namespace bracoid

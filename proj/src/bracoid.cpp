#include "bracoid/bracoid.hpp"

#include <algorithm>

#include "bracoid/bounds.hpp"

namespace bracoid {

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::ShapeMismatch: return "shape-mismatch";
    case Axiom::NotHomomorphism: return "not-a-homomorphism";
    case Axiom::NotTransitive: return "not-transitive";
    case Axiom::RelationFails: return "relation-fails";
  }
  return "unknown";
}

AxiomViolation::AxiomViolation(Axiom kind, Elem g, Elem eta, Elem mu, const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind), g_(g), eta_(eta), mu_(mu) {}

std::optional<AxiomViolation> check_bracoid(const FiniteGroup& g, const FiniteGroup& n,
                                            const std::vector<Permutation>& action) {
  const std::size_t ng = g.order(), nn = n.order();
  if (action.size() != ng)
    return AxiomViolation(Axiom::ShapeMismatch, 0, 0, 0,
                          "action has " + std::to_string(action.size()) + " rows for a group of order " +
                              std::to_string(ng));
  for (Elem x = 0; x < ng; ++x)
    if (action[x].degree() != nn)
      return AxiomViolation(Axiom::ShapeMismatch, x, 0, 0,
                            "action row " + std::to_string(x) + " has degree " +
                                std::to_string(action[x].degree()) + ", expected " + std::to_string(nn));

  if (!action[0].is_identity()) return AxiomViolation(Axiom::NotHomomorphism, 0, 0, 0, "identity acts nontrivially");
  for (Elem x = 0; x < ng; ++x)
    for (Elem y = 0; y < ng; ++y)
      for (Elem eta = 0; eta < nn; ++eta)
        if (action[g.mul(x, y)](eta) != action[x](action[y](eta)))
          return AxiomViolation(Axiom::NotHomomorphism, x, y, 0,
                                "action of " + std::to_string(x) + "*" + std::to_string(y) +
                                    " differs from the composite");

  std::vector<bool> hit(nn, false);
  for (Elem x = 0; x < ng; ++x) hit[action[x](0)] = true;
  for (Elem eta = 0; eta < nn; ++eta)
    if (!hit[eta])
      return AxiomViolation(Axiom::NotTransitive, 0, eta, 0, "element " + std::to_string(eta) + " not in the orbit of e");

  for (Elem x = 0; x < ng; ++x) {
    const Permutation& a = action[x];
    const Elem pinv = n.inv(a(0));
    for (Elem eta = 0; eta < nn; ++eta)
      for (Elem mu = 0; mu < nn; ++mu)
        if (a(n.mul(eta, mu)) != n.mul(n.mul(a(eta), pinv), a(mu)))
          return AxiomViolation(Axiom::RelationFails, x, eta, mu,
                                "relation fails at (g, eta, mu) = (" + std::to_string(x) + ", " +
                                    std::to_string(eta) + ", " + std::to_string(mu) + ")");
  }
  return std::nullopt;
}

SkewBracoid::SkewBracoid(FiniteGroup g, FiniteGroup n, std::vector<Permutation> action)
    : g_(std::move(g)), n_(std::move(n)), action_(std::move(action)) {
  if (auto v = check_bracoid(g_, n_, action_)) throw *v;
}

SkewBracoid verify_bracoid(const FiniteGroup& g, const FiniteGroup& n, const std::vector<Permutation>& action) {
  return SkewBracoid(g, n, action);
}

ElementSet SkewBracoid::stabilizer(Elem eta) const {
  ElementSet s;
  for (Elem x = 0; x < g_.order(); ++x)
    if (action_[x](eta) == eta) s.push_back(x);
  return s;
}

std::vector<Permutation> gamma_function(const SkewBracoid& b) {
  const FiniteGroup& n = b.N();
  std::vector<Permutation> gamma;
  gamma.reserve(b.G().order());
  for (Elem x = 0; x < b.G().order(); ++x) {
    const Elem pinv = n.inv(b.pi(x));
    std::vector<Point> im(n.order());
    for (Elem eta = 0; eta < n.order(); ++eta) im[eta] = n.mul(pinv, b.act(x, eta));
    gamma.emplace_back(std::move(im));
  }
  const FiniteGroup& g = b.G();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem a = 0; a < n.order(); ++a)
      for (Elem c = 0; c < n.order(); ++c)
        if (gamma[x](n.mul(a, c)) != n.mul(gamma[x](a), gamma[x](c))) throw Error("gamma value is not an automorphism");
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (gamma[g.mul(x, y)] != gamma[x] * gamma[y]) throw Error("gamma is not a homomorphism");
  return gamma;
}

PermGroup lambda_image(const SkewBracoid& b) { return PermGroup::from_group_elements(b.N().order(), b.action()); }

HolSubgroup to_hol_subgroup(const SkewBracoid& b) {
  require_within("holomorph order", b.N().order(), bounds().automorphism_order);
  const FiniteGroup& n = b.N();
  const auto gamma = gamma_function(b);
  for (Elem x = 0; x < b.G().order(); ++x)
    if (b.action()[x] != left_translation(n, b.pi(x)) * gamma[x])
      throw Error("action does not factor as translation times automorphism");
  PermGroup a = lambda_image(b);
  for (const auto& s : a.generators())
    if (!in_holomorph(n, s)) throw Error("action image leaves the holomorph");
  std::vector<Elem> idx(b.G().order());
  for (Elem x = 0; x < b.G().order(); ++x) idx[x] = static_cast<Elem>(*a.index_of(b.action()[x]));
  GroupHom lambda(b.G(), a.as_finite_group(), std::move(idx));
  return {std::move(a), std::move(lambda)};
}

SkewBracoid from_hol_subgroup(const FiniteGroup& n, const PermGroup& a, const std::optional<GroupHom>& delta) {
  if (a.degree() != n.order()) throw InvalidArgument("permutation group degree differs from |N|");
  if (!a.is_transitive()) throw InvalidArgument("subgroup is not transitive");
  for (const auto& s : a.generators())
    if (!in_holomorph(n, s)) throw InvalidArgument("subgroup is not contained in Hol(N)");
  if (!delta) return SkewBracoid(a.as_finite_group(), n, a.elements());
  if (delta->codomain().order() != a.order() || !(delta->codomain() == a.as_finite_group()))
    throw InvalidArgument("delta does not map into the given subgroup");
  if (!delta->is_surjective()) throw InvalidArgument("delta is not surjective");
  std::vector<Permutation> action;
  action.reserve(delta->domain().order());
  for (Elem x = 0; x < delta->domain().order(); ++x) action.push_back(a[(*delta)(x)]);
  return SkewBracoid(delta->domain(), n, std::move(action));
}

void validate(const GammaCocyclePair& p) {
  const FiniteGroup &g = p.G, &n = p.N;
  if (p.gamma.size() != g.order() || p.pi.size() != g.order())
    throw InvalidArgument("gamma / pi arrays do not match |G|");
  for (Elem x = 0; x < g.order(); ++x) {
    const Permutation& t = p.gamma[x];
    if (t.degree() != n.order()) throw InvalidArgument("gamma value has the wrong degree");
    for (Elem a = 0; a < n.order(); ++a)
      for (Elem c = 0; c < n.order(); ++c)
        if (t(n.mul(a, c)) != n.mul(t(a), t(c)))
          throw InvalidArgument("gamma(" + std::to_string(x) + ") is not an automorphism");
  }
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (p.gamma[g.mul(x, y)] != p.gamma[x] * p.gamma[y])
        throw InvalidArgument("gamma is not a homomorphism at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  std::vector<bool> hit(n.order(), false);
  for (Elem v : p.pi) {
    if (v >= n.order()) throw InvalidArgument("pi value out of range");
    hit[v] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw InvalidArgument("pi is not surjective");
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (p.pi[g.mul(x, y)] != n.mul(p.pi[x], p.gamma[x](p.pi[y])))
        throw InvalidArgument("cocycle identity fails at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
}

GammaCocyclePair to_gamma_cocycle(const SkewBracoid& b) {
  GammaCocyclePair p{b.G(), b.N(), gamma_function(b), {}};
  p.pi.resize(b.G().order());
  for (Elem x = 0; x < b.G().order(); ++x) p.pi[x] = b.pi(x);
  validate(p);
  return p;
}

SkewBracoid from_gamma_cocycle(const GammaCocyclePair& p) {
  validate(p);
  const FiniteGroup& n = p.N;
  std::vector<Permutation> action;
  action.reserve(p.G.order());
  for (Elem x = 0; x < p.G.order(); ++x) {
    std::vector<Point> im(n.order());
    for (Elem eta = 0; eta < n.order(); ++eta) im[eta] = n.mul(p.pi[x], p.gamma[x](eta));
    action.emplace_back(std::move(im));
  }
  return SkewBracoid(p.G, p.N, std::move(action));
}

SkewBracoid opposite(const SkewBracoid& b) { return SkewBracoid(b.G(), b.N().opposite(), b.action()); }

// ---------------------------------------------------------------- skew braces

SkewBrace::SkewBrace(FiniteGroup star, FiniteGroup dot) : star_(std::move(star)), dot_(std::move(dot)) {
  const std::size_t n = star_.order();
  if (dot_.order() != n) throw InvalidArgument("skew brace tables have different orders");
  for (Elem a = 0; a < n; ++a) {
    const Elem ainv = star_.inv(a);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (dot_.mul(a, star_.mul(b, c)) != star_.mul(star_.mul(dot_.mul(a, b), ainv), dot_.mul(a, c)))
          throw InvalidArgument("skew brace relation fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + ")");
  }
}

std::vector<Permutation> brace_gamma(const SkewBrace& b) {
  std::vector<Permutation> out;
  for (Elem a = 0; a < b.order(); ++a) {
    std::vector<Point> im(b.order());
    for (Elem x = 0; x < b.order(); ++x) im[x] = b.star().mul(b.star().inv(a), b.dot().mul(a, x));
    out.emplace_back(std::move(im));
  }
  return out;
}

SkewBracoid brace_as_bracoid(const SkewBrace& b) {
  std::vector<Permutation> action;
  for (Elem a = 0; a < b.order(); ++a) action.push_back(left_translation(b.dot(), a));
  return SkewBracoid(b.dot(), b.star(), std::move(action));
}

bool is_essentially_brace(const SkewBracoid& b) { return b.G().order() == b.N().order(); }

SkewBrace transport_to_brace(const SkewBracoid& b) {
  if (!is_essentially_brace(b)) throw InvalidArgument("transport needs a regular action (|G| = |N|)");
  const std::size_t n = b.N().order();
  std::vector<Elem> preimage(n);
  for (Elem x = 0; x < n; ++x) preimage[b.pi(x)] = x;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) t[a][c] = b.pi(b.G().mul(preimage[a], preimage[c]));
  return SkewBrace(b.N(), FiniteGroup::from_table(t));
}

BraceQuotient brace_quotient_bracoid(const SkewBrace& b, const ElementSet& a) {
  const FiniteGroup &star = b.star(), &dot = b.dot();
  if (!is_subgroup(star, a))
    throw StrongLeftIdealError(StrongLeftIdealFailure::NotSubgroup, "not a subgroup of (B, star)");
  std::vector<bool> in(b.order(), false);
  for (Elem x : a) in[x] = true;
  const auto gamma = brace_gamma(b);
  for (Elem g = 0; g < b.order(); ++g)
    for (Elem x : a)
      if (!in[gamma[g](x)])
        throw StrongLeftIdealError(StrongLeftIdealFailure::NotGammaStable, "not stable under the gamma-function");
  if (!is_normal(star, a)) throw StrongLeftIdealError(StrongLeftIdealFailure::NotNormal, "not normal in (B, star)");

  Quotient q = quotient_group(star, a);
  // The star cosets must coincide with the dot cosets.
  for (Elem x = 0; x < b.order(); ++x)
    for (Elem y : a)
      if (q.projection(dot.mul(x, y)) != q.projection(x)) throw Error("star and dot cosets differ");

  std::vector<Permutation> action;
  for (Elem x = 0; x < b.order(); ++x) {
    std::vector<Point> im(q.reps.size());
    for (std::size_t i = 0; i < q.reps.size(); ++i) im[i] = q.projection(dot.mul(x, q.reps[i]));
    action.emplace_back(std::move(im));
  }
  SkewBracoid out(dot, q.group, std::move(action));
  return {std::move(out), std::move(q)};
}

// ------------------------------------------------------------- reduced forms

ElementSet kernel_lambda(const SkewBracoid& b) {
  ElementSet k;
  for (Elem x = 0; x < b.G().order(); ++x)
    if (b.action()[x].is_identity()) k.push_back(x);
  return k;
}

bool is_reduced(const SkewBracoid& b) { return kernel_lambda(b).size() == 1; }

ReducedForm reduced_form(const SkewBracoid& b) {
  Quotient q = quotient_group(b.G(), kernel_lambda(b));
  std::vector<Permutation> action;
  for (Elem r : q.reps) action.push_back(b.action()[r]);
  return {SkewBracoid(q.group, b.N(), std::move(action)), std::move(q.projection)};
}

bool is_equivalent(const SkewBracoid& a, const SkewBracoid& b) {
  return a.N() == b.N() && lambda_image(a) == lambda_image(b);
}

SkewBracoid dihedral_on_cyclic(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0 || n % d != 0) throw InvalidArgument("need d | n with n, d >= 1");
  FiniteGroup g = make_dihedral(n);
  FiniteGroup c = make_cyclic(d);
  std::vector<Permutation> action;
  for (Elem x = 0; x < g.order(); ++x) {
    const std::size_t i = x / 2, j = x % 2;
    std::vector<Point> im(d);
    for (std::size_t k = 0; k < d; ++k) im[k] = static_cast<Point>((i + (j ? d - k : k)) % d);
    action.emplace_back(std::move(im));
  }
  return SkewBracoid(g, c, std::move(action));
}

}  // namespace bracoid

#include "bracoid/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "bracoid/bounds.hpp"
#include "bracoid/errors.hpp"

namespace bracoid {

namespace {

void require_subgroup(const FiniteGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw InvalidArgument("element set is not a subgroup");
}

std::vector<bool> membership(std::size_t n, const ElementSet& h) {
  std::vector<bool> in(n, false);
  for (Elem x : h) in[x] = true;
  return in;
}

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup() : d_(std::make_shared<const Data>()) {}

FiniteGroup FiniteGroup::build(std::size_t n, std::vector<Elem> flat, std::string label) {
  auto d = std::make_shared<Data>();
  d->n = n;
  d->table = std::move(flat);
  d->inverse.assign(n, 0);
  d->orders.assign(n, 1);
  d->label = std::move(label);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d->table[a * n + b] == 0) {
        d->inverse[a] = static_cast<Elem>(b);
        break;
      }
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Elem x = static_cast<Elem>(a); x != 0; x = d->table[x * n + a]) ++k;
    d->orders[a] = a == 0 ? 1 : k;
  }
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidArgument("group table is empty");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InvalidArgument("group table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw InvalidArgument("group table entry out of range");
      flat[a * n + b] = table[a][b];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[flat[a * n + b]] || col[flat[b * n + a]]) throw InvalidArgument("group table is not a Latin square");
      row[flat[a * n + b]] = col[flat[b * n + a]] = true;
    }
    if (flat[a] != a || flat[a * n] != a) throw InvalidArgument("element 0 is not the identity");
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return flat[flat[a * n + b] * n + c] == flat[a * n + flat[b * n + c]];
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InvalidArgument("group table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 200000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw InvalidArgument("group table is not associative");
  }
  return build(n, std::move(flat), std::move(label));
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  const long long m = static_cast<long long>(element_order(a));
  k %= m;
  if (k < 0) k += m;
  Elem x = 0;
  for (long long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (d_->table[a * n + b] != d_->table[b * n + a]) return false;
  return true;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  const std::size_t n = order();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = d_->table[a * n + b];
  return t;
}

FiniteGroup FiniteGroup::relabeled(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::opposite() const {
  const std::size_t n = order();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = d_->table[b * n + a];
  return build(n, std::move(flat), is_abelian() ? label() : std::string{});
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->table == b.d_->table);
}

// ------------------------------------------------------------------- GroupHom

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> images)
    : dom_(std::move(domain)), cod_(std::move(codomain)), images_(std::move(images)) {
  const std::size_t n = dom_.order();
  if (images_.size() != n) throw InvalidArgument("hom image array has the wrong length");
  for (Elem y : images_)
    if (y >= cod_.order()) throw InvalidArgument("hom image out of range");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (images_[dom_.mul(a, b)] != cod_.mul(images_[a], images_[b]))
        throw InvalidArgument("map is not a homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

GroupHom GroupHom::trusted(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> images) {
  GroupHom h;
  h.dom_ = std::move(domain);
  h.cod_ = std::move(codomain);
  h.images_ = std::move(images);
  return h;
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<Elem> im(g.order());
  std::iota(im.begin(), im.end(), Elem{0});
  return trusted(g, g, std::move(im));
}

ElementSet GroupHom::kernel() const {
  ElementSet k;
  for (Elem a = 0; a < images_.size(); ++a)
    if (images_[a] == 0) k.push_back(a);
  return k;
}

ElementSet GroupHom::image() const {
  ElementSet im(images_.begin(), images_.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

bool GroupHom::is_injective() const { return kernel().size() == 1; }
bool GroupHom::is_surjective() const { return image().size() == cod_.order(); }

GroupHom GroupHom::after(const GroupHom& first) const {
  if (!(first.codomain() == dom_)) throw InvalidArgument("composing homs with mismatched groups");
  std::vector<Elem> im(first.domain().order());
  for (std::size_t a = 0; a < im.size(); ++a) im[a] = images_[first(static_cast<Elem>(a))];
  return trusted(first.domain(), cod_, std::move(im));
}

GroupHom GroupHom::inverse() const {
  if (dom_.order() != cod_.order() || !is_injective()) throw InvalidArgument("hom is not bijective");
  std::vector<Elem> im(cod_.order());
  for (Elem a = 0; a < images_.size(); ++a) im[images_[a]] = a;
  return trusted(cod_, dom_, std::move(im));
}

// ------------------------------------------------------------------- families

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup::from_table(t, "C" + std::to_string(n));
}

FiniteGroup make_dihedral(std::size_t n) {
  if (n == 0) throw InvalidArgument("dihedral group parameter must be positive");
  const std::size_t m = 2 * n;
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t i = x / 2, j = x % 2, k = y / 2, l = y % 2;
      // r^i s^j r^k s^l = r^(i ± k) s^(j+l)
      const std::size_t e = j ? (i + n - k) % n : (i + k) % n;
      t[x][y] = static_cast<Elem>(2 * e + ((j + l) % 2));
    }
  return FiniteGroup::from_table(t, "D" + std::to_string(n));
}

FiniteGroup make_symmetric(std::size_t n) {
  if (n == 0) throw InvalidArgument("symmetric group degree must be positive");
  require_within("symmetric group degree", n, 6);
  std::vector<Point> base(n);
  std::iota(base.begin(), base.end(), Point{0});
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return PermGroup::from_group_elements(n, std::move(elems)).as_finite_group().relabeled("S" + std::to_string(n));
}

FiniteGroup make_quaternion() {
  // 2u + s encodes (-1)^s · unit[u], units 1, i, j, k.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2 + y % 2 + sign_mul[u][v]) % 2;
      t[x][y] = static_cast<Elem>(2 * unit_mul[u][v] + s);
    }
  return FiniteGroup::from_table(t, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = static_cast<Elem>(a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb)) * nb +
                                  b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb)));
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "x" + b.label();
  return FiniteGroup::from_table(t, label);
}

// ------------------------------------------------------------------ subgroups

bool is_subgroup(const FiniteGroup& g, const ElementSet& h) {
  if (h.empty() || h.front() != 0) return false;
  if (!std::is_sorted(h.begin(), h.end()) || std::adjacent_find(h.begin(), h.end()) != h.end()) return false;
  if (h.back() >= g.order()) return false;
  auto in = membership(g.order(), h);
  for (Elem a : h)
    for (Elem b : h)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<bool> in(g.order(), false);
  ElementSet out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      if (s >= g.order()) throw InvalidArgument("generator out of range");
      Elem y = g.mul(s, out[i]);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet whole_group(const FiniteGroup& g) {
  ElementSet all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return all;
}

bool is_normal(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  auto in = membership(g.order(), h);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem a : h)
      if (!in[g.mul(g.mul(x, a), g.inv(x))]) return false;
  return true;
}

ElementSet conjugate_subgroup(const FiniteGroup& g, const ElementSet& h, Elem x) {
  ElementSet out;
  out.reserve(h.size());
  for (Elem a : h) out.push_back(g.mul(g.mul(x, a), g.inv(x)));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet normal_core(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  auto in = membership(g.order(), h);
  ElementSet core;
  for (Elem a : h) {
    bool keep = true;
    for (Elem x = 0; x < g.order() && keep; ++x) keep = in[g.mul(g.mul(g.inv(x), a), x)];
    if (keep) core.push_back(a);
  }
  return core;
}

ElementSet normalizer(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  ElementSet out;
  for (Elem x = 0; x < g.order(); ++x)
    if (conjugate_subgroup(g, h, x) == h) out.push_back(x);
  return out;
}

std::vector<ElementSet> left_cosets(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  std::vector<bool> done(g.order(), false);
  std::vector<ElementSet> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    ElementSet c;
    for (Elem a : h) c.push_back(g.mul(x, a));
    std::sort(c.begin(), c.end());
    for (Elem y : c) done[y] = true;
    out.push_back(std::move(c));
  }
  return out;
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Quotient quotient_group(const FiniteGroup& g, const ElementSet& k) {
  if (!is_normal(g, k)) throw InvalidArgument("quotient by a non-normal subgroup");
  auto cosets = left_cosets(g, k);
  const std::size_t m = cosets.size();
  std::vector<Elem> which(g.order()), reps(m);
  for (std::size_t i = 0; i < m; ++i) {
    reps[i] = cosets[i].front();
    for (Elem x : cosets[i]) which[x] = static_cast<Elem>(i);
  }
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i][j] = which[g.mul(reps[i], reps[j])];
  FiniteGroup q = FiniteGroup::from_table(t);
  return Quotient{q, GroupHom::trusted(g, q, which), reps};
}

Embedded subgroup_as_group(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  const std::size_t m = h.size();
  std::vector<Elem> pos(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[h[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i][j] = pos[g.mul(h[i], h[j])];
  FiniteGroup s = FiniteGroup::from_table(t);
  return Embedded{s, GroupHom::trusted(s, g, h)};
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  ElementSet current{0};
  while (current.size() < g.order()) {
    auto in = membership(g.order(), current);
    Elem best = 0;
    std::size_t best_order = 0;
    for (Elem x = 1; x < g.order(); ++x)
      if (!in[x] && g.element_order(x) > best_order) {
        best = x;
        best_order = g.element_order(x);
      }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

// ------------------------------------------------------------- homomorphisms

void for_each_hom(const FiniteGroup& a, const FiniteGroup& b, bool injective_orders,
                  const std::function<bool(const GroupHom&)>& visit) {
  const std::vector<Elem> gens = generating_set(a);
  const std::size_t k = gens.size();
  std::vector<std::vector<Elem>> cands(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Elem y = 0; y < b.order(); ++y) {
      const std::size_t og = a.element_order(gens[i]), oy = b.element_order(y);
      if (injective_orders ? oy == og : og % oy == 0) cands[i].push_back(y);
    }

  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> chosen(k), img(a.order()), queue;
  queue.reserve(a.order());

  // Extends the assignment of the first t generators along the Cayley graph
  // of the subgroup they generate; false on any inconsistency.
  auto consistent = [&](std::size_t t) {
    std::fill(img.begin(), img.end(), unset);
    img[0] = 0;
    queue.assign(1, 0);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem x = queue[q];
      for (std::size_t i = 0; i < t; ++i) {
        const Elem y = a.mul(gens[i], x);
        const Elem v = b.mul(chosen[i], img[x]);
        if (img[y] == unset) {
          img[y] = v;
          queue.push_back(y);
        } else if (img[y] != v) {
          return false;
        }
      }
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> assign = [&](std::size_t t) {
    if (stop) return;
    if (t == k) {
      if (!consistent(k)) return;
      if (!visit(GroupHom::trusted(a, b, img))) stop = true;
      return;
    }
    for (Elem c : cands[t]) {
      chosen[t] = c;
      if (t + 1 < k && !consistent(t + 1)) continue;
      assign(t + 1);
      if (stop) return;
    }
  };
  assign(0);
}

std::vector<GroupHom> homomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<GroupHom> out;
  for_each_hom(a, b, false, [&](const GroupHom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::vector<GroupHom> surjections(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<GroupHom> out;
  if (a.order() % b.order() != 0) return out;
  for_each_hom(a, b, false, [&](const GroupHom& h) {
    if (h.is_surjective()) out.push_back(h);
    return true;
  });
  return out;
}

namespace {

std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> p(g.order());
  for (Elem x = 0; x < g.order(); ++x) p[x] = g.element_order(x);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::optional<GroupHom> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  std::optional<GroupHom> found;
  for_each_hom(a, b, true, [&](const GroupHom& h) {
    if (!h.is_injective()) return true;
    found = h;
    return false;
  });
  return found;
}

// ---------------------------------------------------- automorphisms, holomorph

std::vector<Permutation> automorphisms(const FiniteGroup& n) {
  require_within("automorphism search order", n.order(), bounds().automorphism_order);
  std::vector<Permutation> out;
  for_each_hom(n, n, true, [&](const GroupHom& h) {
    if (h.is_injective()) out.emplace_back(h.images());
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup automorphism_group(const FiniteGroup& n) {
  return PermGroup::from_group_elements(n.order(), automorphisms(n));
}

Permutation left_translation(const FiniteGroup& n, Elem mu) {
  std::vector<Point> im(n.order());
  for (Elem x = 0; x < n.order(); ++x) im[x] = n.mul(mu, x);
  return Permutation(std::move(im));
}

PermGroup left_regular_rep(const FiniteGroup& n) {
  std::vector<Permutation> elems;
  for (Elem mu = 0; mu < n.order(); ++mu) elems.push_back(left_translation(n, mu));
  return PermGroup::from_group_elements(n.order(), std::move(elems));
}

PermGroup holomorph(const FiniteGroup& n) {
  const auto autos = automorphisms(n);
  std::vector<Permutation> elems;
  elems.reserve(n.order() * autos.size());
  for (Elem mu = 0; mu < n.order(); ++mu) {
    const Permutation l = left_translation(n, mu);
    for (const auto& a : autos) elems.push_back(l * a);
  }
  return PermGroup::from_group_elements(n.order(), std::move(elems));
}

bool in_holomorph(const FiniteGroup& n, const Permutation& sigma) {
  if (sigma.degree() != n.order()) return false;
  const Elem shift = n.inv(sigma(0));
  std::vector<Elem> alpha(n.order());
  for (Elem x = 0; x < n.order(); ++x) alpha[x] = n.mul(shift, sigma(x));
  for (Elem x = 0; x < n.order(); ++x)
    for (Elem y = 0; y < n.order(); ++y)
      if (alpha[n.mul(x, y)] != n.mul(alpha[x], alpha[y])) return false;
  return true;
}

// ---------------------------------------------------------- subgroup lattice

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Node {
  Bits bits;
  std::vector<Elem> gens;
};

}  // namespace

std::vector<ElementSet> all_subgroups(const FiniteGroup& g, std::optional<std::size_t> limit) {
  require_within("subgroup search order", g.order(), limit.value_or(bounds().subgroup_search));
  const std::size_t n = g.order(), words = (n + 63) / 64;
  auto test = [](const Bits& b, Elem x) { return (b[x >> 6] >> (x & 63)) & 1u; };

  std::vector<Elem> elems;
  elems.reserve(n);
  Bits seen_bits(words);
  auto close = [&](const std::vector<Elem>& gens) {
    std::fill(seen_bits.begin(), seen_bits.end(), 0);
    elems.assign(1, 0);
    seen_bits[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (Elem s : gens) {
        const Elem y = g.mul(s, elems[i]);
        if (!test(seen_bits, y)) {
          seen_bits[y >> 6] |= std::uint64_t{1} << (y & 63);
          elems.push_back(y);
        }
      }
    return seen_bits;
  };

  // One generator per cyclic subgroup.
  std::vector<Elem> cyclic_gens;
  {
    std::unordered_set<Bits, BitsHash> cyc;
    for (Elem x = 1; x < n; ++x)
      if (cyc.insert(close({x})).second) cyclic_gens.push_back(x);
  }

  // Joins are only formed from one representative per conjugacy class; the
  // whole class of every new subgroup is recorded at once.
  std::vector<Node> reps;
  std::unordered_set<Bits, BitsHash> seen;
  auto add_class = [&](const Bits& k, const std::vector<Elem>& members, std::vector<Elem> gens) {
    for (Elem x = 0; x < n; ++x) {
      Bits c(words);
      const Elem xi = g.inv(x);
      for (Elem a : members) {
        const Elem y = g.mul(g.mul(x, a), xi);
        c[y >> 6] |= std::uint64_t{1} << (y & 63);
      }
      seen.insert(std::move(c));
    }
    reps.push_back({k, std::move(gens)});
  };
  {
    Bits t = close({});
    add_class(t, elems, {});
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem c : cyclic_gens) {
      if (test(reps[i].bits, c)) continue;
      std::vector<Elem> gens = reps[i].gens;
      gens.push_back(c);
      Bits b = close(gens);
      if (!seen.count(b)) add_class(b, elems, std::move(gens));
    }
  }

  std::vector<ElementSet> out;
  out.reserve(seen.size());
  for (const auto& bits : seen) {
    ElementSet s;
    for (Elem x = 0; x < n; ++x)
      if (test(bits, x)) s.push_back(x);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<PermGroup> subgroups(const PermGroup& p, std::optional<std::size_t> limit) {
  require_within("subgroup search order", p.order(), limit.value_or(bounds().subgroup_search));
  const FiniteGroup fg = p.as_finite_group();
  std::vector<PermGroup> out;
  for (const auto& s : all_subgroups(fg, p.order())) out.push_back(p.sub(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PermGroup> transitive_subgroups(const PermGroup& p, std::optional<std::size_t> limit) {
  std::vector<PermGroup> out;
  for (auto& s : subgroups(p, limit))
    if (s.is_transitive()) out.push_back(std::move(s));
  return out;
}

std::vector<PermGroup> holomorph_transitive_subgroups(const FiniteGroup& n) {
  require_within("holomorph enumeration order", n.order(), bounds().enumerate_order);
  const PermGroup hol = holomorph(n);
  return transitive_subgroups(hol, hol.order());
}

}  // namespace bracoid

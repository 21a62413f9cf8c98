#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share only FiniteGroup/Permutation storage with the code under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "bracoid/group.hpp"
#include "bracoid/perm.hpp"

namespace oracle {

using bracoid::Elem;
using bracoid::FiniteGroup;
using bracoid::Permutation;
using bracoid::Point;

inline bool multiplicative(const FiniteGroup& g, const std::vector<Elem>& f) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != g.mul(f[a], f[b])) return false;
  return true;
}

/// Aut(G) by scanning every bijection that fixes the identity.
inline std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g) {
  std::vector<Elem> f(g.order());
  std::iota(f.begin(), f.end(), 0);
  std::vector<std::vector<Elem>> out;
  do {
    if (multiplicative(g, f)) out.push_back(f);
  } while (g.order() > 1 && std::next_permutation(f.begin() + 1, f.end()));
  return out;
}

/// Every subset containing the identity that is closed under multiplication.
inline std::vector<std::vector<Elem>> subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Elem>> out;
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    std::vector<bool> in(n, false);
    in[0] = true;
    for (std::size_t i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a)
      for (Elem b = 0; b < n && closed; ++b)
        if (in[a] && in[b] && !in[g.mul(a, b)]) closed = false;
    if (!closed) continue;
    std::vector<Elem> s;
    for (Elem a = 0; a < n; ++a)
      if (in[a]) s.push_back(a);
    out.push_back(std::move(s));
  }
  return out;
}

/// All permutations of {0..m-1} (m ≤ 8).
inline std::vector<Permutation> symmetric(std::size_t m) {
  std::vector<Point> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Elements of λ(N)·Aut(N), from the brute-force automorphism list.
inline std::set<Permutation> holomorph(const FiniteGroup& n) {
  std::set<Permutation> out;
  for (const auto& a : oracle::automorphisms(n))
    for (Elem mu = 0; mu < n.order(); ++mu) {
      std::vector<Point> im(n.order());
      for (Elem x = 0; x < n.order(); ++x) im[x] = n.mul(mu, a[x]);
      out.emplace(im);
    }
  return out;
}

inline std::set<Permutation> close(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> s{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = g * x;
        if (s.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return s;
}

/// Regular subgroups of a permutation group, found by choosing, point by
/// point, the unique element that carries 0 there.
inline std::set<std::set<Permutation>> regular_subgroups(const std::set<Permutation>& group, std::size_t degree) {
  std::vector<std::vector<Permutation>> to(degree);
  for (const auto& p : group)
    if (p.fixed_points() == 0) to[p(0)].push_back(p);
  std::set<std::set<Permutation>> out;
  std::vector<Permutation> gens;
  auto rec = [&](auto&& self, const std::set<Permutation>& current) -> void {
    if (current.size() > degree) return;
    for (const auto& x : current)
      if (!x.is_identity() && x.fixed_points() != 0) return;
    std::vector<bool> hit(degree, false);
    for (const auto& x : current) {
      if (hit[x(0)]) return;
      hit[x(0)] = true;
    }
    Point p = 0;
    while (p < degree && hit[p]) ++p;
    if (p == degree) {
      out.insert(current);
      return;
    }
    for (const auto& c : to[p]) {
      gens.push_back(c);
      self(self, close(gens, degree));
      gens.pop_back();
    }
  };
  rec(rec, {Permutation::identity(degree)});
  return out;
}

inline std::set<Permutation> centralizer(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> out;
  for (const auto& s : symmetric(degree))
    if (std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return g * s == s * g; })) out.insert(s);
  return out;
}

/// Counts Cayley tables on {0..m-1} with identity 0, grouped by the
/// invariant (abelian, sorted element orders). Backtracking over cells with
/// Latin and partial associativity pruning.
struct TableCensus {
  std::map<std::pair<bool, std::vector<std::size_t>>, std::size_t> tables_per_invariant;
  std::map<std::pair<bool, std::vector<std::size_t>>, FiniteGroup> example;
};

inline TableCensus cayley_census(std::size_t m) {
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> t(m * m, unset);
  for (Elem a = 0; a < m; ++a) t[a] = t[a * m] = a;
  std::vector<std::vector<bool>> row_used(m, std::vector<bool>(m, false)), col_used = row_used;
  for (Elem a = 0; a < m; ++a) {
    row_used[a][a] = col_used[a][a] = true;
    row_used[0][a] = col_used[0][a] = true;
  }
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem a = 1; a < m; ++a)
    for (Elem b = 1; b < m; ++b) cells.push_back({a, b});

  auto assoc_ok = [&]() {
    for (Elem x = 0; x < m; ++x)
      for (Elem y = 0; y < m; ++y) {
        const Elem xy = t[x * m + y];
        if (xy == unset) continue;
        for (Elem z = 0; z < m; ++z) {
          const Elem yz = t[y * m + z];
          if (yz == unset) continue;
          const Elem l = t[xy * m + z], r = t[x * m + yz];
          if (l != unset && r != unset && l != r) return false;
        }
      }
    return true;
  };

  TableCensus census;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      FiniteGroup g = FiniteGroup::from_table([&] {
        std::vector<std::vector<Elem>> rows(m);
        for (Elem a = 0; a < m; ++a) rows[a].assign(t.begin() + a * m, t.begin() + (a + 1) * m);
        return rows;
      }());
      std::vector<std::size_t> orders;
      bool abelian = true;
      for (Elem a = 0; a < m; ++a) {
        std::size_t k = 1;
        for (Elem p = a; p != 0; p = t[p * m + a]) ++k;
        orders.push_back(k);
        for (Elem b = 0; b < m; ++b) abelian = abelian && t[a * m + b] == t[b * m + a];
      }
      std::sort(orders.begin(), orders.end());
      auto key = std::make_pair(abelian, orders);
      if (census.tables_per_invariant[key]++ == 0) census.example.emplace(key, g);
      return;
    }
    auto [a, b] = cells[k];
    for (Elem c = 0; c < m; ++c) {
      if (row_used[a][c] || col_used[b][c]) continue;
      t[a * m + b] = c;
      row_used[a][c] = col_used[b][c] = true;
      if (assoc_ok()) self(self, k + 1);
      row_used[a][c] = col_used[b][c] = false;
      t[a * m + b] = unset;
    }
  };
  rec(rec, 0);
  return census;
}

}  // namespace oracle

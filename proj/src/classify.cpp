#include "bracoid/classify.hpp"

#include <map>

#include "bracoid/morphism.hpp"

namespace bracoid {

std::vector<std::size_t> conjugacy_class_ids(const FiniteGroup& n, const std::vector<PermGroup>& subgroups) {
  const auto gens = automorphism_group(n).generators();
  std::map<PermGroup, std::size_t> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i) index.emplace(subgroups[i], i);
  const std::size_t unset = subgroups.size();
  std::vector<std::size_t> ids(subgroups.size(), unset);
  std::size_t next = 0;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (ids[i] != unset) continue;
    ids[i] = next;
    std::vector<std::size_t> queue{i};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& theta : gens) {
        auto it = index.find(subgroups[queue[q]].conjugate(theta));
        if (it == index.end()) throw Error("conjugate of a transitive subgroup of Hol(N) is missing");
        if (ids[it->second] == unset) {
          ids[it->second] = next;
          queue.push_back(it->second);
        }
      }
    ++next;
  }
  return ids;
}

std::vector<ClassificationRecord> classify(const std::string& n_spec, const std::optional<std::string>& g_spec) {
  const FiniteGroup n = parse_group_spec(n_spec);
  const auto subs = holomorph_transitive_subgroups(n);
  const auto iso_ids = conjugacy_class_ids(n, subs);

  std::vector<std::optional<SkewBracoid>> natural(subs.size());
  std::map<std::size_t, std::size_t> first_of_class;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    natural[i] = from_hol_subgroup(n, subs[i]);
    auto [it, fresh] = first_of_class.emplace(iso_ids[i], i);
    if (!fresh && !find_isomorphism(*natural[it->second], *natural[i]))
      throw Error("Aut(N)-conjugate subgroups gave non-isomorphic bracoids");
  }

  std::optional<FiniteGroup> g;
  if (g_spec) g = parse_group_spec(*g_spec);

  std::vector<ClassificationRecord> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!g) {
      out.push_back({n_spec, perm_group_to_json(subs[i]), i, iso_ids[i], subs[i].order(), true, subs[i], *natural[i]});
      continue;
    }
    if (g->order() % subs[i].order() != 0) continue;
    const FiniteGroup a = subs[i].as_finite_group();
    std::optional<GroupHom> delta;
    for_each_hom(*g, a, false, [&](const GroupHom& h) {
      if (!h.is_surjective()) return true;
      delta = h;
      return false;
    });
    if (!delta) continue;
    SkewBracoid b = from_hol_subgroup(n, subs[i], delta);
    const bool reduced = is_reduced(b);
    out.push_back({n_spec, *g_spec, i, iso_ids[i], subs[i].order(), reduced, subs[i], std::move(b)});
  }
  return out;
}

Json record_to_json(const ClassificationRecord& r) {
  Json b = bracoid_to_json(r.bracoid);
  if (r.G_spec.is_object()) b["G"] = r.G_spec;
  return Json{{"N_spec", r.N_spec},
              {"G_spec", r.G_spec},
              {"equivalence_class_id", r.equivalence_class_id},
              {"isomorphism_class_id", r.isomorphism_class_id},
              {"lambda_image_order", r.lambda_image_order},
              {"reduced", r.reduced},
              {"bracoid", b}};
}

}  // namespace bracoid

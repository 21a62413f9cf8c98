#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracoid/bracoid.hpp"
#include "bracoid/io.hpp"

namespace bracoid {

struct ClassificationRecord {
  std::string N_spec;
  Json G_spec;                       // the given spec, or A as perm_gens
  std::size_t equivalence_class_id = 0;
  std::size_t isomorphism_class_id = 0;
  std::size_t lambda_image_order = 0;
  bool reduced = false;
  PermGroup lambda_image = PermGroup::trivial(1);
  SkewBracoid bracoid;
};

/// Equivalence classes of bracoids with the given N: one per transitive
/// subgroup A ≤ Hol(N), in sorted order. Isomorphism ids are shared by
/// Aut(N)-conjugate subgroups and numbered by first appearance. With a G
/// spec, only classes admitting a surjection G ↠ A are kept, realized through
/// the first such surjection.
std::vector<ClassificationRecord> classify(const std::string& n_spec, const std::optional<std::string>& g_spec = {});

Json record_to_json(const ClassificationRecord& r);

/// Isomorphism ids for a list of transitive subgroups of Hol(N): orbits under
/// conjugation by Aut(N), numbered by first appearance.
std::vector<std::size_t> conjugacy_class_ids(const FiniteGroup& n, const std::vector<PermGroup>& subgroups);

}  // namespace bracoid

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bracoid/bracoid.hpp"
#include "bracoid/hopf_galois.hpp"
#include "bracoid/morphism.hpp"
#include "bracoid/substructure.hpp"

namespace bracoid {

using Json = nlohmann::json;

/// "C<n>", "D<n>", "S<n>", "Q8" and left-associated products "AxBx...".
/// Throws ParseError.
FiniteGroup parse_group_spec(std::string_view spec);
/// A spec string, {"cayley": [[...]]} or {"perm_gens": [...], "degree": k}.
FiniteGroup group_from_json(const Json& j);
/// The label when the group has one, otherwise {"cayley": table}.
Json group_to_json(const FiniteGroup& g);
Json perm_group_to_json(const PermGroup& p);

/// {"G", "N", "action"}; from_json throws ParseError on shape problems and
/// AxiomViolation on invalid data.
Json bracoid_to_json(const SkewBracoid& b);
SkewBracoid bracoid_from_json(const Json& j);
/// Parses without verifying the axioms.
struct RawBracoid {
  FiniteGroup G, N;
  std::vector<Permutation> action;
};
RawBracoid raw_bracoid_from_json(const Json& j);

Json ideal_report_to_json(const IdealReport& r);
Json hom_to_json(const BracoidHom& h);
Json correspondence_to_json(const CorrespondenceEntry& e);

/// Reads and parses a JSON file. Throws ParseError.
Json read_json_file(const std::string& path);

}  // namespace bracoid

#include "bracoid/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bracoid {

namespace {

FiniteGroup parse_factor(std::string_view s) {
  if (s == "Q8") return make_quaternion();
  if (s.size() < 2) throw ParseError("bad group spec '" + std::string(s) + "'");
  std::size_t n = 0;
  const char* first = s.data() + 1;
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || p != last || n == 0) throw ParseError("bad group spec '" + std::string(s) + "'");
  switch (s[0]) {
    case 'C': return make_cyclic(n);
    case 'D': return make_dihedral(n);
    case 'S':
      if (n > 6) throw ParseError("S<n> is limited to n <= 6");
      return make_symmetric(n);
  }
  throw ParseError("bad group spec '" + std::string(s) + "'");
}

std::vector<std::vector<Elem>> table_from_json(const Json& t) {
  if (!t.is_array() || t.empty()) throw ParseError("cayley table must be a non-empty array");
  std::vector<std::vector<Elem>> rows;
  for (const auto& r : t) {
    if (!r.is_array()) throw ParseError("cayley row must be an array");
    std::vector<Elem> row;
    for (const auto& v : r) {
      if (!v.is_number_unsigned()) throw ParseError("cayley entries must be non-negative integers");
      row.push_back(v.get<Elem>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  if (spec.empty()) throw ParseError("empty group spec");
  FiniteGroup g;
  bool first = true;
  while (true) {
    const auto cut = spec.find('x');
    const auto part = spec.substr(0, cut);
    FiniteGroup f = parse_factor(part);
    g = first ? f : direct_product(g, f);
    first = false;
    if (cut == std::string_view::npos) break;
    spec.remove_prefix(cut + 1);
  }
  return g;
}

FiniteGroup group_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_group_spec(j.get<std::string>());
    if (j.is_object() && j.contains("cayley")) {
      try {
        return FiniteGroup::from_table(table_from_json(j.at("cayley")));
      } catch (const InvalidArgument& e) {
        throw ParseError(std::string("invalid cayley table: ") + e.what());
      }
    }
    if (j.is_object() && j.contains("perm_gens")) {
      const std::size_t degree = j.at("degree").get<std::size_t>();
      std::vector<Permutation> gens;
      for (const auto& c : j.at("perm_gens")) gens.push_back(Permutation::parse_cycles(c.get<std::string>(), degree));
      return PermGroup::closure(degree, gens).as_finite_group();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad group json: ") + e.what());
  }
  throw ParseError("group must be a spec string, {\"cayley\"} or {\"perm_gens\", \"degree\"}");
}

Json group_to_json(const FiniteGroup& g) {
  if (!g.label().empty()) return g.label();
  return Json{{"cayley", g.table()}};
}

Json perm_group_to_json(const PermGroup& p) {
  Json gens = Json::array();
  for (const auto& s : p.generators()) gens.push_back(s.cycles());
  return Json{{"perm_gens", gens}, {"degree", p.degree()}};
}

Json bracoid_to_json(const SkewBracoid& b) {
  Json action = Json::array();
  for (const auto& s : b.action()) action.push_back(s.images());
  return Json{{"G", group_to_json(b.G())}, {"N", group_to_json(b.N())}, {"action", action}};
}

RawBracoid raw_bracoid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("G") || !j.contains("N") || !j.contains("action"))
    throw ParseError("bracoid json needs \"G\", \"N\" and \"action\"");
  RawBracoid r{group_from_json(j.at("G")), group_from_json(j.at("N")), {}};
  const Json& a = j.at("action");
  if (!a.is_array()) throw ParseError("action must be an array of rows");
  for (const auto& row : a) {
    if (!row.is_array()) throw ParseError("action row must be an array");
    std::vector<Point> im;
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) throw ParseError("action entries must be non-negative integers");
      im.push_back(v.get<Point>());
    }
    // Non-bijective rows are reported as a shape violation.
    std::vector<bool> hit(im.size(), false);
    bool bij = true;
    for (Point p : im) {
      if (p >= im.size() || hit[p]) bij = false;
      else hit[p] = true;
    }
    if (!bij) {
      const Elem g = static_cast<Elem>(r.action.size());
      throw AxiomViolation(Axiom::ShapeMismatch, g, 0, 0, "action row " + std::to_string(g) + " is not a bijection");
    }
    r.action.emplace_back(std::move(im));
  }
  return r;
}

SkewBracoid bracoid_from_json(const Json& j) {
  RawBracoid r = raw_bracoid_from_json(j);
  return verify_bracoid(r.G, r.N, r.action);
}

Json ideal_report_to_json(const IdealReport& r) {
  return Json{{"subset", r.subset},
              {"left_ideal", r.left_ideal},
              {"ideal", r.ideal},
              {"enhanced_left_ideal", r.enhanced_left_ideal},
              {"enhanced_ideal", r.enhanced_ideal},
              {"G_M", r.g_m}};
}

Json hom_to_json(const BracoidHom& h) { return Json{{"phi", h.phi().images()}, {"phi_n", h.phi_n().images()}}; }

Json correspondence_to_json(const CorrespondenceEntry& e) {
  return Json{{"Y", e.Y},
              {"G_Y", e.G_Y},
              {"realizable_field", e.realizable_field},
              {"has_quotient_structure", e.has_quotient_structure},
              {"field_is_galois_over_K", e.field_is_galois_over_K}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace bracoid

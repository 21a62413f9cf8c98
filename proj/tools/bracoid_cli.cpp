#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bracoid/bounds.hpp"
#include "bracoid/classify.hpp"
#include "bracoid/hopf_galois.hpp"
#include "bracoid/io.hpp"
#include "bracoid/morphism.hpp"
#include "bracoid/substructure.hpp"

using namespace bracoid;

namespace {

struct Output {
  bool pretty = false;
  std::string path;
  std::vector<Json> records;
  std::optional<std::string> text;

  void emit() const {
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw ParseError("cannot write " + path);
    }
    std::ostream& os = path.empty() ? std::cout : file;
    if (text) {
      os << *text << '\n';
    } else if (pretty) {
      os << Json(records).dump(2) << '\n';
    } else {
      for (const auto& r : records) os << r.dump() << '\n';
    }
  }
};

Json violation_to_json(const AxiomViolation& v) {
  return Json{{"axiom", to_string(v.kind())}, {"g", v.g()}, {"eta", v.eta()}, {"mu", v.mu()}, {"detail", v.what()}};
}

int cmd_verify(const std::string& file, Output& out) {
  const Json j = read_json_file(file);
  std::optional<AxiomViolation> v;
  try {
    RawBracoid r = raw_bracoid_from_json(j);
    v = check_bracoid(r.G, r.N, r.action);
  } catch (const AxiomViolation& e) {
    v = e;
  }
  if (!v) {
    out.text = "valid";
    return 0;
  }
  out.records.push_back(violation_to_json(*v));
  return 1;
}

void cmd_enumerate(const std::string& n_spec, const std::string& g_spec, Output& out) {
  std::optional<std::string> g;
  if (!g_spec.empty()) g = g_spec;
  for (const auto& r : classify(n_spec, g)) out.records.push_back(record_to_json(r));
}

void cmd_hgs(const std::string& g_spec, const std::vector<Elem>& sub_gens, Output& out) {
  const FiniteGroup g = parse_group_spec(g_spec);
  for (Elem x : sub_gens)
    if (x >= g.order()) throw InvalidArgument("subgroup generator " + std::to_string(x) + " is not an element of G");
  const CosetSpace space = coset_space(g, generated_subgroup(g, sub_gens));
  const auto hs = enumerate_hgs(space);
  const HgsPartition part = hgs_isomorphism_classes(space, hs);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    Json rho = Json::array();
    for (const auto& s : hs[i].rho.generators()) rho.push_back(s.cycles());
    Json corr = Json::array();
    for (const auto& e : hg_correspondence(hs[i])) corr.push_back(correspondence_to_json(e));
    out.records.push_back(Json{{"G", g_spec},
                               {"G_prime", space.G_prime},
                               {"star_table", hs[i].star.table()},
                               {"rho_gens", rho},
                               {"iso_class", part.class_of[i]},
                               {"correspondence", corr}});
  }
}

void cmd_reduce(const std::string& file, Output& out) {
  const SkewBracoid b = bracoid_from_json(read_json_file(file));
  const ReducedForm r = reduced_form(b);
  out.records.push_back(Json{{"kernel", kernel_lambda(b)},
                             {"reduced_order", r.bracoid.G().order()},
                             {"projection", r.projection.images()},
                             {"bracoid", bracoid_to_json(r.bracoid)}});
}

void cmd_iso(const std::string& a_file, const std::string& b_file, Output& out) {
  const SkewBracoid a = bracoid_from_json(read_json_file(a_file));
  const SkewBracoid b = bracoid_from_json(read_json_file(b_file));
  const SkewBracoid ra = reduced_form(a).bracoid, rb = reduced_form(b).bracoid;
  auto w = find_isomorphism(ra, rb);
  Json full = nullptr;
  if (a.G().order() <= bounds().exhaustive_iso) full = find_isomorphism_exhaustive(a, b).has_value();
  out.records.push_back(
      Json{{"reduced_forms_isomorphic", w.has_value()}, {"witness", w ? hom_to_json(*w) : Json(nullptr)}, {"isomorphic", full}});
}

void cmd_ideals(const std::string& file, Output& out) {
  const SkewBracoid b = bracoid_from_json(read_json_file(file));
  for (const auto& r : enumerate_ideals(b)) out.records.push_back(ideal_report_to_json(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite skew bracoids: verification, classification and Hopf-Galois structures"};
  app.require_subcommand(1);
  Output out;
  std::size_t max_order = 0;
  app.add_flag("--pretty", out.pretty, "Indented JSON array instead of JSON lines");
  app.add_option("--max-order", max_order, "Raise every search bound to this order");
  app.add_option("--out", out.path, "Write output to a file");

  std::string file, file2, n_spec, g_spec;
  std::vector<Elem> sub_gens;
  auto* verify = app.add_subcommand("verify", "Check the bracoid axioms");
  verify->add_option("file", file, "Bracoid JSON")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Classify bracoids with a given N");
  enumerate->add_option("N", n_spec, "Group spec for N")->required();
  enumerate->add_option("G", g_spec, "Group spec for G");
  auto* hgs = app.add_subcommand("hgs", "Hopf-Galois structures on G/G'");
  hgs->add_option("G", g_spec, "Group spec for G")->required();
  hgs->add_option("--subgroup", sub_gens, "Element indices generating G'");
  auto* reduce = app.add_subcommand("reduce", "Reduced form");
  reduce->add_option("file", file, "Bracoid JSON")->required();
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", file, "Bracoid JSON")->required();
  iso->add_option("b", file2, "Bracoid JSON")->required();
  auto* ideals = app.add_subcommand("ideals", "Left ideals and ideals of N");
  ideals->add_option("file", file, "Bracoid JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("BRACOID_MAX_ORDER")) {
    try {
      raise_bounds(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "error: BRACOID_MAX_ORDER must be a positive integer\n";
      return 2;
    }
  }
  if (max_order > 0) {
    std::cerr << "warning: search bounds raised to " << max_order << "; large searches may be slow\n";
    raise_bounds(max_order);
  }

  int status = 0;
  try {
    if (*verify) status = cmd_verify(file, out);
    else if (*enumerate) cmd_enumerate(n_spec, g_spec, out);
    else if (*hgs) cmd_hgs(g_spec, sub_gens, out);
    else if (*reduce) cmd_reduce(file, out);
    else if (*iso) cmd_iso(file, file2, out);
    else if (*ideals) cmd_ideals(file, out);
    out.emit();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}

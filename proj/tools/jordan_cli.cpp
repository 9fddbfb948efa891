#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jordan/jordan.hpp"

using namespace jordan;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

mpq_class parse_rational(const std::string& text) {
  Scalar s = Scalar::parse(text, FieldSpec::rationals());
  return s.rational();
}

ParamOverrides parse_params(const std::string& text) {
  ParamOverrides out;
  for (const auto& kv : split(text, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected k=v in '" + kv + "'");
    out[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
  }
  return out;
}

std::vector<mpq_class> parse_values(const std::string& text) {
  std::vector<mpq_class> out;
  for (const auto& v : split(text, ',')) out.push_back(parse_rational(v));
  if (out.empty()) throw ParseError("empty value list");
  return out;
}

std::optional<FieldSpec> optional_field(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return FieldSpec::parse(text);
}

json cocycle_list(const std::vector<Cocycle>& cs, const Algebra& A) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.str(A.basis_names()));
  return out;
}

json subspace_json(const Subspace& s, const Algebra& A) { return detail::subspace_names(s, A.basis_names()); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

int emit_sections(const std::vector<ReportSection>& sections, const std::string& format, const std::string& out) {
  ReportDocument doc;
  doc.sections = sections;
  std::string text = format == "json" ? doc.to_json().dump(2) + "\n" : doc.text();
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << text;
    std::cout << (doc.all_pass() ? "all checks pass" : "some checks fail") << "; written to " << out << "\n";
  }
  return doc.all_pass() ? 0 : 1;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central extensions and the classification of small nilpotent Jordan algebras"};
  app.require_subcommand(1);
  int status = 0;

  std::string format = "text", out_path, params, values;
  auto* verify = app.add_subcommand("verify-catalog", "check the dimension <= 5 catalog");
  verify->add_option("--params", params, "pin parameters, e.g. alpha=2,beta=1/2");
  verify->add_option("--values", values, "sample values for the remaining parameters");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->callback([&] {
    std::vector<mpq_class> vs = values.empty() ? sample_values() : parse_values(values);
    ParamOverrides fixed = params.empty() ? ParamOverrides{} : parse_params(params);
    for (const auto& [name, v] : fixed) {
      bool known = std::any_of(catalog().begin(), catalog().end(), [&](const CatalogEntry& e) {
        return std::find(e.parameters.begin(), e.parameters.end(), name) != e.parameters.end();
      });
      if (!known) throw ParseError("no catalog family has a parameter named " + name);
    }
    status = emit_sections(verify_catalog(vs, fixed), format, "");
  });

  std::string which = "all";
  auto* tables = app.add_subcommand("tables", "reproduce the tables for dimension <= 4");
  tables->add_option("--which", which)->check(CLI::IsMember({"center", "assoc", "h2", "all"}));
  tables->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  tables->callback([&] { status = emit_sections(emit_tables(which), format, ""); });

  std::string ref, field;
  bool assoc = false;
  auto* coh = app.add_subcommand("cohomology", "cocycles, coboundaries and H^2");
  coh->add_option("ref", ref, "catalog name or @file")->required();
  coh->add_flag("--assoc", assoc, "include the associative part");
  coh->add_option("--field", field, "Q or p:P");
  coh->callback([&] {
    Algebra A = resolve_algebra(ref, optional_field(field));
    CocycleSpaces cs = cocycle_spaces(A);
    json j{{"algebra", A.name()},      {"field", A.field().spec_string()}, {"dim_z2", cs.z2.dim()},
           {"dim_b2", cs.b2.dim()},    {"dim_h2", cs.dim_h2()},            {"h2", cocycle_list(cs.h2_reps, A)}};
    if (assoc) {
      j["dim_h2_assoc"] = cs.dim_h2_assoc();
      j["h2_assoc"] = cocycle_list(cs.h2_assoc_reps, A);
    }
    print(j);
  });

  std::vector<std::string> cocycles;
  bool diag = false;
  std::string name;
  auto* ext = app.add_subcommand("extend", "central extension by one or more cocycles");
  ext->add_option("ref", ref, "catalog name or @file")->required();
  ext->add_option("--cocycle", cocycles, "e.g. d(b,d)+1*d(c,c)")->required();
  ext->add_flag("--diagnose", diag, "check the radical and independence conditions");
  ext->add_option("--field", field, "Q or p:P");
  ext->add_option("--name", name, "name of the result");
  ext->callback([&] {
    ExtensionSpec spec;
    spec.base = resolve_algebra(ref, optional_field(field));
    for (const auto& c : cocycles) spec.cocycles.push_back(parse_cocycle(c, spec.base));
    spec.name = name;
    Algebra M = central_extend(spec);
    json j{{"algebra", serialize_algebra(M)}};
    if (diag) {
      ExtensionDiagnostics d = diagnose(spec);
      bool jordan = jordan_identity_holds(M);
      j["diagnostics"] = {{"jordan", jordan},
                          {"radical_meet_center", subspace_json(d.radical_meet_center, spec.base)},
                          {"radical_condition", d.radical_condition},
                          {"independent_mod_b2", d.independent_mod_b2},
                          {"has_central_component", d.has_central_component}};
      if (!jordan || !d.radical_condition || !d.independent_mod_b2) status = 1;
    }
    print(j);
  });

  auto* inv = app.add_subcommand("invariants", "isomorphism invariants");
  inv->add_option("ref", ref, "catalog name or @file")->required();
  inv->add_option("--field", field, "Q or p:P");
  inv->callback([&] {
    Algebra A = resolve_algebra(ref, optional_field(field));
    InvariantVector v = invariant_vector(A);
    print({{"algebra", A.name()},
           {"dim", v.dim},
           {"power_dims", v.power_dims},
           {"nilpotency_index", v.nil_index},
           {"ann_dim", v.ann_dim},
           {"ann_meet_square_dim", v.ann_meet_square_dim},
           {"der_dim", v.der_dim},
           {"associative", v.associative},
           {"jordan", jordan_identity_holds(A)},
           {"center", subspace_json(annihilator(A), A)}});
  });

  std::string map_file, a_ref, b_ref, expect = "iso";
  bool search = false;
  auto* iso = app.add_subcommand("iso", "verify a map or search for an isomorphism");
  iso->add_option("A", a_ref)->required();
  iso->add_option("B", b_ref)->required();
  auto* map_opt = iso->add_option("--map", map_file, "matrix file, one row per target coordinate");
  iso->add_flag("--search", search, "exhaustive search over a prime field")->excludes(map_opt);
  iso->add_option("--field", field, "Q or p:P");
  iso->add_option("--expect", expect, "iso or distinct")->check(CLI::IsMember({"iso", "distinct"}));
  iso->callback([&] {
    if (!search && map_file.empty()) throw ParseError("iso needs --map or --search");
    if (search && field.empty()) throw ParseError("--search needs --field p:P");
    auto f = optional_field(field);
    Algebra A = resolve_algebra(a_ref, f), B = resolve_algebra(b_ref, f);
    json j{{"A", A.name()}, {"B", B.name()}, {"field", A.field().spec_string()}};
    bool found = false;
    if (search) {
      auto m = search_isomorphism(A, B, A.field());
      found = m.has_value();
      j["isomorphic"] = found;
      if (m) j["map"] = matrix_json(m->mat);
      if (!m) j["invariants_separate"] = invariant_separation(A, B) == Separation::distinct;
    } else {
      Matrix m = parse_matrix_text(read_file(map_file), B.field());
      found = verify_isomorphism({A, B, m});
      j["verified"] = found;
    }
    print(j);
    status = found == (expect == "iso") ? 0 : 1;
  });

  std::size_t grass = 1;
  auto* orb = app.add_subcommand("orbits", "automorphism orbits on admissible subspaces of H^2");
  orb->add_option("ref", ref)->required();
  orb->add_option("--field", field, "p:P")->required();
  orb->add_option("--grassmann", grass, "subspace dimension")->check(CLI::IsMember({1, 2}));
  orb->callback([&] {
    FieldSpec f = FieldSpec::parse(field);
    if (f.is_rational()) throw InvalidField("orbit census needs a prime field");
    Algebra A = resolve_algebra(ref, f);
    OrbitReport r = orbit_census(A, f, grass);
    json reps = json::array();
    for (std::size_t i = 0; i < r.orbit_representatives.size(); ++i)
      reps.push_back({{"cocycles", cocycle_list(r.orbit_representatives[i], A)}, {"size", r.orbit_sizes[i]}});
    print({{"algebra", A.name()},
           {"field", f.spec_string()},
           {"grassmann", grass},
           {"h2_dim", r.h2_dim},
           {"aut_order", r.aut_group_order},
           {"subspaces", r.total_subspaces},
           {"admissible", r.total_admissible},
           {"orbits", r.orbit_count},
           {"representatives", reps}});
  });

  std::string alpha;
  auto* lem = app.add_subcommand("lemma-a", "normal-form matrix for a nonzero 3-vector");
  lem->add_option("--alpha", alpha, "e.g. 2,0,0")->required();
  lem->add_option("--field", field, "Q or p:P");
  lem->callback([&] {
    FieldSpec f = field.empty() ? FieldSpec::rationals() : FieldSpec::parse(field);
    auto parts = split(alpha, ',');
    if (parts.size() != 3) throw ParseError("--alpha needs three comma-separated entries");
    Vector a;
    for (const auto& p : parts) a.push_back(Scalar::parse(p, f));
    LemmaResult res = lemma_a_matrix(a, f);
    json row = json::array();
    for (const auto& x : res.alphaA) row.push_back(x.str());
    print({{"case", res.case_label}, {"field", f.spec_string()}, {"A", matrix_json(res.A)}, {"c", res.c.str()},
           {"alphaA", row}});
  });

  auto* show = app.add_subcommand("show", "print an algebra document");
  show->add_option("ref", ref)->required();
  show->add_option("--field", field, "Q or p:P");
  show->callback([&] { print(serialize_algebra(resolve_algebra(ref, optional_field(field)))); });

  std::string primes = "5,7";
  bool skip_separation = false;
  auto* rep = app.add_subcommand("report", "every check, in a fixed order");
  rep->add_option("--primes", primes, "primes for the finite-field searches");
  rep->add_option("--out", out_path, "write the report to a file");
  rep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  rep->add_flag("--skip-separation", skip_separation, "omit the pairwise search");
  rep->callback([&] {
    ReportOptions opt;
    opt.separation.primes.clear();
    for (const auto& p : split(primes, ',')) opt.separation.primes.push_back(FieldSpec::parse(p).characteristic());
    opt.include_separation = !skip_separation;
    status = emit_sections(full_report(opt).sections, format, out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordan/catalog.hpp"
#include "jordan/document.hpp"

namespace jordan {

/// Printed second cohomology of a small algebra: generators modulo
/// coboundaries, with relations that must vanish in cohomology.
struct H2Expectation {
  std::string name;
  std::optional<std::vector<std::string>> ass_gens;  ///< Absent for non-associative algebras.
  std::vector<std::string> ass_relations;
  std::vector<std::string> jor_extra;  ///< Jor = Ass (+) extra when jor_own is empty.
  std::vector<std::string> jor_own;
  std::vector<std::string> jor_relations;
  std::size_t ass_dim = 0;
  std::size_t jor_dim = 0;
};

namespace detail {

inline std::vector<std::string> all_deltas(std::size_t n) {
  auto names = default_basis_names(n);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back("d(" + names[i] + "," + names[j] + ")");
  return out;
}

inline H2Expectation h2_row(std::string name, std::optional<std::vector<std::string>> ass,
                            std::vector<std::string> ass_rel, std::vector<std::string> extra,
                            std::size_t ass_dim, std::size_t jor_dim) {
  H2Expectation e;
  e.name = std::move(name);
  e.ass_gens = std::move(ass);
  e.ass_relations = std::move(ass_rel);
  e.jor_extra = std::move(extra);
  e.ass_dim = ass_dim;
  e.jor_dim = jor_dim;
  return e;
}

inline H2Expectation h2_own(std::string name, std::optional<std::vector<std::string>> ass,
                            std::vector<std::string> jor, std::vector<std::string> jor_rel, std::size_t ass_dim,
                            std::size_t jor_dim) {
  H2Expectation e = h2_row(std::move(name), std::move(ass), {}, {}, ass_dim, jor_dim);
  e.jor_own = std::move(jor);
  e.jor_relations = std::move(jor_rel);
  return e;
}

}  // namespace detail

inline const std::vector<H2Expectation>& h2_expectations() {
  using detail::h2_own;
  using detail::h2_row;
  static const std::vector<H2Expectation> rows = [] {
    std::vector<H2Expectation> r;
    r.push_back(h2_row("J1,1", detail::all_deltas(1), {}, {}, 1, 1));
    r.push_back(h2_row("J2,1", detail::all_deltas(2), {}, {}, 3, 3));
    r.push_back(h2_row("J2,2", {{"d(a,b)"}}, {}, {}, 1, 1));
    r.push_back(h2_row("J3,1", detail::all_deltas(3), {}, {}, 6, 6));
    r.push_back(h2_row("J3,2", {{"d(a,b)", "d(a,c)", "d(c,c)"}}, {}, {"d(b,c)"}, 3, 4));
    r.push_back(h2_row("J3,3", {{"d(a,a)", "d(b,b)"}}, {}, {"d(a,c)", "d(b,c)"}, 2, 4));
    r.push_back(h2_row("J3,4", {{"d(a,c)+d(b,b)"}}, {}, {}, 1, 1));
    r.push_back(h2_row("J4,1", detail::all_deltas(4), {}, {}, 10, 10));
    r.push_back(h2_row("J4,2", {{"d(c,c)", "d(d,d)", "d(a,b)", "d(a,c)", "d(a,d)", "d(c,d)"}}, {},
                       {"d(b,c)", "d(b,d)"}, 6, 8));
    r.push_back(h2_row("J4,3", {{"d(a,a)", "d(b,b)", "d(d,d)", "d(a,d)", "d(b,d)"}}, {},
                       {"d(a,c)", "d(b,c)", "d(c,d)"}, 5, 8));
    r.push_back(h2_row("J4,4", {{"d(a,c)+d(b,b)", "d(a,d)", "d(d,d)"}}, {}, {"d(b,d)"}, 3, 4));
    r.push_back(h2_row("J4,5", {{"d(a,a)", "d(b,b)", "d(c,c)", "d(a,b)", "d(a,c)", "d(b,c)"}}, {"d(c,c)+d(a,b)"},
                       {"d(a,d)", "d(b,d)", "d(c,d)"}, 5, 8));
    r.push_back(h2_own("J4,6", std::nullopt, {"d(a,b)", "d(a,c)", "d(c,c)", "d(b,d)"}, {}, 0, 4));
    r.push_back(h2_row("J4,7", {{"d(a,c)", "d(a,b)", "d(c,c)"}}, {"d(a,b)+d(c,c)"}, {"d(b,b)+d(a,d)"}, 2, 3));
    r.push_back(h2_own("J4,8", std::nullopt, {"d(a,a)", "d(b,b)", "d(b,c)"}, {}, 0, 3));
    r.push_back(h2_own("J4,9", std::nullopt, {"d(a,a)", "d(b,b)", "d(a,c)", "d(b,c)"}, {"d(b,b)+d(a,c)"}, 0, 3));
    r.push_back(h2_own("J4,10", std::nullopt, {"d(a,a)", "d(b,b)", "d(a,c)", "d(b,c)"}, {"d(a,c)+d(b,c)"}, 0, 3));
    r.push_back(h2_row("J4,11", {{"d(a,d)+d(b,b)"}}, {}, {}, 1, 1));
    r.push_back(h2_own("J4,12", {{"d(a,c)", "d(b,b)", "d(a,d)+d(b,c)"}},
                       {"d(a,c)", "d(b,b)", "d(a,d)", "d(b,c)", "d(b,d)"}, {}, 3, 5));
    r.push_back(h2_row("J4,13", {{"d(a,b)", "d(a,c)", "d(b,d)"}}, {}, {"d(b,c)", "d(a,d)"}, 3, 5));
    return r;
  }();
  return rows;
}

namespace detail {

inline std::string subspace_names(const Subspace& s, const std::vector<std::string>& names) {
  if (s.dim() == 0) return "0";
  std::vector<std::string> parts;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vector v = s.basis().row(r);
    std::string term;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      std::string c = v[k].is_one() ? "" : v[k].str() + "*";
      term += (term.empty() ? "" : "+") + c + names[k];
    }
    parts.push_back(term);
  }
  return "span{" + join(parts) + "}";
}

/// Compares span(gens) + b2 with `computed` + b2, checking relations and membership.
inline ReportRow h2_generator_row(const Algebra& A, const CocycleSpaces& cs, const std::string& label,
                                  const std::vector<std::string>& gens, const std::vector<std::string>& relations,
                                  const Subspace& computed) {
  ReportRow row;
  row.subject = A.name();
  row.claim = label + " = <" + join(gens) + ">" + (relations.empty() ? "" : " / <" + join(relations) + ">");
  std::vector<Vector> vs;
  std::vector<std::string> problems;
  for (const auto& g : gens) {
    Cocycle c = parse_cocycle(g, A);
    if (!computed.contains(c.upper())) problems.push_back(g + " not in the computed cocycle space");
    vs.push_back(c.upper());
  }
  Subspace expected = Subspace::span(upper_size(A.dim()), A.field(), vs) + cs.b2;
  for (const auto& rel : relations) {
    Cocycle c = parse_cocycle(rel, A);
    if (!cs.b2.contains(c.upper())) problems.push_back("relation " + rel + " is not a coboundary");
  }
  Subspace actual = computed + cs.b2;
  std::size_t exp_dim = expected.dim() - cs.b2.dim(), act_dim = actual.dim() - cs.b2.dim();
  if (!(expected == actual)) problems.push_back("spans differ modulo coboundaries");
  row.expected = "dim " + std::to_string(exp_dim) + " mod b2";
  row.observed = "dim " + std::to_string(act_dim) + " mod b2";
  if (!problems.empty()) row.observed += " (" + join(problems, "; ") + ")";
  row.pass = problems.empty();
  return row;
}

inline ReportRow dim_row(const std::string& subject, const std::string& claim, std::size_t expected,
                         std::size_t observed) {
  ReportRow row;
  row.subject = subject;
  row.claim = claim;
  row.expected = std::to_string(expected);
  row.observed = std::to_string(observed);
  row.pass = expected == observed;
  return row;
}

}  // namespace detail

/// Center column of the small-dimension table: Ann(J) against the printed basis.
inline ReportSection table_centers() {
  ReportSection s;
  s.title = "centers of algebras of dimension <= 4";
  for (const auto& e : catalog()) {
    if (e.auxiliary || e.dim > 4) continue;
    Algebra A = instantiate(e.name);
    std::vector<Vector> vs;
    std::string t = detail::strip_spaces(e.center);
    std::size_t pos = 0;
    while (pos < t.size()) {
      std::size_t comma = t.find(',', pos);
      if (comma == std::string::npos) comma = t.size();
      vs.push_back(unit_vector(A.dim(), A.index_of(t.substr(pos, comma - pos)), A.field()));
      pos = comma + 1;
    }
    Subspace expected = Subspace::span(A.dim(), A.field(), vs);
    Subspace actual = annihilator(A);
    ReportRow row;
    row.subject = e.name;
    row.claim = "Z(J) = span{" + e.center + "}";
    row.expected = detail::subspace_names(expected, A.basis_names());
    row.observed = detail::subspace_names(actual, A.basis_names());
    row.pass = expected == actual;
    s.rows.push_back(row);
  }
  return s;
}

inline ReportSection table_associativity() {
  ReportSection s;
  s.title = "associativity flags of algebras of dimension <= 4";
  for (const auto& e : catalog()) {
    if (e.auxiliary || e.dim > 4 || !e.associative) continue;
    bool actual = is_associative(instantiate(e.name));
    ReportRow row;
    row.subject = e.name;
    row.claim = *e.associative ? "associative" : "non-associative";
    row.expected = *e.associative ? "true" : "false";
    row.observed = actual ? "true" : "false";
    row.pass = actual == *e.associative;
    s.rows.push_back(row);
  }
  return s;
}

inline ReportSection table_h2() {
  ReportSection s;
  s.title = "second cohomology of algebras of dimension <= 4";
  for (const auto& e : h2_expectations()) {
    Algebra A = instantiate(e.name);
    CocycleSpaces cs = cocycle_spaces(A);
    if (e.ass_gens) {
      s.rows.push_back(detail::dim_row(e.name, "dim H2_Ass", e.ass_dim, cs.dim_h2_assoc()));
      s.rows.push_back(detail::h2_generator_row(A, cs, "H2_Ass", *e.ass_gens, e.ass_relations, cs.assoc));
    }
    s.rows.push_back(detail::dim_row(e.name, "dim H2_Jor", e.jor_dim, cs.dim_h2()));
    if (!e.jor_own.empty()) {
      s.rows.push_back(detail::h2_generator_row(A, cs, "H2_Jor", e.jor_own, e.jor_relations, cs.z2));
    } else {
      std::vector<std::string> gens = *e.ass_gens;
      gens.insert(gens.end(), e.jor_extra.begin(), e.jor_extra.end());
      s.rows.push_back(detail::h2_generator_row(A, cs, e.jor_extra.empty() ? "H2_Jor = H2_Ass" : "H2_Jor = H2_Ass (+)",
                                                gens, e.ass_relations, cs.z2));
    }
  }
  return s;
}

/// Sections selected by "center", "assoc", "h2" or "all".
inline std::vector<ReportSection> emit_tables(const std::string& which) {
  std::vector<ReportSection> out;
  if (which == "center" || which == "all") out.push_back(table_centers());
  if (which == "assoc" || which == "all") out.push_back(table_associativity());
  if (which == "h2" || which == "all") out.push_back(table_h2());
  if (out.empty()) throw Error("unknown table '" + which + "' (expected center, assoc, h2 or all)");
  return out;
}

}  // namespace jordan

#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include "jordan/extension.hpp"
#include "jordan/polynomial.hpp"

namespace jordan {

struct Exclusion {
  std::string parameter;
  mpq_class value;
};

/// Parent algebra plus the (possibly parametric) cocycles producing an entry.
struct LineageSpec {
  std::string parent;
  std::vector<std::string> cocycles;
  bool split = false;  ///< Zero cocycle: the entry is parent (+) a one-dimensional summand.
};

struct CatalogEntry {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> parameters;
  std::vector<Exclusion> exclusions;
  std::string products;  ///< Multiplication table such as "a^2=b, b*c=d"; empty means zero product.
  std::optional<LineageSpec> lineage;
  std::string center;               ///< Expected Z(J) basis (dim <= 4 only), e.g. "c,d".
  std::optional<bool> associative;  ///< Expected associativity flag (dim <= 4 only).
  bool auxiliary = false;           ///< Helper algebra outside the classification list.
  bool derived_products = false;    ///< Products come from the lineage alone.
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

inline bool is_rational_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t slash = s.find('/');
  auto digits = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  if (slash == std::string::npos) return digits(s);
  return digits(s.substr(0, slash)) && digits(s.substr(slash + 1));
}

/// Splits "2*x-alpha*y+d(a,b)" into (coefficient, target) pairs.
inline std::vector<std::pair<ParamPoly, std::string>> parse_param_terms(const std::string& text) {
  std::string t = strip_spaces(text);
  std::vector<std::pair<ParamPoly, std::string>> out;
  std::size_t pos = 0;
  int depth = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    for (; end < t.size(); ++end) {
      if (t[end] == '(') ++depth;
      if (t[end] == ')') --depth;
      if (depth == 0 && (t[end] == '+' || t[end] == '-') && end > pos) break;
    }
    std::string term = t.substr(pos, end - pos);
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    ParamPoly coeff(mpq_class(negative ? -1 : 1));
    std::string target;
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t star = term.find('*', start);
      if (star == std::string::npos) star = term.size();
      std::string factor = term.substr(start, star - start);
      if (is_rational_literal(factor)) {
        mpq_class q(factor);
        q.canonicalize();
        coeff = coeff * ParamPoly(q);
      } else if (factor == "alpha" || factor == "beta") {
        coeff = coeff * ParamPoly::variable(factor);
      } else {
        if (!target.empty() || factor.empty()) throw ParseError("bad term '" + term + "'");
        target = factor;
      }
      start = star + 1;
    }
    if (target.empty()) throw ParseError("term without target in '" + text + "'");
    out.push_back({coeff, target});
    pos = end;
  }
  return out;
}

struct ParametricProduct {
  std::size_t i, j;
  std::vector<std::pair<std::size_t, ParamPoly>> terms;
};

inline std::vector<ParametricProduct> parse_param_products(const std::string& text,
                                                           const std::vector<std::string>& names) {
  auto index = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw ParseError("unknown basis element '" + s + "' in '" + text + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<ParametricProduct> out;
  std::string t = strip_spaces(text);
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string::npos) comma = t.size();
    std::string item = t.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("product without '=': " + item);
    std::string lhs = item.substr(0, eq), rhs = item.substr(eq + 1);
    std::size_t i, j;
    if (lhs.size() > 2 && lhs.substr(lhs.size() - 2) == "^2") {
      i = j = index(lhs.substr(0, lhs.size() - 2));
    } else {
      std::size_t star = lhs.find('*');
      if (star == std::string::npos) throw ParseError("bad product '" + lhs + "'");
      i = index(lhs.substr(0, star));
      j = index(lhs.substr(star + 1));
    }
    if (i > j) std::swap(i, j);
    ParametricProduct p{i, j, {}};
    for (auto& [c, target] : parse_param_terms(rhs)) p.terms.push_back({index(target), c});
    out.push_back(std::move(p));
  }
  return out;
}

inline CatalogEntry entry(std::string name, std::size_t dim, std::string products, std::string center = {},
                          std::optional<bool> assoc = std::nullopt) {
  CatalogEntry e;
  e.name = std::move(name);
  e.dim = dim;
  e.products = std::move(products);
  e.center = std::move(center);
  e.associative = assoc;
  return e;
}

inline CatalogEntry five(std::string name, std::string products, std::string parent,
                         std::vector<std::string> cocycles, std::vector<std::string> params = {}) {
  CatalogEntry e = entry(std::move(name), 5, std::move(products));
  e.parameters = std::move(params);
  LineageSpec l;
  l.parent = std::move(parent);
  l.split = cocycles.size() == 1 && cocycles[0] == "0";
  l.cocycles = std::move(cocycles);
  e.lineage = std::move(l);
  return e;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(entry("J1,1", 1, "", "a", true));
  c.push_back(entry("J2,1", 2, "", "a,b", true));
  c.push_back(entry("J2,2", 2, "a^2=b", "b", true));
  c.push_back(entry("J3,1", 3, "", "a,b,c", true));
  c.push_back(entry("J3,2", 3, "a^2=b", "b,c", true));
  c.push_back(entry("J3,3", 3, "a*b=c", "c", true));
  c.push_back(entry("J3,4", 3, "a^2=b, a*b=c", "c", true));
  c.push_back(entry("J4,1", 4, "", "a,b,c,d", true));
  c.push_back(entry("J4,2", 4, "a^2=b", "b,c,d", true));
  c.push_back(entry("J4,3", 4, "a*b=c", "c,d", true));
  c.push_back(entry("J4,4", 4, "a^2=b, a*b=c", "c,d", true));
  c.push_back(entry("J4,5", 4, "a*b=d, c^2=d", "d", true));
  c.push_back(entry("J4,6", 4, "a^2=b, b*c=d", "d", false));
  c.push_back(entry("J4,7", 4, "a^2=b, a*b=d, c^2=d", "d", true));
  c.push_back(entry("J4,8", 4, "a*b=c, a*c=d", "d", false));
  c.push_back(entry("J4,9", 4, "a*b=c, a*c=d, b^2=d", "d", false));
  c.push_back(entry("J4,10", 4, "a*b=c, a*c=d, b*c=d", "d", false));
  c.push_back(entry("J4,11", 4, "a^2=b, a*b=c, a*c=d, b^2=d", "d", true));
  c.push_back(entry("J4,12", 4, "a^2=c, a*b=d", "c,d", true));
  c.push_back(entry("J4,13", 4, "a^2=c, b^2=d", "c,d", true));

  c.push_back(five("J5,1", "a^2=b, b*c=d", "J4,6", {"0"}));
  c.push_back(five("J5,2", "a^2=b, b*c=d, b*d=e", "J4,6", {"d(b,d)"}));
  c.push_back(five("J5,3", "a^2=b, b*c=d, b*d=e, c^2=e", "J4,6", {"d(b,d)+d(c,c)"}));
  c.push_back(five("J5,4", "a*b=c, a*c=d", "J4,8", {"0"}));
  c.push_back(five("J5,5", "a*b=c, a*c=d, b^2=d", "J4,9", {"0"}));
  c.push_back(five("J5,6", "a*b=c, a*c=d, b*c=d", "J4,10", {"0"}));
  c.push_back(five("J5,7", "a^2=b, d^2=e, b*c=e", "J4,2", {"d(d,d)+d(b,c)"}));
  c.push_back(five("J5,8", "a^2=b, a*d=e, b*c=e", "J4,2", {"d(a,d)+d(b,c)"}));
  c.push_back(five("J5,9", "a*b=c, c*d=e", "J4,3", {"d(c,d)"}));
  c.push_back(five("J5,10", "a*b=c, c*d=e, a^2=e", "J4,3", {"d(a,a)+d(c,d)"}));
  c.push_back(five("J5,11", "a*b=c, c*d=e, a^2=e, b^2=e", "J4,3", {"d(a,a)+d(b,b)+d(c,d)"}));
  c.push_back(five("J5,12", "a*b=c, a*c=e, d^2=e, b*c=e", "J4,3", {"d(d,d)+d(a,c)+d(b,c)"}));
  c.push_back(five("J5,13", "a*b=c, a*c=e, d^2=e", "J4,3", {"d(d,d)+d(a,c)"}));
  c.push_back(five("J5,14", "a*b=c, a*c=e, d^2=e, b^2=e", "J4,3", {"d(b,b)+d(d,d)+d(a,c)"}));
  c.push_back(five("J5,15", "a*b=c, a*c=e, a*d=e, b*c=e", "J4,3", {"d(a,c)+d(a,d)+d(b,c)"}));
  c.push_back(five("J5,16", "a*b=c, a*c=e, b*d=e", "J4,3", {"d(a,c)+d(b,d)"}));
  c.push_back(five("J5,17", "a^2=b, a*b=c, a*c=e, b^2=e, b*d=e, d^2=alpha*e", "J4,4",
                   {"d(a,c)+d(b,b)+d(b,d)+alpha*d(d,d)"}, {"alpha"}));
  c.push_back(five("J5,18", "a*b=d, c^2=d, a*d=e", "J4,5", {"d(a,d)"}));
  c.push_back(five("J5,19", "a*b=d, c^2=d, a*d=e, b*c=e", "J4,5", {"d(a,d)+d(b,c)"}));
  c.push_back(five("J5,20", "a*b=d, c^2=d, a*d=e, b^2=e", "J4,5", {"d(a,d)+d(b,b)"}));
  c.push_back(five("J5,21", "a*b=d, c^2=d, c*d=e", "J4,5", {"d(c,d)"}));
  c.push_back(five("J5,22", "a*b=d, c^2=d, c*d=e, a^2=e", "J4,5", {"d(c,d)+d(a,a)"}));
  c.push_back(five("J5,23", "a*b=d, c^2=d, c*d=e, a^2=e, b^2=e", "J4,5", {"d(c,d)+d(a,a)+d(b,b)"}));
  c.push_back(five("J5,24", "a^2=b, a*b=d, c^2=d, b^2=e, a*d=e", "J4,7", {"d(b,b)+d(a,d)"}));
  c.push_back(five("J5,25", "a^2=c, a*b=d, b*c=e, b*d=e", "J4,12", {"d(b,c)+d(b,d)"}));
  c.push_back(five("J5,26", "a^2=c, a*b=d, a*c=e, b*d=e, b*c=alpha*e", "J4,12", {"d(a,c)+alpha*d(b,c)+d(b,d)"},
                   {"alpha"}));
  {
    CatalogEntry e = five("J5,27", "a^2=c, a*b=d, b*c=e, a*d=alpha*e", "J4,12", {"d(b,c)+alpha*d(a,d)"}, {"alpha"});
    e.exclusions = {{"alpha", 0}, {"alpha", 1}};
    c.push_back(std::move(e));
  }
  c.push_back(five("J5,28", "a^2=c, a*b=d, a*c=e, b*c=-2*e, a*d=e", "J4,12", {"d(a,c)-2*d(b,c)+d(a,d)"}));
  c.push_back(five("J5,29", "a^2=c, b^2=d, a*c=e, a*d=e, b*d=alpha*e", "J4,13", {"d(a,c)+d(a,d)+alpha*d(b,d)"},
                   {"alpha"}));
  c.push_back(five("J5,30", "a^2=c, b^2=d, b*c=e, a*d=e, b*d=alpha*e, a*c=beta*e", "J4,13",
                   {"d(b,c)+d(a,d)+alpha*d(b,d)+beta*d(a,c)"}, {"alpha", "beta"}));
  c.push_back(five("J5,31", "a^2=b, b*c=d, a*b=e", "J3,2", {"d(b,c)", "d(a,b)"}));
  c.push_back(five("J5,32", "a^2=b, b*c=d, a*b=e, a*c=e", "J3,2", {"d(b,c)", "d(a,b)+d(a,c)"}));
  c.push_back(five("J5,33", "a^2=b, b*c=d, a*b=e, c^2=e", "J3,2", {"d(b,c)", "d(a,b)+d(c,c)"}));
  c.push_back(five("J5,34", "a^2=b, b*c=d, c^2=e", "J3,2", {"d(b,c)", "d(c,c)"}));
  c.push_back(five("J5,35", "a^2=b, b*c=d, a*c=e", "J3,2", {"d(b,c)", "d(a,c)"}));
  c.push_back(five("J5,36", "a^2=b, b*c=d, a*c=e, c^2=e", "J3,2", {"d(b,c)", "d(a,c)+d(c,c)"}));
  c.push_back(five("J5,37", "a*b=c, a*c=d, b*c=e", "J3,3", {"d(a,c)", "d(b,c)"}));
  c.push_back(five("J5,38", "a*b=c, a*c=d, a^2=e, b*c=e", "J3,3", {"d(a,c)", "d(a,a)+d(b,c)"}));
  c.push_back(five("J5,39", "a*b=c, a*c=d, a^2=e", "J3,3", {"d(a,c)", "d(a,a)"}));
  c.push_back(five("J5,40", "a*b=c, a*c=d, b^2=e", "J3,3", {"d(a,c)", "d(b,b)"}));
  c.push_back(five("J5,41", "a*b=c, a*c=d, a^2=e, b^2=e", "J3,3", {"d(a,c)", "d(a,a)+d(b,b)"}));
  c.push_back(five("J5,42", "a*b=c, b^2=d, a*c=d, a^2=e, b*c=e", "J3,3", {"d(b,b)+d(a,c)", "d(a,a)+d(b,c)"}));
  c.push_back(five("J5,43", "a*b=c, b^2=d, a*c=d, a^2=e", "J3,3", {"d(b,b)+d(a,c)", "d(a,a)"}));
  c.push_back(five("J5,44", "a*b=c, a*c=d, b*c=d, a^2=e, b^2=alpha*e", "J3,3", {"d(a,c)+d(b,c)", "d(a,a)+alpha*d(b,b)"},
                   {"alpha"}));

  // Algebras appearing in the remark after the small-dimension tables.
  auto aux = [&](std::string name, std::size_t dim, std::string products) {
    CatalogEntry e = entry(std::move(name), dim, std::move(products));
    e.auxiliary = true;
    c.push_back(std::move(e));
  };
  aux("J1'", 4, "a^2=c, b^2=c");
  aux("J2'", 4, "a^2=c, b^2=c, a*c=d");
  aux("J3'", 4, "a^2=c, b^2=-1*c, a*c=d, b*c=d");
  aux("J4'", 4, "a^2=c, b^2=-1*c, a*c=d, b*c=d, a*b=d");
  aux("J5'", 4, "a^2=d, b^2=d, c^2=d");
  aux("J6'", 4, "a^2=c, b^2=c, a*b=d");
  aux("V7@J3,2", 5, "a^2=b, b*c=d, a*b=e, a*c=e, c^2=e");
  c.back().lineage = LineageSpec{"J3,2", {"d(b,c)", "d(a,b)+d(a,c)+d(c,c)"}, false};
  auto derived = [&](std::string name, std::string parent, std::vector<std::string> cocycles,
                     std::vector<std::string> params = {}) {
    CatalogEntry e = entry(std::move(name), 5, "");
    e.auxiliary = true;
    e.derived_products = true;
    e.parameters = std::move(params);
    e.lineage = LineageSpec{std::move(parent), std::move(cocycles), false};
    c.push_back(std::move(e));
  };
  derived("V8@J3,3", "J3,3", {"d(b,b)+d(a,c)", "d(a,a)+d(b,b)"});
  derived("V10@J3,3", "J3,3", {"d(a,c)+d(b,c)", "d(a,a)+alpha*d(b,b)+d(b,c)"}, {"alpha"});
  return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownAlgebra(name);
}

/// Classification entries (auxiliary helpers excluded) of a given dimension.
inline std::vector<const CatalogEntry*> entries_of_dim(std::size_t dim) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (!e.auxiliary && e.dim == dim) out.push_back(&e);
  return out;
}

inline void check_admissible(const CatalogEntry& e, const ParamBinding& binding) {
  for (const auto& [k, v] : binding)
    if (std::find(e.parameters.begin(), e.parameters.end(), k) == e.parameters.end())
      throw InadmissibleParameter(e.name + " has no parameter " + k);
  for (const auto& p : e.parameters)
    if (!binding.count(p)) throw InadmissibleParameter(e.name + " needs a value for " + p);
  for (const auto& x : e.exclusions) {
    const Scalar& v = binding.at(x.parameter);
    if (v == Scalar::from_rational(x.value, v.field()))
      throw InadmissibleParameter(e.name + " requires " + x.parameter + " != " + x.value.get_str());
  }
}

/// "J5,30[alpha=1,beta=2]" style label.
inline std::string instance_label(const std::string& name, const ParamBinding& binding) {
  if (binding.empty()) return name;
  std::string out = name + "[";
  bool first = true;
  for (const auto& p : {"alpha", "beta"}) {
    auto it = binding.find(p);
    if (it == binding.end()) continue;
    out += (first ? "" : ",") + std::string(p) + "=" + it->second.str();
    first = false;
  }
  return out + "]";
}

inline Algebra instantiate(const std::string& name, const ParamBinding& binding = {},
                           std::optional<FieldSpec> field = std::nullopt);

namespace detail {

inline FieldSpec binding_field(const ParamBinding& binding, std::optional<FieldSpec> field) {
  if (field) return *field;
  for (const auto& [k, v] : binding) return v.field();
  return FieldSpec::rationals();
}

inline Cocycle instantiate_cocycle(const std::string& text, const Algebra& parent, const ParamBinding& binding) {
  const std::size_t n = parent.dim();
  const FieldSpec& f = parent.field();
  Matrix m(n, n, f);
  if (strip_spaces(text) == "0") return Cocycle(m);
  for (auto& [coeff, target] : parse_param_terms(text)) {
    if (target.size() < 5 || target.substr(0, 2) != "d(" || target.back() != ')')
      throw ParseError("expected d(x,y), got '" + target + "'");
    std::string inner = target.substr(2, target.size() - 3);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError("expected d(x,y), got '" + target + "'");
    std::size_t i = parent.index_of(inner.substr(0, comma)), j = parent.index_of(inner.substr(comma + 1));
    Scalar v = coeff.evaluate(binding, f);
    m(i, j) += v;
    if (i != j) m(j, i) += v;
  }
  return Cocycle(m);
}

}  // namespace detail

/// Parent and cocycles of an entry, instantiated at the binding.
inline ExtensionSpec lineage_spec(const CatalogEntry& e, const ParamBinding& binding = {},
                                  std::optional<FieldSpec> field = std::nullopt) {
  if (!e.lineage) throw Error(e.name + " has no lineage");
  check_admissible(e, binding);
  FieldSpec f = detail::binding_field(binding, field);
  ExtensionSpec spec;
  spec.base = instantiate(e.lineage->parent, {}, f);
  for (const auto& text : e.lineage->cocycles)
    spec.cocycles.push_back(detail::instantiate_cocycle(text, spec.base, binding));
  spec.name = instance_label(e.name, binding);
  return spec;
}

inline Algebra instantiate(const std::string& name, const ParamBinding& binding, std::optional<FieldSpec> field) {
  const CatalogEntry& e = find_entry(name);
  check_admissible(e, binding);
  FieldSpec f = detail::binding_field(binding, field);
  if (e.derived_products) return central_extend(lineage_spec(e, binding, f));
  auto names = default_basis_names(e.dim);
  std::vector<Product> prods;
  for (auto& pp : detail::parse_param_products(e.products, names)) {
    Product p{pp.i, pp.j, {}};
    for (auto& [k, poly] : pp.terms) {
      Scalar v = poly.evaluate(binding, f);
      if (!v.is_zero()) p.terms.push_back({k, v});
    }
    if (!p.terms.empty()) prods.push_back(std::move(p));
  }
  return Algebra(instance_label(e.name, binding), e.dim, f, names, prods);
}

/// Values used whenever a parametric family has to be sampled.
inline std::vector<mpq_class> sample_values() {
  return {mpq_class(0), mpq_class(1), mpq_class(-1), mpq_class(2), mpq_class(1, 2)};
}

/// Parameters pinned to a single value while sampling; others range over the sample values.
using ParamOverrides = std::map<std::string, mpq_class>;

inline std::vector<ParamBinding> sample_bindings(const CatalogEntry& e,
                                                 const std::vector<mpq_class>& values = sample_values(),
                                                 const ParamOverrides& fixed = {}) {
  std::vector<ParamBinding> out;
  auto q = FieldSpec::rationals();
  auto range = [&](const std::string& p) {
    auto it = fixed.find(p);
    return it == fixed.end() ? values : std::vector<mpq_class>{it->second};
  };
  auto admissible = [&](const ParamBinding& b) {
    try {
      check_admissible(e, b);
      return true;
    } catch (const InadmissibleParameter&) {
      return false;
    }
  };
  if (e.parameters.empty()) {
    out.push_back({});
  } else if (e.parameters.size() == 1) {
    for (auto& v : range(e.parameters[0])) {
      ParamBinding b{{e.parameters[0], Scalar::from_rational(v, q)}};
      if (admissible(b)) out.push_back(b);
    }
  } else {
    for (auto& v : range(e.parameters[0]))
      for (auto& w : range(e.parameters[1])) {
        ParamBinding b{{e.parameters[0], Scalar::from_rational(v, q)}, {e.parameters[1], Scalar::from_rational(w, q)}};
        if (admissible(b)) out.push_back(b);
      }
  }
  return out;
}

struct Instance {
  const CatalogEntry* entry;
  ParamBinding binding;
  std::string label;
  Algebra algebra;
};

/// Every classification entry of the dimension, parametric ones sampled.
inline std::vector<Instance> sampled_instances(std::size_t dim, const std::vector<mpq_class>& values = sample_values(),
                                               const ParamOverrides& fixed = {}) {
  std::vector<Instance> out;
  for (const auto* e : entries_of_dim(dim))
    for (auto& b : sample_bindings(*e, values, fixed)) out.push_back({e, b, instance_label(e->name, b), instantiate(e->name, b)});
  return out;
}

/// Parses "J5,30[alpha=1,beta=2]" into a name and binding.
inline std::pair<std::string, ParamBinding> parse_reference(const std::string& ref) {
  std::string t = detail::strip_spaces(ref);
  auto open = t.find('[');
  if (open == std::string::npos) return {t, {}};
  if (t.back() != ']') throw ParseError("unterminated parameter list in '" + ref + "'");
  std::string name = t.substr(0, open), inner = t.substr(open + 1, t.size() - open - 2);
  ParamBinding b;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    std::size_t comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    std::string item = inner.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + item + "'");
    b[item.substr(0, eq)] = Scalar::parse(item.substr(eq + 1), FieldSpec::rationals());
    pos = comma + 1;
  }
  return {name, b};
}

inline Algebra instantiate_reference(const std::string& ref, std::optional<FieldSpec> field = std::nullopt) {
  auto [name, binding] = parse_reference(ref);
  return instantiate(name, binding, field);
}

}  // namespace jordan

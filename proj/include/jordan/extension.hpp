#pragma once

#include <string>
#include <vector>

#include "jordan/cohomology.hpp"

namespace jordan {

struct ExtensionSpec {
  Algebra base;
  std::vector<Cocycle> cocycles;
  std::vector<std::string> new_names;  ///< Optional; defaults continue the alphabet.
  std::string name;                    ///< Optional name of the result.
};

namespace detail {

inline void check_cocycles(const Algebra& base, const std::vector<Cocycle>& cocycles) {
  Subspace z2;
  bool computed = false;
  for (std::size_t t = 0; t < cocycles.size(); ++t) {
    const Cocycle& c = cocycles[t];
    if (c.dim() != base.dim()) throw DimensionMismatch("cocycle " + std::to_string(t + 1) + " has wrong size");
    require_same_field(c.field(), base.field());
    if (!computed) {
      z2 = cocycle_space(base);
      computed = true;
    }
    if (!z2.contains(c.upper()))
      throw InvalidCocycle(c.str(base.basis_names()) + " is not a cocycle of " + base.name());
  }
}

}  // namespace detail

/// J_theta = J (+) V with x*y = x*_J y + sum_t theta_t(x,y) v_t; new vectors
/// come after the old basis.
inline Algebra central_extend(const ExtensionSpec& spec) {
  const Algebra& A = spec.base;
  detail::check_cocycles(A, spec.cocycles);
  const std::size_t n = A.dim(), s = spec.cocycles.size(), N = n + s;
  std::vector<std::string> names = A.basis_names();
  for (std::size_t t = 0; t < s; ++t) {
    std::string nm = t < spec.new_names.size() ? spec.new_names[t] : default_basis_name(n + t);
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "'";
    names.push_back(nm);
  }
  std::vector<Product> prods;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Product p{i, j, {}};
      const Vector& v = A.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) p.terms.push_back({k, v[k]});
      for (std::size_t t = 0; t < s; ++t) {
        const Scalar& c = spec.cocycles[t].matrix()(i, j);
        if (!c.is_zero()) p.terms.push_back({n + t, c});
      }
      if (!p.terms.empty()) prods.push_back(std::move(p));
    }
  std::string name = spec.name;
  if (name.empty()) {
    name = A.name() + "(";
    for (std::size_t t = 0; t < s; ++t) name += (t ? "; " : "") + spec.cocycles[t].str(A.basis_names());
    name += ")";
  }
  return Algebra(name, N, A.field(), names, prods);
}

struct ExtensionDiagnostics {
  Subspace radical_meet_center;  ///< Rad(theta) intersected with Ann(J).
  bool radical_condition = false;  ///< radical_meet_center == 0.
  bool independent_mod_b2 = false;  ///< The cocycles are independent in H^2.
  bool has_central_component = false;  ///< Ann(J_theta) is not inside J_theta^2.
};

inline ExtensionDiagnostics diagnose(const ExtensionSpec& spec) {
  const Algebra& A = spec.base;
  detail::check_cocycles(A, spec.cocycles);
  ExtensionDiagnostics d;
  Subspace rad = radical(spec.cocycles, A.dim(), A.field());
  d.radical_meet_center = rad.intersect(annihilator(A));
  d.radical_condition = d.radical_meet_center.is_zero();
  Subspace b2 = coboundary_space(A);
  std::vector<Vector> vs;
  for (const auto& c : spec.cocycles) vs.push_back(c.upper());
  Subspace span = Subspace::span(upper_size(A.dim()), A.field(), vs);
  d.independent_mod_b2 = (span + b2).dim() == b2.dim() + spec.cocycles.size();
  Algebra M = central_extend(spec);
  Subspace whole = Subspace::whole(M.dim(), M.field());
  d.has_central_component = !product_space(M, whole, whole).contains(annihilator(M));
  return d;
}

/// A nilpotent algebra M written as a central extension of M / V with V = Ann(M).
struct Reconstruction {
  Algebra base;
  std::vector<Cocycle> cocycles;
  /// Columns: the basis of central_extend({base, cocycles}) expressed in M's coordinates.
  Matrix section;
};

inline Reconstruction reconstruct(const Algebra& M) {
  Subspace V = annihilator(M);
  if (V.is_zero()) throw NotAnExtension(M.name() + " has trivial annihilator");
  if (V.is_whole()) throw NotAnExtension(M.name() + " has zero product, so the base would be 0-dimensional");
  const std::size_t N = M.dim(), s = V.dim();
  auto piv = V.pivots();
  auto comp = V.complement_indices();
  const std::size_t n = comp.size();
  const FieldSpec& f = M.field();
  Matrix Vb = V.basis();
  // x = sum_{j in comp} y_j e_j + sum_t z_t v_t, with z_t = x[piv_t].
  auto split = [&](const Vector& x) {
    Vector z(s), rest = x;
    for (std::size_t t = 0; t < s; ++t) {
      z[t] = x[piv[t]];
      axpy(rest, -z[t], Vb.row(t));
    }
    Vector y(n);
    for (std::size_t a = 0; a < n; ++a) y[a] = rest[comp[a]];
    return std::make_pair(y, z);
  };
  std::vector<std::string> names;
  for (auto c : comp) names.push_back(M.basis_names()[c]);
  std::vector<Vector> table;
  std::vector<Matrix> forms(s, Matrix(n, n, f));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto [y, z] = split(M.basis_product(comp[a], comp[b]));
      table.push_back(y);
      for (std::size_t t = 0; t < s; ++t) {
        forms[t](a, b) = z[t];
        forms[t](b, a) = z[t];
      }
    }
  Reconstruction r;
  r.base = Algebra::from_table(M.name() + "/Ann", f, names, std::move(table));
  for (auto& fm : forms) r.cocycles.emplace_back(fm);
  std::vector<Vector> cols;
  for (auto c : comp) cols.push_back(unit_vector(N, c, f));
  for (auto& v : V.vectors()) cols.push_back(v);
  r.section = Matrix::from_columns(cols, N, f);
  return r;
}

}  // namespace jordan

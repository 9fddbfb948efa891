#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jordan/subspace.hpp"

namespace jordan {

/// One coefficient of a product: e_i * e_j gets c * e_k.
struct Term {
  std::size_t k;
  Scalar c;
};

/// Product e_i * e_j = sum of terms, with i <= j.
struct Product {
  std::size_t i;
  std::size_t j;
  std::vector<Term> terms;
};

/// a, b, ..., z, then x27, x28, ...
inline std::string default_basis_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "x" + std::to_string(index + 1);
}

inline std::vector<std::string> default_basis_names(std::size_t n, std::size_t offset = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(default_basis_name(offset + i));
  return out;
}

/// Finite-dimensional commutative algebra given by structure constants.
class Algebra {
 public:
  Algebra() = default;

  Algebra(std::string name, std::size_t dim, const FieldSpec& field, std::vector<std::string> basis_names,
          const std::vector<Product>& products)
      : name_(std::move(name)), dim_(dim), field_(field), names_(std::move(basis_names)) {
    if (names_.empty()) names_ = default_basis_names(dim_);
    if (names_.size() != dim_) throw StructureError("expected " + std::to_string(dim_) + " basis names");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw StructureError("duplicate basis names");
    table_.assign(dim_ * (dim_ + 1) / 2, zero_vector(dim_, field_));
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& p : products) {
      if (p.i >= dim_ || p.j >= dim_)
        throw StructureError("index out of range in product (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
      if (p.i > p.j)
        throw StructureError("product (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") has i > j");
      if (!pairs.insert({p.i, p.j}).second)
        throw StructureError("duplicate product (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
      std::set<std::size_t> ks;
      Vector& v = table_[pair_index(p.i, p.j)];
      for (const auto& t : p.terms) {
        if (t.k >= dim_) throw StructureError("term index out of range: " + std::to_string(t.k));
        if (!ks.insert(t.k).second) throw StructureError("duplicate term index " + std::to_string(t.k));
        if (t.c.field() != field_) throw FieldMismatch("structure constant outside " + field_.str());
        v[t.k] = t.c;
      }
    }
  }

  /// Builds from a dense table indexed by pair_index.
  static Algebra from_table(std::string name, const FieldSpec& field, std::vector<std::string> names,
                            std::vector<Vector> table) {
    Algebra a;
    a.name_ = std::move(name);
    a.dim_ = names.size();
    a.field_ = field;
    a.names_ = std::move(names);
    if (table.size() != a.dim_ * (a.dim_ + 1) / 2) throw StructureError("table size");
    for (auto& v : table) {
      if (v.size() != a.dim_) throw StructureError("table row size");
      for (auto& s : v)
        if (s.field() != field) throw FieldMismatch("structure constant outside " + field.str());
    }
    a.table_ = std::move(table);
    return a;
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  std::size_t index_of(const std::string& basis_name) const {
    auto it = std::find(names_.begin(), names_.end(), basis_name);
    if (it == names_.end()) throw ParseError("no basis element named '" + basis_name + "' in " + name_);
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * dim_ - i * (i - 1) / 2 + (j - i);
  }

  /// e_i * e_j as a coordinate vector.
  const Vector& basis_product(std::size_t i, std::size_t j) const { return table_.at(pair_index(i, j)); }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return basis_product(i, j).at(k); }

  const std::vector<Vector>& table() const { return table_; }

  Vector multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("element not in algebra " + name_);
    Vector out = zero_vector(dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const Vector& p = basis_product(i, j);
        Scalar c = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!p[k].is_zero()) out[k] += c * p[k];
      }
    }
    return out;
  }

  /// Sparse list of nonzero products with i <= j.
  std::vector<Product> products() const {
    std::vector<Product> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        Product p{i, j, {}};
        const Vector& v = basis_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (!v[k].is_zero()) p.terms.push_back({k, v[k]});
        if (!p.terms.empty()) out.push_back(std::move(p));
      }
    return out;
  }

  bool is_zero_algebra() const {
    for (const auto& v : table_)
      if (!jordan::is_zero(v)) return false;
    return true;
  }

  std::string format_vector(const Vector& v) const {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      std::string c = v[k].str();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (c != "1") out += c;
      out += names_[k];
    }
    return out.empty() ? "0" : out;
  }

  /// Human-readable product list such as "a^2 = b, a*b = c".
  std::string describe() const {
    std::string out;
    for (const auto& p : products()) {
      if (!out.empty()) out += ", ";
      out += p.i == p.j ? names_[p.i] + "^2" : names_[p.i] + "*" + names_[p.j];
      out += " = " + format_vector(basis_product(p.i, p.j));
    }
    return out.empty() ? "(zero product)" : out;
  }

  /// Same dimension, field and structure constants; names are ignored.
  bool same_structure(const Algebra& other) const {
    if (dim_ != other.dim_ || field_ != other.field_) return false;
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (table_[i] != other.table_[i]) return false;
    return true;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.name_ == b.name_ && a.names_ == b.names_ && a.same_structure(b);
  }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  std::string name_;
  std::size_t dim_ = 0;
  FieldSpec field_;
  std::vector<std::string> names_;
  std::vector<Vector> table_;
};

/// Element bound to its algebra.
class Element {
 public:
  Element(const Algebra& algebra, Vector coords) : algebra_(&algebra), coords_(std::move(coords)) {
    if (coords_.size() != algebra.dim()) throw DimensionMismatch("element coordinates");
  }

  static Element basis(const Algebra& algebra, std::size_t i) {
    return Element(algebra, unit_vector(algebra.dim(), i, algebra.field()));
  }

  const Algebra& algebra() const { return *algebra_; }
  const Vector& coords() const { return coords_; }

  friend Element operator*(const Element& x, const Element& y) {
    x.check(y);
    return Element(*x.algebra_, x.algebra_->multiply(x.coords_, y.coords_));
  }
  friend Element operator+(const Element& x, const Element& y) {
    x.check(y);
    return Element(*x.algebra_, add(x.coords_, y.coords_));
  }
  friend Element operator*(const Scalar& c, const Element& x) { return Element(*x.algebra_, scale(c, x.coords_)); }
  friend bool operator==(const Element& x, const Element& y) {
    x.check(y);
    return x.coords_ == y.coords_;
  }

  std::string str() const { return algebra_->format_vector(coords_); }

 private:
  void check(const Element& y) const {
    if (algebra_ != y.algebra_) throw AlgebraMismatch("elements of " + algebra_->name() + " and " + y.algebra_->name());
  }

  const Algebra* algebra_;
  Vector coords_;
};

namespace detail {

inline Vector basis_vec(const Algebra& a, std::size_t i) { return unit_vector(a.dim(), i, a.field()); }

}  // namespace detail

/// Checks the Jordan identity x^2(yx) = (x^2 y)x through its full
/// linearization on basis quadruples, plus the unlinearized form on basis
/// vectors and their pairwise sums.
inline bool jordan_identity_holds(const Algebra& A) {
  const std::size_t n = A.dim();
  auto m = [&](const Vector& x, const Vector& y) { return A.multiply(x, y); };
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(detail::basis_vec(A, i));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector ab = m(e[a], e[b]), ac = m(e[a], e[c]), bc = m(e[b], e[c]);
        for (std::size_t d = 0; d < n; ++d) {
          // ((ab)c)d-type linearization: sum over the three pairings.
          Vector lhs = m(m(ab, e[d]), e[c]);
          lhs = add(lhs, m(m(bc, e[d]), e[a]));
          lhs = add(lhs, m(m(ac, e[d]), e[b]));
          Vector rhs = m(ab, m(e[d], e[c]));
          rhs = add(rhs, m(bc, m(e[d], e[a])));
          rhs = add(rhs, m(ac, m(e[d], e[b])));
          if (lhs != rhs) return false;
        }
      }
  std::vector<Vector> samples = e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) samples.push_back(add(e[i], e[j]));
  for (const auto& x : samples) {
    Vector x2 = m(x, x);
    for (const auto& y : samples)
      if (m(x2, m(x, y)) != m(m(x2, y), x)) return false;
  }
  return true;
}

inline bool is_associative(const Algebra& A) {
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ei = detail::basis_vec(A, i), ej = detail::basis_vec(A, j), ek = detail::basis_vec(A, k);
        if (A.multiply(A.multiply(ei, ej), ek) != A.multiply(ei, A.multiply(ej, ek))) return false;
      }
  return true;
}

/// span{x*y : x in U, y in W}.
inline Subspace product_space(const Algebra& A, const Subspace& U, const Subspace& W) {
  std::vector<Vector> gens;
  for (const auto& x : U.vectors())
    for (const auto& y : W.vectors()) gens.push_back(A.multiply(x, y));
  return Subspace::span(A.dim(), A.field(), gens);
}

/// Ideal powers J^1 = J, J^k = sum_{i+j=k} J^i J^j.  The list stops at the
/// first zero power, or at the first repeated power for non-nilpotent input.
inline std::vector<Subspace> power_filtration(const Algebra& A) {
  std::vector<Subspace> powers{Subspace::whole(A.dim(), A.field())};
  if (A.dim() == 0) return powers;
  // A plateau J^m = ... = J^{2m} persists forever; shorter plateaus can still drop.
  std::size_t plateau = 1;
  while (true) {
    std::size_t k = powers.size() + 1;
    Subspace next(A.dim(), A.field());
    for (std::size_t i = 1; i < k; ++i) next = next + product_space(A, powers[i - 1], powers[k - i - 1]);
    if (!(next == powers.back())) plateau = k;
    powers.push_back(next);
    if (next.is_zero()) break;
    if (k >= 2 * plateau) {
      powers.resize(plateau + 1);
      break;
    }
  }
  return powers;
}

/// Left-normed powers J_{k} = J_{k-1} * J.
inline std::vector<Subspace> left_normed_powers(const Algebra& A) {
  Subspace whole = Subspace::whole(A.dim(), A.field());
  std::vector<Subspace> powers{whole};
  if (A.dim() == 0) return powers;
  for (std::size_t guard = 0; guard <= A.dim() + 1; ++guard) {
    Subspace next = product_space(A, powers.back(), whole);
    bool stalled = next == powers.back();
    powers.push_back(next);
    if (next.is_zero() || stalled) break;
  }
  return powers;
}

/// Smallest k with J^k = 0, or 0 when not nilpotent.
inline std::size_t nilpotency_index(const Algebra& A) {
  if (A.dim() == 0) return 1;
  auto p = power_filtration(A);
  return p.back().is_zero() ? p.size() : 0;
}

inline std::vector<std::size_t> power_dims(const Algebra& A) {
  std::vector<std::size_t> out;
  auto p = power_filtration(A);
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k].dim());
  return out;
}

/// Ann(J) = {x : x*J = 0}; for commutative algebras this is the center used
/// throughout the classification.
inline Subspace annihilator(const Algebra& A) {
  const std::size_t n = A.dim();
  Matrix eqs(n * n, n, A.field());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Vector& v = A.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) eqs(j * n + k, i) = v[k];
    }
  return Subspace::kernel(eqs);
}

/// Derivations as n x n matrices D (column l = image of e_l), flattened row-major.
inline Subspace derivation_algebra(const Algebra& A) {
  const std::size_t n = A.dim();
  std::vector<Vector> rows;
  auto var = [n](std::size_t k, std::size_t l) { return k * n + l; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Vector row = zero_vector(n * n, A.field());
        // D(e_i e_j) - D(e_i) e_j - e_i D(e_j), coordinate m.
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c = A.constant(i, j, k);
          if (!c.is_zero()) row[var(m, k)] += c;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c1 = A.constant(k, j, m);
          if (!c1.is_zero()) row[var(k, i)] -= c1;
          const Scalar& c2 = A.constant(i, k, m);
          if (!c2.is_zero()) row[var(k, j)] -= c2;
        }
        if (!jordan::is_zero(row)) rows.push_back(std::move(row));
      }
  if (rows.empty()) return Subspace::whole(n * n, A.field());
  return Subspace::kernel(Matrix::from_rows(rows, n * n, A.field()));
}

/// Isomorphism invariants used to separate catalog entries.
struct InvariantVector {
  std::size_t dim = 0;
  std::vector<std::size_t> power_dims;
  std::size_t nil_index = 0;
  std::size_t ann_dim = 0;
  std::size_t ann_meet_square_dim = 0;
  std::size_t der_dim = 0;
  bool associative = false;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;

  std::string str() const {
    std::ostringstream os;
    os << "dim=" << dim << " powers=[";
    for (std::size_t i = 0; i < power_dims.size(); ++i) os << (i ? "," : "") << power_dims[i];
    os << "] nil=" << nil_index << " ann=" << ann_dim << " ann&sq=" << ann_meet_square_dim << " der=" << der_dim
       << " assoc=" << (associative ? "yes" : "no");
    return os.str();
  }
};

inline InvariantVector invariant_vector(const Algebra& A) {
  InvariantVector v;
  v.dim = A.dim();
  v.power_dims = power_dims(A);
  v.nil_index = nilpotency_index(A);
  Subspace ann = annihilator(A);
  v.ann_dim = ann.dim();
  Subspace whole = Subspace::whole(A.dim(), A.field());
  v.ann_meet_square_dim = ann.intersect(product_space(A, whole, whole)).dim();
  v.der_dim = derivation_algebra(A).dim();
  v.associative = is_associative(A);
  return v;
}

inline Algebra direct_sum(const Algebra& A, const Algebra& B, std::string name = {}) {
  require_same_field(A.field(), B.field());
  std::size_t n = A.dim() + B.dim();
  std::vector<std::string> names = A.basis_names();
  for (const auto& s : B.basis_names()) {
    std::string candidate = s;
    while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += "'";
    names.push_back(candidate);
  }
  std::vector<Product> prods;
  for (auto p : A.products()) prods.push_back(p);
  for (auto p : B.products()) {
    Product q{p.i + A.dim(), p.j + A.dim(), {}};
    for (auto& t : p.terms) q.terms.push_back({t.k + A.dim(), t.c});
    prods.push_back(q);
  }
  if (name.empty()) name = A.name() + "+" + B.name();
  return Algebra(name, n, A.field(), names, prods);
}

/// Structure constants in the basis f_j = sum_i P(i,j) e_i.
inline Algebra change_basis(const Algebra& A, const Matrix& P, std::string name = {}) {
  if (P.rows() != A.dim() || !P.is_square()) throw DimensionMismatch("basis change matrix");
  require_same_field(A.field(), P.field());
  Matrix inv = require_inverse(P);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < A.dim(); ++j) cols.push_back(P.column(j));
  std::vector<Vector> table;
  for (std::size_t s = 0; s < A.dim(); ++s)
    for (std::size_t t = s; t < A.dim(); ++t) table.push_back(inv.apply(A.multiply(cols[s], cols[t])));
  return Algebra::from_table(name.empty() ? A.name() : name, A.field(), A.basis_names(), std::move(table));
}

/// Reduces a rational algebra modulo p (or returns a copy when the field already matches).
inline Algebra reduce_to_field(const Algebra& A, const FieldSpec& target) {
  if (A.field() == target) return A;
  if (!A.field().is_rational()) throw FieldMismatch("cannot move " + A.field().str() + " to " + target.str());
  std::vector<Vector> table;
  for (const auto& v : A.table()) table.push_back(reduce_vector(v, target));
  return Algebra::from_table(A.name(), target, A.basis_names(), std::move(table));
}

}  // namespace jordan

#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

/// Index of delta(i,j), i <= j, in the order (1,1),(1,2),...,(1,n),(2,2),...
inline std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

inline std::size_t upper_size(std::size_t n) { return n * (n + 1) / 2; }

/// Symmetric bilinear form on an algebra's basis.
class Cocycle {
 public:
  Cocycle() = default;

  explicit Cocycle(Matrix m) : mat_(std::move(m)) {
    if (!mat_.is_square()) throw DimensionMismatch("cocycle matrix must be square");
    mat_.validate();
    if (!mat_.is_symmetric()) throw InvalidCocycle("matrix is not symmetric");
  }

  static Cocycle zero(std::size_t n, const FieldSpec& f) { return Cocycle(Matrix(n, n, f)); }

  /// delta(i,j): the form with value 1 on (e_i,e_j) and (e_j,e_i).
  static Cocycle delta(std::size_t n, std::size_t i, std::size_t j, const FieldSpec& f) {
    Matrix m(n, n, f);
    m.at(i, j) = Scalar::one(f);
    m.at(j, i) = Scalar::one(f);
    return Cocycle(std::move(m));
  }

  static Cocycle from_upper(std::size_t n, const Vector& coords, const FieldSpec& f) {
    if (coords.size() != upper_size(n)) throw DimensionMismatch("cocycle coordinates");
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = coords[upper_index(n, i, j)];
        m(j, i) = m(i, j);
      }
    return Cocycle(std::move(m));
  }

  Vector upper() const {
    std::size_t n = dim();
    Vector v(upper_size(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) v[upper_index(n, i, j)] = mat_(i, j);
    return v;
  }

  std::size_t dim() const { return mat_.rows(); }
  const FieldSpec& field() const { return mat_.field(); }
  const Matrix& matrix() const { return mat_; }
  bool is_zero() const { return mat_.is_zero(); }

  Scalar operator()(const Vector& x, const Vector& y) const {
    Vector t = mat_.apply(y);
    Scalar s = Scalar::zero(field());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) s += x[i] * t[i];
    return s;
  }

  friend Cocycle operator+(const Cocycle& a, const Cocycle& b) { return Cocycle(a.mat_ + b.mat_); }
  friend Cocycle operator*(const Scalar& c, const Cocycle& a) { return Cocycle(c * a.mat_); }
  friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.mat_ == b.mat_; }
  friend bool operator!=(const Cocycle& a, const Cocycle& b) { return !(a == b); }

  Cocycle reduce(const FieldSpec& target) const { return Cocycle(mat_.reduce(target)); }

  /// Text such as "d(a,c)+2*d(b,b)" using the given basis names.
  std::string str(const std::vector<std::string>& names) const {
    std::string out;
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const Scalar& c = mat_(i, j);
        if (c.is_zero()) continue;
        std::string s = c.str();
        bool neg = s[0] == '-';
        if (neg) s = s.substr(1);
        out += neg ? "-" : (out.empty() ? "" : "+");
        if (s != "1") out += s + "*";
        out += "d(" + names.at(i) + "," + names.at(j) + ")";
      }
    return out.empty() ? "0" : out;
  }

 private:
  Matrix mat_;
};

namespace detail {

/// Adds sign * theta(x, y) to an equation over upper coordinates.
inline void add_bilinear(Vector& row, std::size_t n, const Vector& x, const Vector& y, const Scalar& sign) {
  for (std::size_t p = 0; p < n; ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (y[q].is_zero()) continue;
      row[upper_index(n, p, q)] += sign * x[p] * y[q];
    }
  }
}

inline Subspace solve_equations(std::vector<Vector> rows, std::size_t vars, const FieldSpec& f) {
  if (rows.empty()) return Subspace::whole(vars, f);
  return Subspace::kernel(Matrix::from_rows(rows, vars, f));
}

}  // namespace detail

/// Z^2(J,K) in upper coordinates: forms with
/// t(a,d(bc)) + t(b,d(ac)) + t(c,d(ab)) = t(ab,cd) + t(bc,ad) + t(ac,bd).
inline Subspace cocycle_space(const Algebra& A) {
  const std::size_t n = A.dim();
  const FieldSpec& f = A.field();
  Scalar one = Scalar::one(f), minus = -one;
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i, f));
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        const Vector &ab = A.basis_product(a, b), &ac = A.basis_product(a, c), &bc = A.basis_product(b, c);
        for (std::size_t d = 0; d < n; ++d) {
          Vector row = zero_vector(upper_size(n), f);
          detail::add_bilinear(row, n, e[a], A.multiply(e[d], bc), one);
          detail::add_bilinear(row, n, e[b], A.multiply(e[d], ac), one);
          detail::add_bilinear(row, n, e[c], A.multiply(e[d], ab), one);
          detail::add_bilinear(row, n, ab, A.basis_product(c, d), minus);
          detail::add_bilinear(row, n, bc, A.basis_product(a, d), minus);
          detail::add_bilinear(row, n, ac, A.basis_product(b, d), minus);
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
  return detail::solve_equations(std::move(rows), upper_size(n), f);
}

/// B^2(J,K): forms (x,y) -> f(xy) for linear f.
inline Subspace coboundary_space(const Algebra& A) {
  const std::size_t n = A.dim();
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < n; ++k) {
    Vector v(upper_size(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) v[upper_index(n, i, j)] = A.constant(i, j, k);
    gens.push_back(std::move(v));
  }
  return Subspace::span(upper_size(n), A.field(), gens);
}

/// Forms with t(xy,z) = t(x,yz) on basis triples.
inline Subspace associative_form_space(const Algebra& A) {
  const std::size_t n = A.dim();
  const FieldSpec& f = A.field();
  Scalar one = Scalar::one(f), minus = -one;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(upper_size(n), f);
        detail::add_bilinear(row, n, A.basis_product(i, j), unit_vector(n, k, f), one);
        detail::add_bilinear(row, n, unit_vector(n, i, f), A.basis_product(j, k), minus);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  return detail::solve_equations(std::move(rows), upper_size(n), f);
}

/// Cocycle spaces together with explicit H^2 representatives.
struct CocycleSpaces {
  std::size_t n = 0;
  FieldSpec field;
  Subspace z2;
  Subspace b2;
  Subspace assoc;  ///< Cocycles that also satisfy the associativity constraint.
  std::vector<Cocycle> h2_reps;
  std::vector<Cocycle> h2_assoc_reps;

  std::size_t dim_h2() const { return z2.dim() - b2.dim(); }
  std::size_t dim_h2_assoc() const { return (assoc + b2).dim() - b2.dim(); }

  bool is_cocycle(const Cocycle& c) const { return z2.contains(c.upper()); }

  /// Coordinates of a cocycle on h2_reps, modulo coboundaries.
  Vector h2_coordinates(const Cocycle& c) const {
    std::vector<Vector> cols;
    for (const auto& r : h2_reps) cols.push_back(r.upper());
    for (const auto& b : b2.vectors()) cols.push_back(b);
    Matrix m = Matrix::from_columns(cols, upper_size(n), field);
    auto x = solve(m, c.upper());
    if (!x) throw InvalidCocycle("form is not a cocycle");
    return Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(h2_reps.size()));
  }
};

namespace detail {

/// Greedily extends base by rows of extra; returns the rows that were added.
inline std::vector<Vector> extend_basis(const Subspace& base, const Subspace& extra) {
  Subspace current = base;
  std::vector<Vector> added;
  for (const auto& v : extra.vectors()) {
    if (current.contains(v)) continue;
    added.push_back(v);
    current = current + Subspace::span(current.ambient_dim(), current.field(), {v});
  }
  return added;
}

}  // namespace detail

inline CocycleSpaces cocycle_spaces(const Algebra& A) {
  CocycleSpaces s;
  s.n = A.dim();
  s.field = A.field();
  s.z2 = cocycle_space(A);
  s.b2 = coboundary_space(A);
  s.assoc = s.z2.intersect(associative_form_space(A));
  for (auto& v : detail::extend_basis(s.b2, s.z2)) s.h2_reps.push_back(Cocycle::from_upper(s.n, v, s.field));
  for (auto& v : detail::extend_basis(s.b2, s.assoc))
    s.h2_assoc_reps.push_back(Cocycle::from_upper(s.n, v, s.field));
  return s;
}

/// Joint radical {x : t(x, J) = 0 for every t}.
inline Subspace radical(const std::vector<Cocycle>& cocycles, std::size_t n, const FieldSpec& f) {
  Subspace rad = Subspace::whole(n, f);
  for (const auto& c : cocycles) {
    if (c.dim() != n) throw DimensionMismatch("cocycles over different algebras");
    require_same_field(c.field(), f);
    rad = rad.intersect(Subspace::kernel(c.matrix()));
  }
  return rad;
}

inline Subspace radical(const Cocycle& c) { return radical({c}, c.dim(), c.field()); }

/// (phi . t)(x,y) = t(phi x, phi y), with phi given by images in its columns.
inline Cocycle act(const Matrix& phi, const Cocycle& t) {
  if (phi.rows() != t.dim() || !phi.is_square()) throw DimensionMismatch("automorphism size");
  require_same_field(phi.field(), t.field());
  if (determinant(phi).is_zero()) throw SingularMatrix("automorphism must be invertible");
  return Cocycle(phi.transpose() * t.matrix() * phi);
}

inline bool is_homomorphism_matrix(const Algebra& A, const Algebra& B, const Matrix& phi) {
  if (phi.rows() != B.dim() || phi.cols() != A.dim()) return false;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i; j < A.dim(); ++j)
      if (phi.apply(A.basis_product(i, j)) != B.multiply(phi.column(i), phi.column(j))) return false;
  return true;
}

inline bool is_automorphism(const Algebra& A, const Matrix& phi) {
  if (!phi.is_square() || phi.rows() != A.dim() || phi.field() != A.field()) return false;
  if (determinant(phi).is_zero()) return false;
  return is_homomorphism_matrix(A, A, phi);
}

namespace detail {

/// Evaluation matrix (rows: form k, basis j; columns: basis of Z) of z -> t_k(z, e_j).
inline Matrix center_pairing(const std::vector<Cocycle>& forms, const std::vector<Scalar>& coeffs,
                             const std::vector<Vector>& zbasis, std::size_t n, const FieldSpec& f) {
  std::size_t blocks = coeffs.empty() ? forms.size() : 1;
  Matrix m(blocks * n, zbasis.size(), f);
  for (std::size_t c = 0; c < zbasis.size(); ++c) {
    if (coeffs.empty()) {
      for (std::size_t k = 0; k < forms.size(); ++k) {
        Vector t = forms[k].matrix().apply(zbasis[c]);
        for (std::size_t j = 0; j < n; ++j) m(k * n + j, c) = t[j];
      }
    } else {
      Vector acc = zero_vector(n, f);
      for (std::size_t k = 0; k < forms.size(); ++k)
        if (!coeffs[k].is_zero()) axpy(acc, coeffs[k], forms[k].matrix().apply(zbasis[c]));
      for (std::size_t j = 0; j < n; ++j) m(j, c) = acc[j];
    }
  }
  return m;
}

}  // namespace detail

/// A cocycle whose radical meets Ann(J) trivially, if one exists.
/// Coboundaries vanish on Ann(J), so only H^2 representatives matter; the
/// coefficient search over {0,...,4} is complete while dim Ann(J) <= 4.
inline std::optional<Cocycle> nontrivial_1dim_witness(const Algebra& A) {
  const std::size_t n = A.dim();
  const FieldSpec& f = A.field();
  Subspace z = annihilator(A);
  auto zb = z.vectors();
  if (zb.empty()) return Cocycle::zero(n, f);
  CocycleSpaces s = cocycle_spaces(A);
  const auto& reps = s.h2_reps;
  if (reps.empty()) return std::nullopt;
  if (rank(detail::center_pairing(reps, {}, zb, n, f)) < zb.size()) return std::nullopt;
  const std::size_t h = reps.size();
  std::vector<long> coeff(h, 0);
  auto test = [&]() -> std::optional<Cocycle> {
    std::vector<Scalar> c(h);
    for (std::size_t k = 0; k < h; ++k) c[k] = Scalar::from_int(coeff[k], f);
    if (rank(detail::center_pairing(reps, c, zb, n, f)) < zb.size()) return std::nullopt;
    Cocycle t = Cocycle::zero(n, f);
    for (std::size_t k = 0; k < h; ++k)
      if (coeff[k]) t = t + c[k] * reps[k];
    return t;
  };
  // Enumerate supports by increasing weight, then nonzero values 1..4.
  for (std::size_t weight = 1; weight <= h; ++weight) {
    std::vector<std::size_t> support(weight);
    for (std::size_t i = 0; i < weight; ++i) support[i] = i;
    while (true) {
      std::vector<long> values(weight, 1);
      while (true) {
        std::fill(coeff.begin(), coeff.end(), 0);
        for (std::size_t i = 0; i < weight; ++i) coeff[support[i]] = values[i];
        if (auto t = test()) return t;
        std::size_t pos = 0;
        while (pos < weight && values[pos] == 4) values[pos++] = 1;
        if (pos == weight) break;
        ++values[pos];
      }
      std::size_t i = weight;
      while (i > 0 && support[i - 1] == h - weight + i - 1) --i;
      if (i == 0) break;
      ++support[i - 1];
      for (std::size_t k = i; k < weight; ++k) support[k] = support[k - 1] + 1;
    }
  }
  return std::nullopt;
}

/// Whether J admits a one-dimensional central extension with no central
/// component, i.e. some cocycle with radical meeting Ann(J) trivially.
inline bool has_nontrivial_1dim_extension(const Algebra& A) { return nontrivial_1dim_witness(A).has_value(); }

/// Parses "2*d(b,d)+d(c,c)" (basis names or 1-based indices; ',' also separates terms).
inline Cocycle parse_cocycle(const std::string& text, const Algebra& A) {
  const std::size_t n = A.dim();
  const FieldSpec& f = A.field();
  Matrix m(n, n, f);
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "0") return Cocycle(m);
  auto basis_ref = [&](const std::string& s) -> std::size_t {
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
      std::size_t idx = std::stoul(s);
      if (idx == 0 || idx > n) throw ParseError("basis index " + s + " out of range");
      return idx - 1;
    }
    return A.index_of(s);
  };
  std::size_t pos = 0;
  bool first = true;
  while (pos < t.size()) {
    Scalar sign = Scalar::one(f);
    if (t[pos] == '+' || t[pos] == '-' || t[pos] == ',') {
      if (t[pos] == '-') sign = -sign;
      ++pos;
    } else if (!first) {
      throw ParseError("expected separator in '" + text + "'");
    }
    first = false;
    auto d = t.find("d(", pos);
    if (d == std::string::npos) throw ParseError("expected d(i,j) in '" + text + "'");
    std::string coeff = t.substr(pos, d - pos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    Scalar c = coeff.empty() ? sign : sign * Scalar::parse(coeff, f);
    auto close = t.find(')', d);
    auto comma = t.find(',', d);
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      throw ParseError("malformed term in '" + text + "'");
    std::size_t i = basis_ref(t.substr(d + 2, comma - d - 2));
    std::size_t j = basis_ref(t.substr(comma + 1, close - comma - 1));
    m(i, j) += c;
    if (i != j) m(j, i) += c;
    pos = close + 1;
  }
  return Cocycle(m);
}

}  // namespace jordan

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jordan/scalar.hpp"

namespace jordan {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n, const FieldSpec& f) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(std::size_t n, std::size_t i, const FieldSpec& f) {
  Vector v = zero_vector(n, f);
  v.at(i) = Scalar::one(f);
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

inline Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector scale(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

/// a + c*b in place.
inline void axpy(Vector& a, const Scalar& c, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

inline Vector reduce_vector(const Vector& v, const FieldSpec& target) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].field() == target)
      r[i] = v[i];
    else if (v[i].is_rational())
      r[i] = Scalar::from_rational(v[i].rational(), target);
    else
      throw FieldMismatch("cannot move " + v[i].field().str() + " to " + target.str());
  }
  return r;
}

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(std::size_t n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, const FieldSpec& f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    m.validate();
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows, const FieldSpec& f) {
    return from_rows(columns, rows, f).transpose();
  }

  /// Parses rows of scalar strings.
  static Matrix parse(const std::vector<std::vector<std::string>>& rows, const FieldSpec& f) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), cols, f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::parse(rows[r][c], f);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Scalar& at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("index out of range");
    return (*this)(r, c);
  }
  const Scalar& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("index out of range");
    return (*this)(r, c);
  }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  /// Throws FieldMismatch when an entry lives in another field.
  void validate() const {
    for (const auto& s : data_)
      if (s.field() != field_) throw FieldMismatch("entry " + s.str() + " in " + s.field().str() + " inside " + field_.str() + " matrix");
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& s : data_)
      if (!s.is_zero()) return false;
    return true;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
    Vector out = zero_vector(rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    require_same_field(a.field_, b.field_);
    Matrix m(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
      }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
  }

  friend Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix m = a;
    for (auto& s : m.data_) s *= c;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (a.data_[i] != b.data_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix reduce(const FieldSpec& target) const {
    Matrix m(rows_, cols_, target);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      const Scalar& s = data_[i];
      m.data_[i] = s.field() == target ? s : Scalar::from_rational(s.rational(), target);
    }
    return m;
  }

  std::string str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      out += "[";
      for (std::size_t c = 0; c < cols_; ++c) out += (c ? ", " : "") + (*this)(r, c).str();
      out += "]\n";
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with pivot columns.
inline RrefResult rref(const Matrix& input) {
  input.validate();
  Matrix m = input;
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  Matrix trimmed(row, m.cols(), m.field());
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) trimmed(r, c) = m(r, c);
  out.reduced = std::move(trimmed);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vector> nullspace_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols(), m.field());
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m x = b, or nullopt when inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols(), m.field());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
  return x;
}

inline Scalar determinant(const Matrix& input) {
  if (!input.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  input.validate();
  Matrix m = input;
  std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(m.field());
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

inline Matrix require_inverse(const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) throw SingularMatrix("matrix is not invertible");
  return *inv;
}

}  // namespace jordan

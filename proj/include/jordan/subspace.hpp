#pragma once

#include <vector>

#include "jordan/matrix.hpp"

namespace jordan {

/// Subspace of K^n stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  Subspace(std::size_t ambient, const FieldSpec& f) : ambient_(ambient), basis_(0, ambient, f) {}

  static Subspace span(std::size_t ambient, const FieldSpec& f, const std::vector<Vector>& vectors) {
    Subspace s(ambient, f);
    if (vectors.empty()) return s;
    s.basis_ = rref(Matrix::from_rows(vectors, ambient, f)).reduced;
    return s;
  }

  static Subspace row_space(const Matrix& m) {
    Subspace s(m.cols(), m.field());
    s.basis_ = rref(m).reduced;
    return s;
  }

  static Subspace whole(std::size_t n, const FieldSpec& f) { return row_space(Matrix::identity(n, f)); }

  static Subspace kernel(const Matrix& m) { return span(m.cols(), m.field(), nullspace_basis(m)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const FieldSpec& field() const { return basis_.field(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }

  /// Leading columns of the echelon basis.
  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r)
      for (std::size_t c = 0; c < ambient_; ++c)
        if (!basis_(r, c).is_zero()) {
          out.push_back(c);
          break;
        }
    return out;
  }

  /// Non-pivot columns: the standard basis vectors there span a complement.
  std::vector<std::size_t> complement_indices() const {
    std::vector<bool> pivot(ambient_, false);
    for (auto p : pivots()) pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!pivot[c]) out.push_back(c);
    return out;
  }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector not in ambient space");
    Vector rest = v;
    std::size_t r = 0;
    for (auto p : pivots()) {
      if (!rest[p].is_zero()) axpy(rest, -rest[p], basis_.row(r));
      ++r;
    }
    return jordan::is_zero(rest);
  }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    for (const auto& v : other.vectors())
      if (!contains(v)) return false;
    return true;
  }

  Subspace operator+(const Subspace& other) const {
    check_compatible(other);
    auto vs = vectors();
    for (auto& v : other.vectors()) vs.push_back(v);
    return span(ambient_, field(), vs);
  }

  /// Vectors x with <b, x> = 0 for every basis vector b.
  Subspace orthogonal() const {
    if (is_zero()) return whole(ambient_, field());
    return kernel(basis_);
  }

  Subspace intersect(const Subspace& other) const {
    check_compatible(other);
    if (is_zero() || other.is_zero()) return Subspace(ambient_, field());
    Subspace a = orthogonal(), b = other.orthogonal();
    return (a + b).orthogonal();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  Subspace reduce(const FieldSpec& target) const {
    return span(ambient_, target, basis_.reduce(target).row_vectors());
  }

 private:
  void check_compatible(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
    require_same_field(field(), other.field());
  }

  std::size_t ambient_ = 0;
  Matrix basis_;
};

}  // namespace jordan

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "jordan/matrix.hpp"

namespace jordan {

/// Output of the 3x3 normal-form lemma for a nonzero row vector alpha.
struct LemmaResult {
  std::string case_label;
  Matrix A;
  Scalar c;       ///< Entry of the antidiagonal product.
  Vector alphaA;  ///< Either [1,0,0] or [0,0,1].
};

namespace detail {

/// P(A) = [[a23,a13,a33],[a22,a12,a32],[a21,a11,a31]] (1-based a_ij).
inline Matrix lemma_permuted(const Matrix& A) {
  Matrix P(3, 3, A.field());
  P(0, 0) = A(1, 2);
  P(0, 1) = A(0, 2);
  P(0, 2) = A(2, 2);
  P(1, 0) = A(1, 1);
  P(1, 1) = A(0, 1);
  P(1, 2) = A(2, 1);
  P(2, 0) = A(1, 0);
  P(2, 1) = A(0, 0);
  P(2, 2) = A(2, 0);
  return P;
}

}  // namespace detail

/// Re-checks the three postconditions; returns c on success.
inline std::optional<Scalar> lemma_postconditions(const Vector& alpha, const Matrix& A, Vector* alphaA = nullptr) {
  const FieldSpec& f = A.field();
  if (determinant(A).is_zero()) return std::nullopt;
  Matrix prod = detail::lemma_permuted(A) * A;
  Scalar c = prod(0, 2);
  if (c.is_zero()) return std::nullopt;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 3; ++k) {
      bool slot = (r == 0 && k == 2) || (r == 1 && k == 0) || (r == 2 && k == 1);
      if (slot ? prod(r, k) != c : !prod(r, k).is_zero()) return std::nullopt;
    }
  Vector row = A.transpose().apply(alpha);
  Vector e1 = unit_vector(3, 0, f), e3 = unit_vector(3, 2, f);
  if (row != e1 && row != e3) return std::nullopt;
  if (alphaA) *alphaA = row;
  return c;
}

/// Matrix from the proof of the lemma, case by case; postconditions are
/// verified before returning.
inline LemmaResult lemma_a_matrix(const Vector& alpha, const FieldSpec& f) {
  if (alpha.size() != 3) throw DimensionMismatch("alpha must have three entries");
  Vector a = reduce_vector(alpha, f);
  const Scalar &a1 = a[0], &a2 = a[1], &a3 = a[2];
  Scalar zero = Scalar::zero(f), one = Scalar::one(f), two = Scalar::from_int(2, f);
  if (a1.is_zero() && a2.is_zero() && a3.is_zero()) throw Error("alpha must be nonzero");
  auto root = [&](const Scalar& x, const std::string& radicand) {
    auto r = nth_root(x, 2);
    if (!r) throw RootNotInField("sqrt(" + radicand + ") with " + radicand + " = " + x.str() + " in " + f.str());
    return *r;
  };
  auto make = [&](std::initializer_list<Scalar> v) {
    Matrix m(3, 3, f);
    std::size_t i = 0;
    for (const auto& s : v) {
      m(i / 3, i % 3) = s;
      ++i;
    }
    return m;
  };
  LemmaResult res;
  if (a3.is_zero()) {
    if (a2.is_zero()) {
      res.case_label = "1.1";
      res.A = make({one / a1, zero, zero, zero, a1, zero, zero, zero, one});
    } else if (a1.is_zero()) {
      res.case_label = "1.2";
      res.A = make({zero, a2, zero, one / a2, zero, zero, zero, zero, one});
    } else {
      res.case_label = "1.3";
      Scalar s = root(one / (Scalar::from_int(8, f) * a1 * a2), "1/(8*a1*a2)");
      res.A = make({-s * a2 / a1, s, one / (two * a1), s, -s * a1 / a2, one / (two * a2), one / (two * a1),
                    one / (two * a2), zero});
    }
  } else {
    if (a1.is_zero() && a2.is_zero())
      throw CaseNotCovered("alpha = (0,0," + a3.str() + "): no case of the lemma applies to a pure third coordinate");
    if (a2.is_zero()) {
      res.case_label = "2.1";
      res.A = make({zero, -a3 / a1, zero, -a1 / a3.pow(3), a1 / (two * a3), a1 / a3.pow(2), zero, one, one / a3});
    } else if (a1.is_zero()) {
      res.case_label = "2.2";
      res.A = make({-a2 / a3.pow(3), a2 / (two * a3), a2 / a3.pow(2), zero, -a3 / a2, zero, zero, one, one / a3});
    } else {
      Scalar D = two * a1 * a2 + a3 * a3;
      if (!D.is_zero()) {
        res.case_label = "2.3";
        Scalar r = root(a1 * a2, "a1*a2");
        Scalar q = root(D, "2*a1*a2+a3^2");
        res.A = make({r * (-q - a3) / (two * a1 * D), r * (q - a3) / (two * a1 * D), a2 / D,
                      r * (q - a3) / (two * a2 * D), r * (-q - a3) / (two * a2 * D), a1 / D, r / D, r / D, a3 / D});
      } else {
        res.case_label = "2.4";
        Scalar four = Scalar::from_int(4, f);
        res.A = make({one / (four * a1), -a3 * a3 / (two * a1), -a3 / (two * a1), one / (four * a2),
                      -a3 * a3 / (two * a2), a3 / (two * a2), one / (two * a3), a3, zero});
      }
    }
  }
  auto c = lemma_postconditions(a, res.A, &res.alphaA);
  if (!c) throw std::logic_error("lemma case " + res.case_label + " failed its postconditions");
  res.c = *c;
  return res;
}

}  // namespace jordan

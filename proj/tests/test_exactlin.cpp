#include <gtest/gtest.h>

#include "jordan/subspace.hpp"

using namespace jordan;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n, long d = 1) { return Scalar::from_rational(mpq_class(n, d), Q); }

Matrix mat(std::vector<std::vector<std::string>> rows, const FieldSpec& f = Q) { return Matrix::parse(rows, f); }

}  // namespace

TEST(Field, ParseAndValidate) {
  EXPECT_TRUE(FieldSpec::parse("Q").is_rational());
  EXPECT_EQ(FieldSpec::parse("p:7").characteristic(), 7u);
  EXPECT_EQ(FieldSpec::parse("11").characteristic(), 11u);
  EXPECT_THROW(FieldSpec::prime(3), InvalidField);
  EXPECT_THROW(FieldSpec::prime(2), InvalidField);
  EXPECT_THROW(FieldSpec::prime(9), InvalidField);
  EXPECT_THROW(FieldSpec::parse("p:x"), InvalidField);
}

TEST(Scalar, RationalArithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(2, 3) * q(3, 4), q(1, 2));
  EXPECT_EQ(q(1, 2) / q(1, 4), q(2));
  EXPECT_EQ(q(-2).pow(3), q(-8));
  EXPECT_EQ(Scalar::parse("-3/6", Q), q(-1, 2));
  EXPECT_THROW((void)(q(1) / q(0)), DivisionByZero);
  EXPECT_THROW(Scalar::parse("1/0", Q), Error);
  EXPECT_THROW(Scalar::parse("abc", Q), ParseError);
}

TEST(Scalar, PrimeFieldArithmetic) {
  FieldSpec f = FieldSpec::prime(7);
  Scalar half = Scalar::parse("1/2", f);
  EXPECT_EQ(half.residue_value(), 4u);
  EXPECT_EQ((half + half), Scalar::one(f));
  EXPECT_EQ(Scalar::from_int(-1, f).residue_value(), 6u);
  EXPECT_EQ(Scalar::from_int(3, f).inverse().residue_value(), 5u);
  EXPECT_THROW(Scalar::parse("1/7", f), FieldReductionError);
}

TEST(Scalar, MixedFieldsAreRejected) {
  FieldSpec f = FieldSpec::prime(5);
  EXPECT_THROW((void)(q(1) + Scalar::one(f)), FieldMismatch);
}

TEST(Scalar, Roots) {
  auto r = nth_root(q(9, 4), 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, q(9, 4));
  EXPECT_FALSE(nth_root(q(2), 2));
  FieldSpec f = FieldSpec::prime(5);
  auto s = nth_root(Scalar::from_int(-1, f), 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s * *s, Scalar::from_int(-1, f));
  EXPECT_FALSE(nth_root(Scalar::from_int(2, f), 2));
}

TEST(Matrix, RankDeterminantInverse) {
  Matrix m = mat({{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "9"}});
  EXPECT_EQ(rank(m), 2u);
  EXPECT_TRUE(determinant(m).is_zero());
  EXPECT_FALSE(inverse(m));
  Matrix a = mat({{"2", "1", "0"}, {"0", "1", "0"}, {"1", "0", "3"}});
  EXPECT_EQ(determinant(a), q(6));
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix::identity(3, Q));
  EXPECT_THROW(require_inverse(m), SingularMatrix);
}

TEST(Matrix, NullspaceAndSolve) {
  Matrix m = mat({{"1", "1", "0"}, {"0", "1", "1"}});
  auto ker = nullspace_basis(m);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(is_zero(m.apply(ker[0])));
  Vector b{q(2), q(3)};
  auto x = solve(m, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(m.apply(*x), b);
  Matrix z = mat({{"1", "1"}, {"1", "1"}});
  EXPECT_FALSE(solve(z, Vector{q(1), q(2)}));
}

TEST(Matrix, ShapeErrors) {
  Matrix a(2, 3, Q), b(2, 3, Q);
  EXPECT_THROW((void)(a * b), DimensionMismatch);
  EXPECT_THROW((void)determinant(a), DimensionMismatch);
}

TEST(Matrix, PrimeFieldDeterminant) {
  FieldSpec f = FieldSpec::prime(5);
  Matrix m = mat({{"1", "2"}, {"3", "4"}}, f);
  EXPECT_EQ(determinant(m), Scalar::from_int(-2, f));
}

TEST(Subspace, CanonicalBasis) {
  Subspace u = Subspace::span(3, Q, {{q(1), q(1), q(0)}, {q(2), q(2), q(0)}, {q(0), q(1), q(1)}});
  Subspace v = Subspace::span(3, Q, {{q(1), q(0), q(-1)}, {q(1), q(2), q(1)}});
  EXPECT_EQ(u.dim(), 2u);
  EXPECT_TRUE(u == v);
  EXPECT_EQ(u.basis(), v.basis());
}

TEST(Subspace, SumIntersectionContainment) {
  Subspace xy = Subspace::span(3, Q, {unit_vector(3, 0, Q), unit_vector(3, 1, Q)});
  Subspace yz = Subspace::span(3, Q, {unit_vector(3, 1, Q), unit_vector(3, 2, Q)});
  EXPECT_EQ((xy + yz).dim(), 3u);
  Subspace y = xy.intersect(yz);
  EXPECT_EQ(y.dim(), 1u);
  EXPECT_TRUE(y.contains(unit_vector(3, 1, Q)));
  EXPECT_TRUE(xy.contains(y));
  EXPECT_FALSE(xy.contains(yz));
  EXPECT_EQ(xy.dim() + yz.dim(), (xy + yz).dim() + y.dim());
}

TEST(Subspace, ComplementIndices) {
  Subspace s = Subspace::span(4, Q, {{q(0), q(1), q(1), q(0)}});
  auto comp = s.complement_indices();
  EXPECT_EQ(comp.size(), 3u);
  EXPECT_EQ(s.pivots(), std::vector<std::size_t>{1});
}

#include <gtest/gtest.h>

#include <random>

#include "jordan/catalog.hpp"
#include "oracle.hpp"

using namespace jordan;
using jordan::detail::basis_vec;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Algebra build(std::size_t n, std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> entries,
              const FieldSpec& f = Q) {
  std::vector<Product> prods;
  for (auto [i, j, k, c] : entries) {
    auto it = std::find_if(prods.begin(), prods.end(), [&](const Product& p) { return p.i == i && p.j == j; });
    if (it == prods.end()) {
      prods.push_back({i, j, {}});
      it = prods.end() - 1;
    }
    it->terms.push_back({k, Scalar::from_int(c, f)});
  }
  return Algebra("test", n, f, default_basis_names(n), prods);
}

Algebra zero(std::size_t n) { return build(n, {}); }

Subspace span_of(const Algebra& A, std::vector<std::string> names) {
  std::vector<Vector> vs;
  for (const auto& s : names) vs.push_back(basis_vec(A, A.index_of(s)));
  return Subspace::span(A.dim(), A.field(), vs);
}

}  // namespace

TEST(Algebra, CatalogProducts) {
  Algebra j46 = instantiate("J4,6");
  EXPECT_EQ(j46.multiply(basis_vec(j46, 0), basis_vec(j46, 0)), basis_vec(j46, 1));
  EXPECT_TRUE(is_zero(j46.multiply(basis_vec(j46, 0), basis_vec(j46, 3))));
  Algebra j523 = instantiate("J5,23");
  EXPECT_EQ(j523.multiply(basis_vec(j523, 2), basis_vec(j523, 3)), basis_vec(j523, 4));
}

TEST(Algebra, StructureErrors) {
  auto one = Scalar::one(Q);
  EXPECT_THROW(Algebra("x", 2, Q, {}, {{1, 0, {{1, one}}}}), StructureError);
  EXPECT_THROW(Algebra("x", 2, Q, {}, {{0, 0, {{1, one}}}, {0, 0, {{0, one}}}}), StructureError);
  EXPECT_THROW(Algebra("x", 2, Q, {}, {{0, 2, {{1, one}}}}), StructureError);
  EXPECT_THROW(Algebra("x", 2, Q, {}, {{0, 0, {{1, one}, {1, one}}}}), StructureError);
  EXPECT_THROW(Algebra("x", 2, Q, {"a", "a"}, {}), StructureError);
}

TEST(Algebra, JordanIdentityAgreesWithOracle) {
  Algebra j46 = instantiate("J4,6");
  EXPECT_TRUE(jordan_identity_holds(j46));
  EXPECT_TRUE(jordan_identity_holds(instantiate("J5,44", {{"alpha", Scalar::from_int(2, Q)}})));
  // a^2 = b, ab = a: at x = a, (x^2 x) x = a while x^2 (x x) = a + ... differs.
  Algebra bad = build(2, {{0, 0, 1, 1}, {0, 1, 0, 1}});
  EXPECT_FALSE(oracle::jordan_random(oracle::table_of(bad)));
  EXPECT_FALSE(jordan_identity_holds(bad));
  // a^2 = a, ab = b, b^2 = a.
  Algebra two = build(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}});
  EXPECT_EQ(jordan_identity_holds(two), oracle::jordan_random(oracle::table_of(two)));
}

TEST(Algebra, EveryCatalogEntryAgreesWithOracle) {
  for (const auto& e : catalog())
    for (const auto& b : sample_bindings(e)) {
      Algebra A = instantiate(e.name, b);
      auto t = oracle::table_of(A);
      EXPECT_TRUE(oracle::commutative(t)) << A.name();
      EXPECT_EQ(jordan_identity_holds(A), oracle::jordan_random(t)) << A.name();
      EXPECT_EQ(is_associative(A), oracle::associative(t)) << A.name();
      EXPECT_EQ(annihilator(A).dim(), oracle::annihilator_dim(t)) << A.name();
    }
}

TEST(Algebra, Associativity) {
  EXPECT_FALSE(is_associative(instantiate("J4,6")));
  EXPECT_TRUE(is_associative(instantiate("J3,4")));
  EXPECT_TRUE(is_associative(zero(3)));
}

TEST(Algebra, PowerFiltration) {
  Algebra j22 = instantiate("J2,2");
  auto p = power_filtration(j22);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].dim(), 2u);
  EXPECT_TRUE(p[1] == span_of(j22, {"b"}));
  EXPECT_TRUE(p[2].is_zero());
  EXPECT_EQ(nilpotency_index(j22), 3u);
  EXPECT_EQ(nilpotency_index(zero(4)), 2u);
  Algebra j52 = instantiate("J5,2");
  EXPECT_TRUE(power_filtration(j52)[1] == span_of(j52, {"b", "d", "e"}));
}

TEST(Algebra, NonNilpotentIsDetected) {
  Algebra idem = build(1, {{0, 0, 0, 1}});
  EXPECT_EQ(nilpotency_index(idem), 0u);
}

TEST(Algebra, Annihilator) {
  Algebra j46 = instantiate("J4,6");
  EXPECT_TRUE(annihilator(j46) == span_of(j46, {"d"}));
  Algebra j412 = instantiate("J4,12");
  EXPECT_TRUE(annihilator(j412) == span_of(j412, {"c", "d"}));
  EXPECT_TRUE(annihilator(zero(3)).is_whole());
  for (const auto& in : sampled_instances(5)) EXPECT_FALSE(annihilator(in.algebra).is_zero()) << in.label;
}

TEST(Algebra, Derivations) {
  EXPECT_EQ(derivation_algebra(zero(3)).dim(), 9u);
  EXPECT_EQ(derivation_algebra(instantiate("J2,2")).dim(), 2u);
  // D(e_i e_j) = D(e_i) e_j + e_i D(e_j), written out coordinate by coordinate.
  Algebra j46 = instantiate("J4,6");
  std::size_t n = 4;
  std::vector<oracle::Vec> rows;
  auto t = oracle::table_of(j46);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        oracle::Vec r(n * n, 0);
        // D e_m = sum_l D[l][m] e_l stored at l*n+m.
        for (std::size_t m = 0; m < n; ++m) {
          if (t.c[i][j][m] != 0) r[k * n + m] += t.c[i][j][m];
          r[m * n + i] -= t.c[m][j][k];
          r[m * n + j] -= t.c[i][m][k];
        }
        rows.push_back(r);
      }
  EXPECT_EQ(derivation_algebra(j46).dim(), n * n - oracle::rank(rows));
}

TEST(Algebra, InvariantVectors) {
  InvariantVector z = invariant_vector(zero(4));
  EXPECT_EQ(z.power_dims, std::vector<std::size_t>{0});
  EXPECT_EQ(z.nil_index, 2u);
  EXPECT_EQ(z.ann_dim, 4u);
  EXPECT_EQ(z.ann_meet_square_dim, 0u);
  EXPECT_EQ(z.der_dim, 16u);
  EXPECT_TRUE(z.associative);
  InvariantVector v = invariant_vector(instantiate("J2,2"));
  EXPECT_EQ(v.power_dims, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(v.nil_index, 3u);
  EXPECT_EQ(v.ann_dim, 1u);
  EXPECT_EQ(v.ann_meet_square_dim, 1u);
  EXPECT_EQ(v.der_dim, 2u);
  EXPECT_NE(invariant_vector(instantiate("J5,2")).power_dims, invariant_vector(instantiate("J5,4")).power_dims);
}

TEST(Algebra, InvariantsSurviveBaseChange) {
  FieldSpec f = FieldSpec::prime(5);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(0, 4);
  for (const char* name : {"J4,6", "J4,12", "J5,17[alpha=2]", "J5,30[alpha=1,beta=2]"}) {
    Algebra A = instantiate_reference(name, f);
    for (int trial = 0; trial < 5; ++trial) {
      Matrix P(A.dim(), A.dim(), f);
      do {
        for (std::size_t r = 0; r < A.dim(); ++r)
          for (std::size_t c = 0; c < A.dim(); ++c) P(r, c) = Scalar::from_int(d(rng), f);
      } while (determinant(P).is_zero());
      EXPECT_EQ(invariant_vector(change_basis(A, P)), invariant_vector(A)) << name;
    }
  }
}

TEST(Algebra, DirectSums) {
  EXPECT_TRUE(direct_sum(instantiate("J4,8"), instantiate("J1,1")).same_structure(instantiate("J5,4")));
  EXPECT_TRUE(direct_sum(instantiate("J4,6"), instantiate("J1,1")).same_structure(instantiate("J5,1")));
  EXPECT_TRUE(direct_sum(zero(2), zero(3)).same_structure(zero(5)));
  for (const char* name : {"J3,4", "J4,6", "J4,12"}) {
    Algebra A = instantiate(name);
    EXPECT_EQ(is_associative(direct_sum(A, zero(1))), is_associative(A)) << name;
  }
}

TEST(Algebra, MultiplicationIsCommutative) {
  std::mt19937_64 rng(3);
  for (const auto& in : sampled_instances(5)) {
    const Algebra& A = in.algebra;
    Vector x, y;
    for (std::size_t i = 0; i < A.dim(); ++i) {
      x.push_back(Scalar::from_int(static_cast<long>(rng() % 7) - 3, Q));
      y.push_back(Scalar::from_int(static_cast<long>(rng() % 7) - 3, Q));
    }
    EXPECT_EQ(A.multiply(x, y), A.multiply(y, x)) << in.label;
  }
}

#include <gtest/gtest.h>

#include "jordan/catalog.hpp"
#include "jordan/isomorphism.hpp"
#include "oracle.hpp"

using namespace jordan;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Cocycle cocycle(const Algebra& A, const std::string& text) { return parse_cocycle(text, A); }

ExtensionSpec spec_of(const std::string& base, std::vector<std::string> cocycles) {
  ExtensionSpec s;
  s.base = instantiate(base);
  for (const auto& c : cocycles) s.cocycles.push_back(cocycle(s.base, c));
  return s;
}

}  // namespace

TEST(Extension, BuildsTheListedAlgebras) {
  Algebra j531 = central_extend(spec_of("J3,2", {"d(b,c)", "d(a,b)"}));
  EXPECT_TRUE(j531.same_structure(instantiate("J5,31")));
  EXPECT_EQ(j531.basis_names(), (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  Algebra j22 = central_extend(spec_of("J1,1", {"d(a,a)"}));
  EXPECT_TRUE(j22.same_structure(instantiate("J2,2")));
}

TEST(Extension, EmptyCocycleListIsIdentity) {
  Algebra A = instantiate("J4,6");
  EXPECT_TRUE(central_extend({A, {}, {}, {}}).same_structure(A));
}

TEST(Extension, RejectsNonCocycles) {
  // d(b,d) on J4,6 is printed as a cocycle but the extension is not Jordan.
  ExtensionSpec s = spec_of("J4,6", {});
  s.cocycles.push_back(cocycle(s.base, "d(b,d)"));
  EXPECT_THROW(central_extend(s), InvalidCocycle);
  EXPECT_FALSE(oracle::jordan_random(oracle::table_of(instantiate("J5,2"))));
  EXPECT_FALSE(oracle::jordan_random(oracle::table_of(instantiate("J5,3"))));
}

TEST(Extension, ExtensionsByCocyclesAreJordan) {
  for (std::size_t d = 1; d <= 4; ++d)
    for (const auto* e : entries_of_dim(d)) {
      Algebra A = instantiate(e->name);
      CocycleSpaces cs = cocycle_spaces(A);
      for (const auto& v : cs.z2.vectors()) {
        Algebra M = central_extend({A, {Cocycle::from_upper(A.dim(), v, Q)}, {}, {}});
        EXPECT_TRUE(oracle::jordan_random(oracle::table_of(M))) << M.name();
      }
    }
}

TEST(Extension, AssociativityCriterion) {
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto* e : entries_of_dim(d)) {
      Algebra A = instantiate(e->name);
      CocycleSpaces cs = cocycle_spaces(A);
      for (const auto& v : cs.z2.vectors()) {
        Cocycle c = Cocycle::from_upper(A.dim(), v, Q);
        bool expected = is_associative(A) && cs.assoc.contains(v);
        EXPECT_EQ(is_associative(central_extend({A, {c}, {}, {}})), expected) << A.name() << " " << c.str(A.basis_names());
      }
    }
}

TEST(Extension, Diagnostics) {
  ExtensionDiagnostics d = diagnose(spec_of("J3,2", {"d(b,c)", "d(a,b)"}));
  EXPECT_TRUE(d.radical_condition);
  EXPECT_TRUE(d.independent_mod_b2);
  EXPECT_FALSE(d.has_central_component);
  ExtensionDiagnostics z = diagnose({instantiate("J4,6"), {Cocycle::zero(4, Q)}, {}, {}});
  EXPECT_FALSE(z.independent_mod_b2);
  EXPECT_TRUE(z.has_central_component);
  ExtensionDiagnostics rep = diagnose(spec_of("J3,2", {"d(b,c)", "d(b,c)"}));
  EXPECT_FALSE(rep.independent_mod_b2);
  EXPECT_TRUE(rep.has_central_component);
}

TEST(Extension, CentralComponentMatchesDependence) {
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto* e : entries_of_dim(d)) {
      Algebra A = instantiate(e->name);
      CocycleSpaces cs = cocycle_spaces(A);
      for (const auto& c : cs.h2_reps) {
        ExtensionDiagnostics diag = diagnose({A, {c}, {}, {}});
        if (diag.radical_condition) EXPECT_EQ(diag.has_central_component, !diag.independent_mod_b2) << A.name();
      }
      if (!cs.b2.is_zero()) {
        Cocycle b = Cocycle::from_upper(A.dim(), cs.b2.vectors()[0], Q);
        EXPECT_TRUE(diagnose({A, {b}, {}, {}}).has_central_component) << A.name();
      }
    }
}

TEST(Extension, ZeroCocycleSplitsOff) {
  Algebra A = instantiate("J3,2");
  Algebra with_zero = central_extend({A, {cocycle(A, "d(b,c)"), Cocycle::zero(3, Q)}, {}, {}});
  Algebra split = direct_sum(central_extend({A, {cocycle(A, "d(b,c)")}, {}, {}}), instantiate("J1,1"));
  FieldSpec f = FieldSpec::prime(5);
  EXPECT_TRUE(search_isomorphism(with_zero, split, f).has_value());
}

TEST(Extension, CenterDimensionOfLineages) {
  for (const auto& in : sampled_instances(5)) {
    const auto& l = in.entry->lineage;
    if (!l || l->split) continue;
    ExtensionSpec s;
    try {
      s = lineage_spec(*in.entry, in.binding);
      ExtensionDiagnostics d = diagnose(s);
      if (!d.radical_condition || !d.independent_mod_b2) continue;
    } catch (const InvalidCocycle&) {
      continue;
    }
    EXPECT_EQ(annihilator(in.algebra).dim(), s.cocycles.size()) << in.label;
  }
}

TEST(Extension, Reconstruct) {
  Algebra j22 = instantiate("J2,2");
  Reconstruction r = reconstruct(j22);
  EXPECT_EQ(r.base.dim(), 1u);
  ASSERT_EQ(r.cocycles.size(), 1u);
  EXPECT_EQ(r.cocycles[0], Cocycle::delta(1, 0, 0, Q));
  EXPECT_THROW(reconstruct(instantiate("J3,1")), NotAnExtension);

  // The quotient is computed even when the form is not a cocycle.
  Reconstruction r52 = reconstruct(instantiate("J5,2"));
  EXPECT_TRUE(r52.base.same_structure(instantiate("J4,6")));
  ASSERT_EQ(r52.cocycles.size(), 1u);
  EXPECT_EQ(r52.cocycles[0], cocycle(r52.base, "d(b,d)"));

  Reconstruction r531 = reconstruct(instantiate("J5,31"));
  EXPECT_TRUE(r531.base.same_structure(instantiate("J3,2")));
  EXPECT_EQ(r531.cocycles.size(), 2u);
}

TEST(Extension, ReconstructRoundTrip) {
  for (const auto& in : sampled_instances(5)) {
    if (!jordan_identity_holds(in.algebra)) continue;
    Reconstruction r = reconstruct(in.algebra);
    Algebra M = central_extend({r.base, r.cocycles, {}, {}});
    Morphism m{M, in.algebra, r.section};
    EXPECT_TRUE(verify_isomorphism(m)) << in.label;
  }
}

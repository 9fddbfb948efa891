#include <gtest/gtest.h>

#include "jordan/io.hpp"
#include "jordan/report.hpp"

using namespace jordan;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ParamBinding alpha(const std::string& v) { return {{"alpha", Scalar::parse(v, Q)}}; }

}  // namespace

TEST(Catalog, Counts) {
  std::size_t small = 0;
  for (std::size_t d = 1; d <= 4; ++d) small += entries_of_dim(d).size();
  EXPECT_EQ(small, 20u);
  EXPECT_EQ(entries_of_dim(5).size(), 44u);
}

TEST(Catalog, Instantiate) {
  Algebra j52 = instantiate("J5,2");
  EXPECT_EQ(j52.describe(), instantiate("J5,2").describe());
  EXPECT_FALSE(j52.basis_product(0, 0) != unit_vector(5, 1, Q));
  EXPECT_FALSE(j52.basis_product(1, 2) != unit_vector(5, 3, Q));
  EXPECT_FALSE(j52.basis_product(1, 3) != unit_vector(5, 4, Q));
  EXPECT_THROW(instantiate("J5,27", alpha("1")), InadmissibleParameter);
  EXPECT_THROW(instantiate("J5,27", alpha("0")), InadmissibleParameter);
  EXPECT_NO_THROW(instantiate("J5,27", alpha("2")));
  EXPECT_NO_THROW(instantiate("J5,17", alpha("0")));
  EXPECT_THROW(instantiate("J9,9"), UnknownAlgebra);
  EXPECT_THROW(instantiate("J5,17"), InadmissibleParameter);
  EXPECT_THROW(instantiate("J5,2", alpha("1")), InadmissibleParameter);
}

TEST(Catalog, References) {
  auto [name, b] = parse_reference("J5,30[alpha=1,beta=2]");
  EXPECT_EQ(name, "J5,30");
  EXPECT_EQ(b.at("beta"), Scalar::from_int(2, Q));
  EXPECT_EQ(instance_label(name, b), "J5,30[alpha=1,beta=2]");
  EXPECT_THROW(parse_reference("J5,30[alpha=1"), ParseError);
  Algebra f5 = instantiate_reference("J5,44[alpha=1/2]", FieldSpec::prime(5));
  EXPECT_EQ(f5.field(), FieldSpec::prime(5));
}

TEST(Catalog, TableExpectationsThatHold) {
  for (const auto& r : table_centers().rows) EXPECT_TRUE(r.pass) << r.subject;
  for (const auto& r : table_associativity().rows) EXPECT_TRUE(r.pass) << r.subject;
  EXPECT_TRUE(find_entry("J4,11").associative.value());
  Algebra j44 = instantiate("J4,4");
  Subspace cd = Subspace::span(4, Q, {unit_vector(4, 2, Q), unit_vector(4, 3, Q)});
  EXPECT_TRUE(annihilator(j44) == cd);
}

TEST(Catalog, ListedFamilyMembersAreValid) {
  for (const char* ref : {"J5,24", "J5,17[alpha=0]", "J5,44[alpha=2]"}) {
    Algebra A = instantiate_reference(ref);
    EXPECT_TRUE(jordan_identity_holds(A)) << ref;
    EXPECT_NE(nilpotency_index(A), 0u) << ref;
    EXPECT_FALSE(is_associative(A)) << ref;
  }
}

TEST(Catalog, LineageShape) {
  for (const auto* e : entries_of_dim(5)) {
    ASSERT_TRUE(e->lineage) << e->name;
    for (const auto& b : sample_bindings(*e)) {
      ExtensionSpec s = lineage_spec(*e, b);
      EXPECT_EQ(detail::lineage_shape_problem(s, *e->lineage), "") << e->name;
    }
  }
}

TEST(Io, SerializeSmallAlgebra) {
  json doc = serialize_algebra(instantiate("J2,2"));
  EXPECT_EQ(doc["dim"], 2);
  EXPECT_EQ(doc["field"], "Q");
  EXPECT_EQ(doc["basis"], json::array({"a", "b"}));
  EXPECT_EQ(doc["products"], json::parse(R"([{"i":0,"j":0,"terms":[{"k":1,"c":"1"}]}])"));
}

TEST(Io, RoundTrip) {
  for (const auto& in : sampled_instances(5)) {
    Algebra back = parse_algebra(serialize_algebra(in.algebra));
    EXPECT_TRUE(back == in.algebra) << in.label;
  }
  Algebra f = instantiate_reference("J5,44[alpha=1/2]", FieldSpec::prime(7));
  json doc = serialize_algebra(f);
  EXPECT_EQ(doc["field"], json({{"p", 7}}));
  EXPECT_TRUE(parse_algebra(doc) == f);
}

TEST(Io, Errors) {
  auto doc = [](const std::string& s) { return parse_algebra_text(s); };
  EXPECT_THROW(doc("{"), ParseError);
  EXPECT_THROW(doc(R"({"dim":2,"products":[{"i":1,"j":0,"terms":[{"k":1,"c":"1"}]}]})"), StructureError);
  EXPECT_THROW(doc(R"({"dim":2,"products":[{"i":0,"j":0,"terms":[{"k":1,"c":"1"}]},{"i":0,"j":0,"terms":[]}]})"),
               StructureError);
  EXPECT_THROW(doc(R"({"dim":2,"products":[{"i":0,"j":0,"terms":[{"k":2,"c":"1"}]}]})"), StructureError);
  EXPECT_THROW(doc(R"({"dim":2,"field":{"p":3}})"), InvalidField);
  EXPECT_THROW(doc(R"({"dim":2,"field":{"p":9}})"), InvalidField);
  EXPECT_THROW(doc(R"({"dim":2,"field":"R"})"), InvalidField);
  EXPECT_THROW(doc(R"({"field":"Q"})"), ParseError);
  EXPECT_THROW(resolve_algebra("@/nonexistent/file.json"), Error);
}

TEST(Io, MatrixFiles) {
  Matrix a = parse_matrix_text("[[\"1\",\"1/2\"],[\"0\",\"2\"]]", Q);
  Matrix b = parse_matrix_text("1 1/2\n0 2\n", Q);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a(0, 1), Scalar::parse("1/2", Q));
}

TEST(Report, Deterministic) {
  ReportOptions opt;
  opt.include_separation = false;
  EXPECT_EQ(full_report(opt).text(), full_report(opt).text());
}

TEST(Report, ParamOverrides) {
  ParamOverrides fixed{{"alpha", mpq_class(3)}};
  auto rows = catalog_validity_section(sample_values(), fixed).rows;
  std::size_t pinned = 0;
  for (const auto& r : rows)
    if (r.subject.find("alpha=3") != std::string::npos) ++pinned;
  EXPECT_GT(pinned, 0u);
  for (const auto& r : rows) EXPECT_EQ(r.subject.find("alpha=2"), std::string::npos) << r.subject;
}

TEST(Report, JsonHasGrades) {
  ReportDocument doc;
  doc.sections.push_back(table_centers());
  json j = doc.to_json();
  ASSERT_FALSE(j["sections"].empty());
  EXPECT_EQ(j["sections"][0]["rows"][0]["grade"], "certified-invariant");
}

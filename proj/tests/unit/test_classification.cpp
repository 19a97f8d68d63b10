#include <gtest/gtest.h>

#include "generators.hpp"
#include "pencilrank/errors.hpp"
#include "pencilrank/catalog.hpp"
#include "pencilrank/classification.hpp"

using namespace pencilrank;
using namespace pencilrank::testing;

TEST(Catalog, BuiltinCatalogShape) {
  const Catalog& c = Catalog::builtin();
  EXPECT_EQ(c.families().size(), 45u);
  EXPECT_GE(c.version(), 1);
  for (const auto& f : c.families()) {
    int m = 0, n = 0;
    for (const auto& b : f.blocks) m += b.rows(), n += b.cols();
    EXPECT_EQ(m, f.m) << f.name;
    EXPECT_EQ(n, f.n) << f.name;
    EXPECT_GE(f.rho.r, f.rho.s);
    if (f.has_equivalent()) {
      EXPECT_EQ(static_cast<int>(f.equivalent_a.size()), f.m) << f.name;
    }
  }
  EXPECT_NE(c.find("R'3,2"), nullptr);
  EXPECT_EQ(c.find("R9,9"), nullptr);
  EXPECT_THROW(c.at("R9,9"), InputError);
}

TEST(Catalog, NameNormalization) {
  EXPECT_EQ(normalize_family_name("R'_{3,2}"), "R'3,2");
  EXPECT_EQ(normalize_family_name("R'3.2"), "R'3,2");
  EXPECT_EQ(normalize_family_name("S2,2"), "S2,2");
}

TEST(Catalog, RejectsMalformedJson) {
  EXPECT_THROW(Catalog::from_json("{"), InputError);
  EXPECT_THROW(Catalog::from_json(R"({"version": 1, "families": [{"name": "X"}]})"), InputError);
  EXPECT_THROW(BlockSpec::parse("Z3"), InputError);
  EXPECT_EQ(BlockSpec::parse("Q4(a,b)").size, 4);
}

TEST(Classification, TableRowsFromRandomBindings) {
  Rng rng(401);
  for (const auto* rec : table_families(false)) {
    for (int k = 0; k < 3; ++k) {
      const auto binding = random_binding(*rec, rng);
      const Pencil p = scramble(canonical_representative(rec->name, binding), rng);
      EXPECT_EQ(minimal_ranks(p, Field::real), rec->rho) << rec->name;
      EXPECT_EQ(multilinear_rank(p), rec->multilinear_rank) << rec->name;
      const Classification c = classify(p);
      EXPECT_EQ(c.label.name, rec->name);
      EXPECT_EQ(tensor_rank_lookup(c.label), rec->tensor_rank);
      EXPECT_EQ(kronecker_structure(canonical_representative(c.label), Field::real),
                kronecker_structure(p, Field::real))
          << rec->name;
    }
  }
}

TEST(Classification, ZeroPaddingAndTransposition) {
  Rng rng(402);
  const FamilyRecord& rec = Catalog::builtin().at("S2,1");
  const Pencil p = canonical_representative(rec.name, random_binding(rec, rng));
  const Pencil padded = scramble(direct_sum(p, Pencil::zero(1, 1)), rng);
  const Classification c = classify(padded);
  EXPECT_EQ(c.label.name, "S2,1");
  EXPECT_EQ(c.padding.zero_rows, 1);
  EXPECT_EQ(c.padding.zero_cols, 1);
  const Classification t = classify(scramble(p.transpose(), rng));
  EXPECT_EQ(t.label.name, "S2,1");
  EXPECT_TRUE(t.padding.transposed);
}

TEST(Classification, MovesInfiniteEigenvaluesWithMobiusMap) {
  const FamilyRecord& rec = Catalog::builtin().at("R1,1");
  const Classification c = classify(equivalent_representative(rec, {}));
  EXPECT_EQ(c.label.name, "R1,1");
  EXPECT_FALSE(c.mobius == Gl2Transform::identity());
}

TEST(Classification, QuadraticParametersAreRecovered) {
  const Classification c = classify(blocks::quadratic(1, Rational(Integer(1), Integer(2)), Rational(3)));
  EXPECT_EQ(c.label.name, "R2,2");
  EXPECT_EQ(c.label.parameters.at("a").value, Rational(Integer(1), Integer(2)));
  EXPECT_EQ(c.label.parameters.at("b").value.abs(), Rational(3));
}

TEST(Classification, IrrationalParametersAreAlgebraic) {
  const Pencil p(MatrixQ::from_rows({{0, 2}, {1, 0}}), MatrixQ::identity(2));
  const Classification c = classify(p);
  EXPECT_EQ(c.label.name, "R1,1");
  for (const auto& [k, v] : c.label.parameters) {
    EXPECT_FALSE(v.is_rational) << k;
    EXPECT_NEAR(std::abs(v.approx), std::sqrt(2.0), 1e-12);
  }
  EXPECT_THROW(canonical_representative(c.label), InputError);
}

TEST(Classification, ZeroPencilAndOversizedInput) {
  const Classification z = classify(Pencil::zero(2, 3));
  EXPECT_FALSE(z.in_catalog);
  EXPECT_EQ(z.label.name, kZeroFamily);
  Rng rng(403);
  EXPECT_THROW(classify(Pencil(random_integer_matrix(rng, 5, 5, 3), random_integer_matrix(rng, 5, 5, 3))),
               InputError);
}

TEST(Classification, ConstraintViolations) {
  EXPECT_THROW(canonical_representative("R2,2", {{"a", Rational(0)}, {"b", Rational(0)}}), InputError);
  EXPECT_THROW(canonical_representative("R1,1", {{"a1", Rational(1)}, {"a2", Rational(1)}}), InputError);
  EXPECT_THROW(canonical_representative("R1,0", {{"zz", Rational(1)}}), InputError);
  EXPECT_THROW(canonical_representative("R1,0", {}), InputError);
  EXPECT_THROW(canonical_representative("R4,4", {{"a", 0}, {"b", 1}, {"c", 0}, {"d", -1}}), InputError);
  EXPECT_THROW(canonical_representative("nope", {}), InputError);
}

TEST(Classification, CanonicalFormsOfNamedRows) {
  EXPECT_EQ(canonical_representative("R2,2", {{"a", 0}, {"b", 1}}), blocks::quadratic(1, Rational(0), Rational(1)));
  EXPECT_EQ(canonical_representative("S1,1", {}), blocks::column_block(1));
  EXPECT_EQ(canonical_representative("R3,2", {{"a", 1}}), blocks::jordan(3, Rational(1)));
}

TEST(Equivalence, CanonicalAndListedEquivalentPencils) {
  Rng rng(404);
  for (const auto* rec : table_families(true)) {
    auto binding = random_binding(*rec, rng);
    const Pencil canon = canonical_representative(rec->name, binding);
    std::map<std::string, Rational> eq_params;
    if (rec->name == "R'3,2") eq_params["a'"] = (binding["a"] - binding["c"]) / binding["d"];
    const EquivalenceResult r = verify_equivalence_detailed(canon, equivalent_representative(*rec, eq_params));
    EXPECT_TRUE(r.equivalent) << rec->name;
  }
}

TEST(Equivalence, ScrambledCopiesAreEquivalent) {
  Rng rng(405);
  for (int t = 0; t < 60; ++t) {
    const Pencil p = scramble(random_recipe(rng, 4, 4).build(), rng);
    EXPECT_TRUE(verify_equivalence(p, scramble(p, rng)));
  }
}

TEST(Equivalence, DifferentFamiliesAreNotEquivalent) {
  Rng rng(406);
  const auto fams = table_families(false);
  int pairs = 0;
  for (std::size_t i = 0; i < fams.size(); ++i)
    for (std::size_t j = i + 1; j < fams.size(); ++j) {
      if (fams[i]->m != fams[j]->m || fams[i]->n != fams[j]->n) continue;
      const Pencil p = canonical_representative(fams[i]->name, random_binding(*fams[i], rng));
      const Pencil q = canonical_representative(fams[j]->name, random_binding(*fams[j], rng));
      EXPECT_FALSE(verify_equivalence(p, q)) << fams[i]->name << " vs " << fams[j]->name;
      ++pairs;
    }
  EXPECT_GE(pairs, 50);
}

TEST(Equivalence, MobiusMovesEigenvaluesWithinAFamily) {
  // J1(a1) + J1(a2) + J1(a3) for any distinct triples are one orbit; four distinct values carry a cross-ratio.
  EXPECT_TRUE(verify_equivalence(canonical_representative("R'2,2", {{"a1", 0}, {"a2", 1}, {"a3", 2}}),
                                 canonical_representative("R'2,2", {{"a1", 5}, {"a2", -1}, {"a3", 7}})));
  EXPECT_FALSE(verify_equivalence(canonical_representative("R3,3", {{"a1", 0}, {"a2", 1}, {"a3", 2}, {"a4", 3}}),
                                  canonical_representative("R3,3", {{"a1", 0}, {"a2", 1}, {"a3", 2}, {"a4", 5}})));
  EXPECT_TRUE(verify_equivalence(canonical_representative("R3,3", {{"a1", 0}, {"a2", 1}, {"a3", 2}, {"a4", 3}}),
                                 canonical_representative("R3,3", {{"a1", 0}, {"a2", 2}, {"a3", 4}, {"a4", 6}})));
}

TEST(Equivalence, RealPointPlusConjugatePairIsASingleOrbit) {
  // Rotations of the projective line fix the pair +-i and act transitively on the real points;
  // z -> (z + 3) / (1 - 3z) is rational.
  const FamilyRecord& rec = Catalog::builtin().at("R'3,2");
  const EquivalenceResult r = verify_equivalence_detailed(equivalent_representative(rec, {{"a'", 0}}),
                                                          equivalent_representative(rec, {{"a'", 3}}));
  EXPECT_TRUE(r.equivalent);
  EXPECT_TRUE(r.certified);
}

TEST(Equivalence, DimensionMismatch) {
  EXPECT_FALSE(verify_equivalence(blocks::column_block(1), blocks::jordan(1, Rational(0))));
}

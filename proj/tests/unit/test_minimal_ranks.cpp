#include <gtest/gtest.h>

#include "generators.hpp"
#include "pencilrank/errors.hpp"
#include "pencilrank/minimal_ranks.hpp"
#include "pencilrank/number_field.hpp"

using namespace pencilrank;
using namespace pencilrank::testing;

namespace {

Pencil with_identity(const MatrixQ& h) { return Pencil(h, MatrixQ::identity(h.rows())); }

void expect_attaining(const Pencil& p, Field field) {
  const AttainResult at = attain_transform(p, field);
  const MinimalRanks rho = minimal_ranks(p, field);
  EXPECT_EQ(at.ranks, rho);
  if (at.is_rational) {
    const auto& t = at.rational;
    EXPECT_FALSE(t.determinant().is_zero());
    EXPECT_EQ(gauss_rank(p.combination(t.t11, t.t12)), rho.r);
    EXPECT_EQ(gauss_rank(p.combination(t.t21, t.t22)), rho.s);
  } else {
    EXPECT_EQ(row_rank(p, at.rows[0]), rho.r);
    EXPECT_EQ(row_rank(p, at.rows[1]), rho.s);
    EXPECT_FALSE(at.rows[0].point == at.rows[1].point);
  }
  EXPECT_EQ(at.verified_ranks[0], rho.r);
  EXPECT_EQ(at.verified_ranks[1], rho.s);
}

}  // namespace

TEST(MinimalRanks, WorkedJordanExamples) {
  for (const Rational a : {Rational(0), Rational(1), Rational(Integer(-5), Integer(2))}) {
    const Rational b = a + 3;
    const Pencil h = with_identity(MatrixQ::from_rows({{a, 1, 0}, {0, a, 1}, {0, 0, a}}));
    const Pencil hp = with_identity(MatrixQ::from_rows({{a, 1, 0}, {0, a, 0}, {0, 0, a}}));
    const Pencil hpp = with_identity(MatrixQ::from_rows({{a, 1, 0}, {0, a, 0}, {0, 0, b}}));
    EXPECT_EQ(minimal_ranks(h, Field::real), (MinimalRanks{3, 2}));
    EXPECT_EQ(minimal_ranks(hp, Field::real), (MinimalRanks{3, 1}));
    EXPECT_EQ(minimal_ranks(hpp, Field::real), (MinimalRanks{2, 2}));
  }
}

TEST(MinimalRanks, RotationBlockDependsOnTheField) {
  for (const auto& [a, b] : {std::pair{Rational(0), Rational(1)}, std::pair{Rational(2), Rational(-3)}}) {
    const Pencil q = with_identity(MatrixQ::from_rows({{a, b}, {-b, a}}));
    EXPECT_EQ(minimal_ranks(q, Field::real), (MinimalRanks{2, 2}));
    EXPECT_EQ(minimal_ranks(q, Field::complex), (MinimalRanks{1, 1}));
    expect_attaining(q, Field::real);
    expect_attaining(q, Field::complex);
  }
}

TEST(MinimalRanks, IdentityPairs) {
  for (int n = 1; n <= 6; ++n) {
    const Pencil e(MatrixQ::identity(n), MatrixQ::identity(n));
    EXPECT_EQ(minimal_ranks(e, Field::real), (MinimalRanks{n, 0}));
    expect_attaining(e, Field::real);
  }
}

TEST(MinimalRanks, SingularBlocksCountTheirIndices) {
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(minimal_ranks(blocks::column_block(k), Field::real), (MinimalRanks{k, k}));
    EXPECT_EQ(minimal_ranks(blocks::row_block(k), Field::real), (MinimalRanks{k, k}));
  }
}

TEST(MinimalRanks, AgreesWithOraclesOnScrambledRecipes) {
  Rng rng(201);
  for (int t = 0; t < 300; ++t) {
    const Recipe r = random_recipe(rng, 4, 4);
    const Pencil p = scramble(r.build(), rng);
    const MinimalRanks rho = minimal_ranks(p, Field::real);
    EXPECT_EQ(rho, point_rank_oracle(p, r, Field::real)) << r.to_string();
    EXPECT_EQ(rho, minimal_ranks_oracle(p, Field::real)) << r.to_string();
  }
}

TEST(MinimalRanks, AgreesWithOraclesOverTheComplexes) {
  Rng rng(202);
  for (int t = 0; t < 120; ++t) {
    const Recipe r = random_recipe(rng, 4, 4);
    const Pencil p = scramble(r.build(), rng);
    const MinimalRanks rho = minimal_ranks(p, Field::complex);
    EXPECT_EQ(rho, point_rank_oracle(p, r, Field::complex)) << r.to_string();
    EXPECT_EQ(rho, minimal_ranks_oracle(p, Field::complex)) << r.to_string();
  }
}

TEST(MinimalRanks, InvariantUnderEquivalenceTransposeAndGl2) {
  Rng rng(203);
  for (int t = 0; t < 100; ++t) {
    const Pencil p = scramble(random_recipe(rng, 4, 4).build(), rng);
    const MinimalRanks rho = minimal_ranks(p, Field::real);
    EXPECT_GE(rho.r, rho.s);
    EXPECT_LE(rho.r, std::min(p.m(), p.n()));
    EXPECT_EQ(minimal_ranks(p.transpose(), Field::real), rho);
    EXPECT_EQ(minimal_ranks(scramble(p, rng), Field::real), rho);
    Gl2Transform g{random_rational(rng, 3, 2), random_rational(rng, 3, 2), random_rational(rng, 3, 2),
                   random_rational(rng, 3, 2)};
    if (g.determinant().is_zero()) continue;
    EXPECT_EQ(minimal_ranks(p.apply(g), Field::real), rho);
  }
}

TEST(MinimalRanks, AttainingTransformOnRandomPencils) {
  Rng rng(204);
  for (int t = 0; t < 150; ++t) {
    const Pencil p = scramble(random_recipe(rng, 4, 4).build(), rng);
    expect_attaining(p, t % 3 == 0 ? Field::complex : Field::real);
  }
}

TEST(MinimalRanks, AttainingTransformWithIrrationalPoints) {
  // Eigenvalues +-sqrt 2, each with two Jordan blocks: rho = (2, 2) over R attained at algebraic points.
  const MatrixQ c = MatrixQ::from_rows({{0, 2}, {1, 0}});
  const Pencil p(direct_sum(c, c), MatrixQ::identity(4));
  EXPECT_EQ(minimal_ranks(p, Field::real), (MinimalRanks{2, 2}));
  const AttainResult at = attain_transform(p, Field::real);
  EXPECT_FALSE(at.is_rational);
  expect_attaining(p, Field::real);
}

TEST(MinimalRanks, MembershipInRankSets) {
  Rng rng(205);
  for (int t = 0; t < 80; ++t) {
    const Pencil p = scramble(random_recipe(rng, 4, 4).build(), rng);
    const MinimalRanks rho = minimal_ranks(p, Field::real);
    EXPECT_TRUE(in_b_rs(p, rho.r, rho.s, Field::real));
    EXPECT_TRUE(in_b_rs(p, rho.r + 1, rho.s, Field::real));
    if (rho.r - 1 >= rho.s) EXPECT_FALSE(in_b_rs(p, rho.r - 1, rho.s, Field::real));
    if (rho.s > 0) EXPECT_FALSE(in_b_rs(p, rho.r, rho.s - 1, Field::real));
  }
}

TEST(MinimalRanks, FullRankSetMembership) {
  EXPECT_TRUE(in_c(blocks::quadratic(1, Rational(0), Rational(1))));
  EXPECT_TRUE(in_c(direct_sum(blocks::quadratic(1, 0, 1), blocks::quadratic(1, 1, 2))));
  EXPECT_FALSE(in_c(blocks::jordan(2, Rational(0))));
  EXPECT_FALSE(in_c(blocks::jordan(3, Rational(0))));
  EXPECT_FALSE(in_c(blocks::column_block(2)));
}

TEST(MinimalRanks, RegularRuleRejectsSingularStructures) {
  const auto ks = kronecker_structure(blocks::column_block(1), Field::real);
  EXPECT_THROW(minimal_ranks_regular(ks), InputError);
  EXPECT_EQ(minimal_ranks_singular_part(ks), 1);
}

TEST(MinimalRanks, DropPointsIncludeZeroAndInfinity) {
  const DropPointSet d = rank_drop_points(MatrixQ::from_rows({{1, 1}, {0, 1}}), MatrixQ::identity(2), Field::real);
  EXPECT_EQ(d.normal_rank, 2);
  bool zero = false, inf = false, minus_one = false;
  for (const auto& pt : d.points) {
    if (!pt.where.is_finite()) inf = true;
    else if (pt.where.kind == EigenvalueDescriptor::Kind::rational && pt.where.value.is_zero()) zero = true;
    else if (pt.where.kind == EigenvalueDescriptor::Kind::rational && pt.where.value == Rational(-1)) {
      minus_one = true;
      EXPECT_EQ(pt.rank, 1);
    }
  }
  EXPECT_TRUE(zero && inf && minus_one);
}

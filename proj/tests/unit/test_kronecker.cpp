#include <gtest/gtest.h>

#include "generators.hpp"
#include "pencilrank/errors.hpp"
#include "pencilrank/kronecker.hpp"

using namespace pencilrank;
using namespace pencilrank::testing;

namespace {

Recipe single(RecipeBlock::Kind k, int size, Rational a = Rational(0), Rational b = Rational(0)) {
  Recipe r;
  r.blocks.push_back({k, size, a, b});
  return r;
}

}  // namespace

TEST(Kronecker, RecoversScrambledRecipesOverTheReals) {
  Rng rng(101);
  for (int t = 0; t < 250; ++t) {
    const Recipe r = random_recipe(rng, 4, 4);
    const Pencil p = scramble(r.build(), rng);
    const KroneckerStructure ks = kronecker_structure(p, Field::real);
    EXPECT_NO_THROW(ks.check_invariants());
    EXPECT_EQ(summarize(ks), expected_summary(r, Field::real))
        << r.to_string() << "\n got " << summarize(ks).to_string();
  }
}

TEST(Kronecker, RecoversScrambledRecipesOverTheComplexes) {
  Rng rng(102);
  for (int t = 0; t < 120; ++t) {
    const Recipe r = random_recipe(rng, 4, 4);
    const Pencil p = scramble(r.build(), rng);
    const KroneckerStructure ks = kronecker_structure(p, Field::complex);
    EXPECT_EQ(summarize(ks), expected_summary(r, Field::complex)) << r.to_string();
  }
}

TEST(Kronecker, LargerRecipesUpToSixBySix) {
  Rng rng(103);
  for (int t = 0; t < 40; ++t) {
    const Recipe r = random_recipe(rng, 6, 6);
    const Pencil p = scramble(r.build(), rng);
    EXPECT_EQ(summarize(kronecker_structure(p, Field::real)), expected_summary(r, Field::real)) << r.to_string();
  }
}

TEST(Kronecker, NormalRankIdentities) {
  Rng rng(104);
  for (int t = 0; t < 150; ++t) {
    const Recipe r = random_recipe(rng, 4, 4);
    const Pencil p = scramble(r.build(), rng);
    const KroneckerStructure ks = kronecker_structure(p, Field::real);
    EXPECT_EQ(ks.normal_rank, p.n() - static_cast<int>(ks.min_col_indices.size()));
    EXPECT_EQ(ks.normal_rank, p.m() - static_cast<int>(ks.min_row_indices.size()));
    EXPECT_EQ(normal_rank(p), ks.normal_rank);
    int cols = ks.regular_size(), rows = ks.regular_size();
    for (int k : ks.min_col_indices) cols += k + 1, rows += k;
    for (int l : ks.min_row_indices) cols += l, rows += l + 1;
    EXPECT_EQ(cols, p.n());
    EXPECT_EQ(rows, p.m());
  }
}

TEST(Kronecker, TransposeSwapsMinimalIndices) {
  Rng rng(105);
  for (int t = 0; t < 100; ++t) {
    const Pencil p = scramble(random_recipe(rng, 4, 4).build(), rng);
    const auto ks = kronecker_structure(p, Field::real);
    const auto kt = kronecker_structure(p.transpose(), Field::real);
    EXPECT_EQ(ks.min_col_indices, kt.min_row_indices);
    EXPECT_EQ(ks.min_row_indices, kt.min_col_indices);
    EXPECT_EQ(ks.finite_divisors, kt.finite_divisors);
    EXPECT_EQ(ks.infinite_divisor_degrees, kt.infinite_divisor_degrees);
  }
}

TEST(Kronecker, SwapExchangesZeroAndInfinity) {
  Rng rng(106);
  for (int t = 0; t < 60; ++t) {
    const Recipe r = random_recipe(rng, 4, 4, false);
    const Pencil p = scramble(r.build(), rng);
    const auto ks = kronecker_structure(p, Field::real);
    const auto kw = kronecker_structure(p.apply(Gl2Transform::swap()), Field::real);
    int zero_blocks = 0;
    for (const auto& d : ks.finite_divisors) {
      if (d.eigenvalue.kind == EigenvalueDescriptor::Kind::rational && d.eigenvalue.value.is_zero()) ++zero_blocks;
    }
    EXPECT_EQ(static_cast<int>(kw.infinite_divisor_degrees.size()), zero_blocks) << r.to_string();
  }
}

TEST(Kronecker, WorkedJordanExamples) {
  // Invariant polynomials (a + x)^3; (a + x)^2, a + x; (a + x)^2, b + x.
  const Rational a(2), b(-1);
  const MatrixQ e = MatrixQ::identity(3);
  const auto h = kronecker_structure(Pencil(MatrixQ::from_rows({{a, 1, 0}, {0, a, 1}, {0, 0, a}}), e), Field::real);
  ASSERT_EQ(h.finite_divisors.size(), 1u);
  EXPECT_EQ(h.finite_divisors[0].power, 3);
  EXPECT_EQ(h.finite_divisors[0].eigenvalue.value, -a);
  const auto hp = kronecker_structure(Pencil(MatrixQ::from_rows({{a, 1, 0}, {0, a, 0}, {0, 0, a}}), e), Field::real);
  ASSERT_EQ(hp.finite_divisors.size(), 2u);
  EXPECT_EQ(hp.finite_divisors[0].power + hp.finite_divisors[1].power, 3);
  const auto hpp = kronecker_structure(Pencil(MatrixQ::from_rows({{a, 1, 0}, {0, a, 0}, {0, 0, b}}), e), Field::real);
  ASSERT_EQ(hpp.finite_divisors.size(), 2u);
}

TEST(Kronecker, SingleBlocks) {
  EXPECT_EQ(kronecker_structure(single(RecipeBlock::Kind::column, 3).build(), Field::real).min_col_indices,
            std::vector<int>{3});
  EXPECT_EQ(kronecker_structure(single(RecipeBlock::Kind::row, 2).build(), Field::real).min_row_indices,
            std::vector<int>{2});
  EXPECT_EQ(kronecker_structure(single(RecipeBlock::Kind::infinite, 2).build(), Field::real).infinite_divisor_degrees,
            std::vector<int>{2});
  // Zero columns are minimal column indices 0.
  EXPECT_EQ(kronecker_structure(Pencil::zero(1, 2), Field::real).min_col_indices, (std::vector<int>{0, 0}));
  EXPECT_EQ(kronecker_structure(Pencil::zero(1, 2), Field::real).min_row_indices, (std::vector<int>{0}));
}

TEST(Kronecker, IrrationalEigenvalues) {
  // Companion-like pencil with characteristic polynomial x^2 - 2.
  const Pencil p(MatrixQ::from_rows({{0, 2}, {1, 0}}), MatrixQ::identity(2));
  const auto ks = kronecker_structure(p, Field::real);
  ASSERT_EQ(ks.finite_divisors.size(), 2u);
  for (const auto& d : ks.finite_divisors) {
    EXPECT_EQ(d.eigenvalue.kind, EigenvalueDescriptor::Kind::real_algebraic);
    EXPECT_NEAR(std::abs(d.eigenvalue.approx.real()), std::sqrt(2.0), 1e-12);
  }
  EXPECT_FALSE(ks.finite_divisors[0].eigenvalue == ks.finite_divisors[1].eigenvalue);
}

TEST(Kronecker, BlockConstructorsMatchRecipes) {
  EXPECT_EQ(blocks::column_block(2), single(RecipeBlock::Kind::column, 2).build());
  EXPECT_EQ(blocks::row_block(2), single(RecipeBlock::Kind::row, 2).build());
  EXPECT_EQ(blocks::jordan(3, Rational(5)), single(RecipeBlock::Kind::jordan, 3, Rational(5)).build());
  EXPECT_EQ(blocks::infinite(2), single(RecipeBlock::Kind::infinite, 2).build());
  EXPECT_EQ(blocks::quadratic(2, Rational(1), Rational(3)),
            single(RecipeBlock::Kind::quadratic, 2, Rational(1), Rational(3)).build());
}

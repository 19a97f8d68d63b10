#include <gtest/gtest.h>

#include "generators.hpp"
#include "pencilrank/errors.hpp"
#include "pencilrank/minimal_ranks.hpp"
#include "pencilrank/polynomial_ranks.hpp"

using namespace pencilrank;
using namespace pencilrank::testing;

namespace {

void expect_subspace_ranks(const MatrixPolynomial& p, const RankMinimizingDecomposition& d) {
  for (const auto& sub : d.subspaces) {
    for (const auto& v : sub.basis) {
      if (!v.is_rational()) continue;
      EXPECT_LE(gauss_rank(p.combination(v.rational_entries())), sub.rank_value);
    }
  }
}

}  // namespace

TEST(PolynomialRanks, PencilCaseMatchesMinimalRanks) {
  Rng rng(501);
  for (int t = 0; t < 60; ++t) {
    const Pencil p = scramble(random_recipe(rng, 4, 4).build(), rng);
    const RankMinimizingDecomposition d = poly_minimal_ranks_d2(MatrixPolynomial::from_pencil(p));
    const MinimalRanks rho = minimal_ranks(p, Field::real);
    EXPECT_EQ(d.tuple, (std::vector<int>{rho.r, rho.s}));
    EXPECT_TRUE(d.certified);
    expect_subspace_ranks(MatrixPolynomial::from_pencil(p), d);
  }
}

TEST(PolynomialRanks, HeuristicAgreesWithExactPencilCase) {
  Rng rng(502);
  for (int t = 0; t < 60; ++t) {
    const Pencil p = t % 2 ? scramble(random_recipe(rng, 4, 4).build(), rng)
                           : Pencil(random_integer_matrix(rng, 3, 3, 2), random_integer_matrix(rng, 3, 3, 2));
    const MatrixPolynomial mp = MatrixPolynomial::from_pencil(p);
    const auto exact = poly_minimal_ranks_d2(mp);
    const auto heur = poly_minimal_ranks_heuristic(mp, HeuristicOptions{}, Field::real);
    EXPECT_EQ(heur.tuple, exact.tuple) << p.to_string();
  }
}

TEST(PolynomialRanks, RecoversPlantedCubicTuples) {
  Rng rng(503);
  int recovered = 0;
  for (int t = 0; t < 20; ++t) {
    const int m = uniform_int(rng, 2, 3), n = uniform_int(rng, 2, 3);
    const PlantedPolynomial pp = planted_polynomial(rng, m, n);
    const auto d = poly_minimal_ranks(pp.polynomial);
    if (d.tuple == pp.tuple) ++recovered;
    EXPECT_FALSE(d.certified);
    expect_subspace_ranks(pp.polynomial, d);
  }
  EXPECT_GE(recovered, 19);
}

TEST(PolynomialRanks, MembershipQueries) {
  Rng rng(504);
  const PlantedPolynomial pp = planted_polynomial(rng, 3, 3);
  EXPECT_TRUE(poly_in_b(pp.polynomial, pp.tuple));
  std::vector<int> bigger = pp.tuple;
  bigger[0] += 1;
  EXPECT_TRUE(poly_in_b(pp.polynomial, bigger));
  std::vector<int> smaller = pp.tuple;
  smaller[0] -= 1;
  EXPECT_FALSE(poly_in_b(pp.polynomial, smaller));
  EXPECT_THROW(poly_in_b(pp.polynomial, {1, 1}), InputError);
  const Pencil q = blocks::quadratic(1, Rational(0), Rational(1));
  const PolyMembership pm = poly_in_b_detailed(MatrixPolynomial::from_pencil(q), {2, 2});
  EXPECT_TRUE(pm.member);
  EXPECT_TRUE(pm.certified);
  EXPECT_FALSE(poly_in_b(MatrixPolynomial::from_pencil(q), {2, 1}));
}

TEST(PolynomialRanks, TransformsAndEquivalence) {
  const MatrixPolynomial p({MatrixQ::identity(2), MatrixQ::from_rows({{0, 1}, {0, 0}}), MatrixQ::zero(2, 2)});
  EXPECT_EQ(p.d(), 3);
  const MatrixQ t = MatrixQ::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(p.transformed(t).coefficient(0), MatrixQ::from_rows({{1, 1}, {0, 1}}));
  EXPECT_EQ(p.combination({Rational(2), Rational(3), Rational(0)}), MatrixQ::from_rows({{2, 3}, {0, 2}}));
  const auto d = poly_minimal_ranks(p);
  EXPECT_EQ(d.tuple, (std::vector<int>{2, 1, 0}));
  EXPECT_THROW(MatrixPolynomial({MatrixQ::identity(2), MatrixQ::identity(3)}), InputError);
}

TEST(PolynomialRanks, ComplexFieldSplitsRotation) {
  const Pencil q = blocks::quadratic(1, Rational(0), Rational(1));
  const auto d = poly_minimal_ranks_d2(MatrixPolynomial::from_pencil(q), Field::complex);
  EXPECT_EQ(d.tuple, (std::vector<int>{1, 1}));
  for (const auto& s : d.subspaces)
    for (const auto& v : s.basis) EXPECT_FALSE(v.is_rational());
}

#include <gtest/gtest.h>

#include "generators.hpp"
#include "pencilrank/errors.hpp"
#include "pencilrank/matrix.hpp"

using namespace pencilrank;
using namespace pencilrank::testing;

namespace {

MatrixQ low_rank(Rng& rng, int m, int n, int r) {
  return random_integer_matrix(rng, m, r, 3) * random_integer_matrix(rng, r, n, 3);
}

Rational leibniz3(const MatrixQ& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST(Matrix, RankAgreesWithGaussianEliminationOracle) {
  Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    const int m = uniform_int(rng, 1, 6), n = uniform_int(rng, 1, 6);
    const MatrixQ a = low_rank(rng, m, n, uniform_int(rng, 0, std::min(m, n)));
    EXPECT_EQ(rank_exact(a), gauss_rank(a)) << a.to_string();
    EXPECT_EQ(rank_exact(a.transpose()), rank_exact(a));
  }
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const MatrixQ a = random_integer_matrix(rng, 3, 3, 5);
    EXPECT_EQ(determinant_exact(a), leibniz3(a));
  }
}

TEST(Matrix, NullspaceAndInverse) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const int m = uniform_int(rng, 1, 5), n = uniform_int(rng, 1, 5);
    const MatrixQ a = low_rank(rng, m, n, uniform_int(rng, 0, std::min(m, n)));
    const MatrixQ k = nullspace_basis(a);
    EXPECT_EQ(k.cols(), n - rank_exact(a));
    if (k.cols() > 0) {
      EXPECT_TRUE((a * k).is_zero());
      EXPECT_EQ(rank_exact(k), k.cols());
    }
    const auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), m == n && rank_exact(a) == n);
    if (inv) EXPECT_EQ(*inv * a, MatrixQ::identity(n));
  }
}

TEST(Matrix, RankFactorizationReconstructs) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const int m = uniform_int(rng, 1, 5), n = uniform_int(rng, 1, 5);
    const MatrixQ a = low_rank(rng, m, n, uniform_int(rng, 0, std::min(m, n)));
    const auto f = rank_factorization(a);
    EXPECT_EQ(f.u.cols(), rank_exact(a));
    EXPECT_EQ(f.u * f.v.transpose(), a);
  }
}

TEST(Matrix, RrefIsIdempotentWithPivots) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const MatrixQ a = low_rank(rng, 4, 5, uniform_int(rng, 0, 4));
    std::vector<int> piv;
    const MatrixQ r = rref(a, &piv);
    EXPECT_EQ(rref(r), r);
    EXPECT_EQ(static_cast<int>(piv.size()), rank_exact(a));
  }
}

TEST(Matrix, StackingKroneckerAndVec) {
  const MatrixQ a = MatrixQ::from_rows({{1, 2}, {3, 4}});
  const MatrixQ e = MatrixQ::identity(2);
  EXPECT_EQ(hstack(a, e).cols(), 4);
  EXPECT_EQ(vstack(a, e).rows(), 4);
  EXPECT_EQ(direct_sum(a, e)(2, 2), Rational(1));
  EXPECT_EQ(direct_sum(a, e)(0, 2), Rational(0));
  const MatrixQ k = kron(e, a);
  EXPECT_EQ(k.block(2, 2, 2, 2), a);
  EXPECT_TRUE(k.block(0, 2, 2, 2).is_zero());
  const MatrixQ v = vec(a);
  EXPECT_EQ(v(1, 0), Rational(3));  // column-major
  EXPECT_EQ(a.frobenius_norm_squared(), Rational(30));
}

TEST(Matrix, NumericRankThreshold) {
  Eigen::MatrixXd m(2, 2);
  m << 1, 0, 0, 1e-12;
  EXPECT_EQ(numeric_rank(m, 1e-8), 1);
  EXPECT_EQ(numeric_rank(m, 1e-14), 2);
}

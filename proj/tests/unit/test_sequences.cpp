#include <gtest/gtest.h>

#include "generators.hpp"
#include "pencilrank/errors.hpp"
#include "pencilrank/minimal_ranks.hpp"
#include "pencilrank/sequences.hpp"

using namespace pencilrank;
using namespace pencilrank::testing;

namespace {

Rational distance_squared(const Pencil& p, const Pencil& q) {
  return (p.a() - q.a()).frobenius_norm_squared() + (p.b() - q.b()).frobenius_norm_squared();
}

}  // namespace

TEST(ZpSequence, DistanceIsExactlyOneOverP) {
  for (int k = 1; k <= 3; ++k)
    for (int p : {1, 10, 1000, 77}) {
      for (const Rational a : {Rational(0), Rational(Integer(-3), Integer(2))}) {
        const Pencil z = sequence_zp(k, a, p);
        const Pencil lim = zp_limit(k, a);
        EXPECT_EQ(distance_squared(z, lim), Rational(Integer(1), Integer(p) * Integer(p)));
        EXPECT_EQ(lim, blocks::jordan(2 * k, a));
      }
    }
}

TEST(ZpSequence, MembersHaveRanksOneBelowTheLimit) {
  for (int k = 1; k <= 3; ++k)
    for (int p : {1, 10, 1000}) {
      const Pencil z = sequence_zp(k, Rational(1), p);
      EXPECT_EQ(minimal_ranks(z, Field::real), (MinimalRanks{2 * k - 1, 2 * k - 1}));
    }
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(minimal_ranks(zp_limit(k, Rational(1)), Field::real), (MinimalRanks{2 * k, 2 * k - 1}));
  }
}

TEST(ZpSequence, VariantWithComplexBlock) {
  const MatrixQ q = MatrixQ::from_rows({{0, 1}, {-1, 0}});
  for (int k = 2; k <= 3; ++k) {
    const Pencil z = sequence_zp(k, Rational(0), 10, q);
    const Pencil lim = zp_limit(k, Rational(0), q);
    EXPECT_EQ(distance_squared(z, lim), Rational(Integer(1), Integer(100)));
    EXPECT_EQ(minimal_ranks(z, Field::real), (MinimalRanks{2 * k - 1, 2 * k - 1}));
  }
  EXPECT_THROW(sequence_zp(1, Rational(0), 10, q), InputError);
  EXPECT_THROW(sequence_zp(2, Rational(0), 10, MatrixQ::identity(2)), InputError);
  EXPECT_THROW(sequence_zp(0, Rational(0), 10), InputError);
  EXPECT_THROW(sequence_zp(1, Rational(0), 0), InputError);
}

TEST(PnSequence, DecompositionReconstructsMembers) {
  const PnInstance inst = random_pn_instance(6, 6, 4, 11);
  for (int n : {1, 10, 1000}) {
    const Pencil pn = sequence_pn(inst, n);
    const BtdState st = pn_decomposition(inst, n);
    EXPECT_EQ(st.r(), 4);
    EXPECT_EQ(st.s(), 4);
    const Tensor3 t = st.reconstruct();
    const double scale = 1.0 + std::sqrt(pn.norm_squared().to_double());
    EXPECT_LT((t.slice(0) - pn.a().to_double()).norm() / scale, 1e-9);
    EXPECT_LT((t.slice(1) - pn.b().to_double()).norm() / scale, 1e-9);
    EXPECT_TRUE(in_b_rs(pn, 4, 4, Field::real));
  }
}

TEST(PnSequence, MemberFormulaMatchesDirectExpansion) {
  const PnInstance inst = random_pn_instance(3, 4, 2, 12);
  const int n = 7;
  const Rational nn(n), inv = Rational(Integer(1), Integer(n));
  const MatrixQ u = inst.b + inv * inst.a, v = inst.c + inv * inst.d;
  const MatrixQ uvt = u * v.transpose();
  const Pencil expect(nn * uvt - nn * inst.b * inst.c.transpose(), uvt);
  EXPECT_EQ(sequence_pn(inst, n), expect);
  EXPECT_EQ(pn_limit(inst), Pencil(inst.a * inst.c.transpose() + inst.b * inst.d.transpose(),
                                   inst.b * inst.c.transpose()));
}

TEST(PnSequence, ConvergesAtRateOneOverN) {
  const PnInstance inst = random_pn_instance(6, 6, 4, 13);
  const double c = pn_bound_constant(inst);
  double prev = 1e300;
  for (int n : {1, 10, 100, 1000, 10000, 100000}) {
    const double d = std::sqrt(pn_distance_squared(inst, n).to_double());
    EXPECT_LE(n * d, c * (1 + 1e-12));
    EXPECT_LT(d, prev);
    prev = d;
  }
}

TEST(PnSequence, ConditionOnStackedRanks) {
  const PnInstance tight = tight_pn_instance(6, 6, 14);
  const PnCondition tc = check_condition(tight);
  EXPECT_EQ(tc.rank_ab, 6);
  EXPECT_EQ(tc.rank_cd, 6);
  EXPECT_FALSE(tc.holds);
  const PnInstance wide = random_pn_instance(8, 8, 4, 15);
  const PnCondition wc = check_condition(wide);
  EXPECT_EQ(wc.rank_ab, 8);
  EXPECT_TRUE(wc.holds);
  // Then the limit is outside the rank set every member lies in.
  EXPECT_FALSE(in_b_rs(pn_limit(wide), 4, 4, Field::real));
  EXPECT_TRUE(in_b_rs(sequence_pn(wide, 5), 4, 4, Field::real));
  const PnCondition small = check_condition(random_pn_instance(6, 6, 4, 16));
  EXPECT_FALSE(small.holds);
}

TEST(PnSequence, Validation) {
  PnInstance bad = random_pn_instance(3, 3, 2, 17);
  bad.d = MatrixQ::identity(3);
  EXPECT_THROW(validate(bad), InputError);
  EXPECT_THROW(sequence_pn(random_pn_instance(3, 3, 2, 18), 0), InputError);
  EXPECT_THROW(tight_pn_instance(5, 6, 1), InputError);
}

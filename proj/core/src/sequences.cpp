#include "pencilrank/sequences.hpp"

#include <cmath>
#include <random>

#include "pencilrank/errors.hpp"
#include "pencilrank/kronecker.hpp"

namespace pencilrank {

void validate(const PnInstance& inst) {
  const int s = inst.a.cols();
  if (s < 1) throw InputError("P_n needs s' >= 1");
  if (inst.b.rows() != inst.a.rows() || inst.b.cols() != s) throw InputError("A and B must both be m x s'");
  if (inst.c.cols() != s || inst.d.cols() != s || inst.d.rows() != inst.c.rows()) {
    throw InputError("C and D must both be n x s'");
  }
}

PnCondition check_condition(const PnInstance& inst) {
  validate(inst);
  PnCondition c;
  c.rank_ab = rank_exact(hstack(inst.a, inst.b));
  c.rank_cd = rank_exact(hstack(inst.c, inst.d));
  c.holds = 2 * std::min(c.rank_ab, c.rank_cd) > 3 * inst.s();
  return c;
}

Pencil pn_limit(const PnInstance& inst) {
  validate(inst);
  return Pencil(inst.a * inst.c.transpose() + inst.b * inst.d.transpose(), inst.b * inst.c.transpose());
}

Pencil sequence_pn(const PnInstance& inst, int n_index) {
  validate(inst);
  if (n_index < 1) throw InputError("sequence index n must be >= 1");
  const Rational n(n_index), inv = Rational(1) / n;
  const MatrixQ m = (inst.b + inv * inst.a) * (inst.c + inv * inst.d).transpose();
  const MatrixQ bc = inst.b * inst.c.transpose();
  return Pencil(n * m - n * bc, m);
}

BtdState pn_decomposition(const PnInstance& inst, int n_index) {
  validate(inst);
  if (n_index < 1) throw InputError("sequence index n must be >= 1");
  const Rational inv = Rational(1) / Rational(n_index);
  BtdState s;
  s.u = (inst.b + inv * inst.a).to_double();
  s.v = (inst.c + inv * inst.d).to_double();
  s.x = inst.b.to_double();
  s.y = inst.c.to_double();
  s.w = {static_cast<double>(n_index), 1.0};
  s.z = {-static_cast<double>(n_index), 0.0};
  return s;
}

Rational pn_distance_squared(const PnInstance& inst, int n_index) {
  const Pencil diff = sequence_pn(inst, n_index);
  const Pencil lim = pn_limit(inst);
  return Pencil(diff.a() - lim.a(), diff.b() - lim.b()).norm_squared();
}

double pn_bound_constant(const PnInstance& inst) {
  validate(inst);
  const MatrixQ ad = inst.a * inst.d.transpose();
  const MatrixQ mid = inst.a * inst.c.transpose() + inst.b * inst.d.transpose();
  const double nad = std::sqrt(ad.frobenius_norm_squared().to_double());
  return std::sqrt((ad.frobenius_norm_squared() + mid.frobenius_norm_squared()).to_double()) + nad;
}

namespace {

MatrixQ random_int(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(-3, 3);
  MatrixQ m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = u(rng);
  return m;
}

MatrixQ full_rank(int rows, int cols, std::mt19937_64& rng) {
  for (;;) {
    MatrixQ m = random_int(rows, cols, rng);
    if (rank_exact(m) == std::min(rows, cols)) return m;
  }
}

}  // namespace

PnInstance random_pn_instance(int m, int n, int s, std::uint64_t seed) {
  if (m < 1 || n < 1 || s < 1) throw InputError("P_n instance dimensions must be positive");
  std::mt19937_64 rng(seed);
  const MatrixQ ab = full_rank(m, 2 * s, rng);
  const MatrixQ cd = full_rank(n, 2 * s, rng);
  return {ab.block(0, 0, m, s), ab.block(0, s, m, s), cd.block(0, 0, n, s), cd.block(0, s, n, s)};
}

PnInstance tight_pn_instance(int m, int n, std::uint64_t seed) {
  if (m < 6 || n < 6) throw InputError("the tight instance needs m, n >= 6");
  std::mt19937_64 rng(seed);
  const MatrixQ av = full_rank(m, 6, rng);  // a1 a2 a3 a4 b3 b4
  const MatrixQ cv = full_rank(n, 6, rng);  // c1 c2 c3 c4 d1 d2
  PnInstance inst{MatrixQ(m, 4), MatrixQ(m, 4), MatrixQ(n, 4), MatrixQ(n, 4)};
  const int bcols[4] = {0, 1, 4, 5};
  const int dcols[4] = {4, 5, 2, 3};
  for (int j = 0; j < 4; ++j) {
    inst.a.set_block(0, j, av.col(j));
    inst.b.set_block(0, j, av.col(bcols[j]));
    inst.c.set_block(0, j, cv.col(j));
    inst.d.set_block(0, j, cv.col(dcols[j]));
  }
  return inst;
}

namespace {

void check_q(const MatrixQ& q, int k) {
  if (q.rows() != q.cols() || q.rows() % 2 != 0 || q.rows() == 0) throw InputError("Q must be square of even order");
  if (2 * k - q.rows() < 2) throw InputError("Q leaves no room for a Jordan block of order >= 2");
  const KroneckerStructure ks = kronecker_structure(Pencil(q, MatrixQ::identity(q.rows())), Field::real);
  for (const auto& d : ks.finite_divisors) {
    if (d.eigenvalue.kind != EigenvalueDescriptor::Kind::complex_pair) throw InputError("Q must have no real eigenvalues");
  }
}

}  // namespace

Pencil zp_limit(int k, const Rational& a, const std::optional<MatrixQ>& q) {
  if (k < 1) throw InputError("k must be >= 1");
  if (!q) return blocks::jordan(2 * k, a);
  check_q(*q, k);
  const int m1 = 2 * k - q->rows();
  return Pencil(direct_sum(blocks::jordan_matrix(m1, a), *q), MatrixQ::identity(2 * k));
}

Pencil sequence_zp(int k, const Rational& a, int p, const std::optional<MatrixQ>& q) {
  if (p < 1) throw InputError("p must be >= 1");
  Pencil lim = zp_limit(k, a, q);
  const int m1 = q ? 2 * k - q->rows() : 2 * k;
  MatrixQ w = lim.a();
  w(m1 - 1, m1 - 1) = w(m1 - 1, m1 - 1) + Rational(1) / Rational(p);
  return Pencil(w, lim.b());
}

}  // namespace pencilrank

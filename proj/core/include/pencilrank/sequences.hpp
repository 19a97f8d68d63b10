#pragma once

#include <cstdint>
#include <optional>

#include "pencilrank/btd.hpp"
#include "pencilrank/pencil.hpp"

namespace pencilrank {

/// A, B are m x s', C, D are n x s'.
struct PnInstance {
  MatrixQ a, b, c, d;
  int m() const { return a.rows(); }
  int n() const { return c.rows(); }
  int s() const { return a.cols(); }
};

struct PnCondition {
  int rank_ab = 0;
  int rank_cd = 0;
  /// min(rank[A B], rank[C D]) > 3 s' / 2
  bool holds = false;
};

void validate(const PnInstance& inst);
PnCondition check_condition(const PnInstance& inst);

/// (A C^T + B D^T) + lambda B C^T
Pencil pn_limit(const PnInstance& inst);
/// n (B + A/n)(C + D/n)^T (1 + lambda/n) - n B C^T
Pencil sequence_pn(const PnInstance& inst, int n_index);
/// The two rank-s' terms whose sum is P_n.
BtdState pn_decomposition(const PnInstance& inst, int n_index);
/// ||P_n - P||^2, exact.
Rational pn_distance_squared(const PnInstance& inst, int n_index);
/// C = ||A D^T + lambda (A C^T + B D^T)|| + ||A D^T||, so that ||P_n - P|| <= C / n.
double pn_bound_constant(const PnInstance& inst);

/// Random instance with integer entries; full-rank stacks when dimensions allow.
PnInstance random_pn_instance(int m, int n, int s, std::uint64_t seed);
/// Shared-column instance with rank[A B] = rank[C D] = 3 s'/2 (s' = 4, m, n >= 6).
PnInstance tight_pn_instance(int m, int n, std::uint64_t seed);

/// Z_p = W_p + lambda E with W_p = J_{2k-1}(a) (+) (a + 1/p) + e_{2k-1} e_{2k}^T, or with a block Q
/// (no real eigenvalues) appended: J_{m1-1}(a) (+) (a + 1/p) (+) Q + e_{m1-1} e_{m1}^T, m1 = 2k - dim Q.
Pencil sequence_zp(int k, const Rational& a, int p, const std::optional<MatrixQ>& q = std::nullopt);
/// J_{2k}(a) + lambda E, or J_{m1}(a) (+) Q + lambda E.
Pencil zp_limit(int k, const Rational& a, const std::optional<MatrixQ>& q = std::nullopt);

}  // namespace pencilrank

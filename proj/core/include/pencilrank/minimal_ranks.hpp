#pragma once

#include <array>
#include <string>
#include <vector>

#include "pencilrank/kronecker.hpp"
#include "pencilrank/pencil.hpp"

namespace pencilrank {

/// rho(A, B) = (r, s), r >= s.
struct MinimalRanks {
  int r = 0;
  int s = 0;
  friend bool operator==(const MinimalRanks&, const MinimalRanks&) = default;
  std::string to_string() const;
};

/// Block counts of the regular part at each real (or, over C, complex) eigenvalue.
struct RegularCounts {
  int j = 0;  // number of infinite elementary divisors
  std::vector<std::pair<EigenvalueDescriptor, int>> per_eigenvalue_block_counts;
  int k_s = 0;
  int k_r = 0;
};

RegularCounts regular_counts(const KroneckerStructure& ks);

/// Minimal ranks of a structure without singular part. Throws InputError otherwise.
MinimalRanks minimal_ranks_regular(const KroneckerStructure& ks);

/// Sum of all minimal column and row indices.
int minimal_ranks_singular_part(const KroneckerStructure& ks);

/// Combined rule for an arbitrary structure.
MinimalRanks minimal_ranks_from_structure(const KroneckerStructure& ks);

MinimalRanks minimal_ranks(const Pencil& p, Field field);

/// A projective point (1, lambda0), or (0, 1) for lambda0 = infinity, with the exact rank of
/// A + lambda0 B there (B for infinity). Algebraic points share the rank of all their conjugates.
struct RankPoint {
  EigenvalueDescriptor where;
  int rank = 0;
};

struct DropPointSet {
  int normal_rank = 0;
  std::vector<RankPoint> points;  // includes lambda = 0 and infinity, plus every root of the minor gcd
  bool probabilistic = false;     // minor subset sampled instead of enumerated
};

/// Candidate rank-drop points from the gcd of the maximal minors, each with its exact rank.
/// Over the reals only real points are returned; over C every root is a separate point.
DropPointSet rank_drop_points(const MatrixQ& a, const MatrixQ& b, Field field);

struct OracleResult {
  MinimalRanks ranks;
  int minimizer_count = 0;
  bool probabilistic = false;
  DropPointSet drops;
};

OracleResult minimal_ranks_oracle_detailed(const Pencil& p, Field field);
MinimalRanks minimal_ranks_oracle(const Pencil& p, Field field);

/// Transform attaining the minimal ranks. When both rows come from rational points (or infinity)
/// `rational` holds the transform; otherwise each row is (t, u) over Q[x]/(modulus).
struct AttainResult {
  MinimalRanks ranks;
  bool is_rational = true;
  Gl2Transform rational;

  struct Row {
    PolyQ modulus;  // x - c for rational rows
    PolyQ t;        // residues modulo `modulus`
    PolyQ u;
    EigenvalueDescriptor point;
    std::array<std::string, 2> decimal;  // 50 significant digits, "re" or "re+imi"
  };
  std::array<Row, 2> rows;
  /// rank of t11 A + t12 B and of t21 A + t22 B, recomputed exactly.
  std::array<int, 2> verified_ranks{0, 0};
};

AttainResult attain_transform(const Pencil& p, Field field);

/// Exact rank of t A + u B for an algebraic row.
int row_rank(const Pencil& p, const AttainResult::Row& row);

/// rho(P) <= (r, s) componentwise. Requires r >= s.
bool in_b_rs(const Pencil& p, int r, int s, Field field);

/// Square, even order n and rho = (n, n) over R.
bool in_c(const Pencil& p);

}  // namespace pencilrank

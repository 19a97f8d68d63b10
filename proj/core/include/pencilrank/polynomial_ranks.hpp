#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pencilrank/kronecker.hpp"
#include "pencilrank/matrix.hpp"
#include "pencilrank/pencil.hpp"

namespace pencilrank {

/// P(lambda) = sum_k lambda^(k-1) A_k with d = coefficients.size() >= 1.
class MatrixPolynomial {
 public:
  explicit MatrixPolynomial(std::vector<MatrixQ> coefficients);
  static MatrixPolynomial from_pencil(const Pencil& p);

  int m() const { return coeffs_.front().rows(); }
  int n() const { return coeffs_.front().cols(); }
  int d() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<MatrixQ>& coefficients() const { return coeffs_; }
  const MatrixQ& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// sum_k t_k A_k
  MatrixQ combination(const std::vector<Rational>& t) const;
  /// Coefficients of (E, E, T) . P, i.e. A'_k = sum_j T(k, j) A_j.
  MatrixPolynomial transformed(const MatrixQ& t) const;
  MatrixPolynomial equivalent(const MatrixQ& left, const MatrixQ& right) const;

 private:
  std::vector<MatrixQ> coeffs_;
};

/// Vector of F^d with entries in Q(theta); rational when `modulus` is zero.
struct AlgebraicVector {
  PolyQ modulus;                  // monic irreducible, or zero for rational vectors
  std::vector<PolyQ> entries;     // residues in theta (constants when rational)
  std::complex<double> theta;     // the embedding of theta in use
  std::vector<std::complex<double>> approx;

  static AlgebraicVector rational(const std::vector<Rational>& v);
  bool is_rational() const { return modulus.is_zero(); }
  std::vector<Rational> rational_entries() const;
  std::string to_string() const;
};

struct RankSubspace {
  std::vector<AlgebraicVector> basis;
  int rank_value = 0;
};

struct RankMinimizingDecomposition {
  std::vector<RankSubspace> subspaces;  // T_1, ..., T_l with increasing rank values
  std::vector<int> tuple;               // descending
  bool certified = false;
};

/// Exact for d = 2.
RankMinimizingDecomposition poly_minimal_ranks_d2(const MatrixPolynomial& p, Field field = Field::real);

struct HeuristicOptions {
  int samples = 24;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// Random restarts of the low-rank projection search per target rank.
  int restarts = 8;
  int projection_iterations = 300;
};

/// Stage-wise search for rank-minimizing subspaces; certified only when d = 2.
RankMinimizingDecomposition poly_minimal_ranks_heuristic(const MatrixPolynomial& p, const HeuristicOptions& options = {},
                                                          Field field = Field::real);

RankMinimizingDecomposition poly_minimal_ranks(const MatrixPolynomial& p, Field field = Field::real);

struct PolyMembership {
  bool member = false;
  bool certified = false;
};
/// The query is sorted descending before comparison with rho(P).
PolyMembership poly_in_b_detailed(const MatrixPolynomial& p, std::vector<int> ranks, Field field = Field::real);
bool poly_in_b(const MatrixPolynomial& p, std::vector<int> ranks, Field field = Field::real);

}  // namespace pencilrank

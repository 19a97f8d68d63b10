#pragma once

#include <vector>

#include "pencilrank/matrix.hpp"
#include "pencilrank/polynomial.hpp"

namespace pencilrank {

/// Dense row-major matrix with entries in Q[x].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {}

  /// a + x b
  static PolyMatrix linear(const MatrixQ& a, const MatrixQ& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PolyQ& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  const PolyQ& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<PolyQ> e_;
};

/// Monic invariant polynomials s_1 | s_2 | ... | s_k, k = rank over Q(x).
/// For matrices up to 4x4 the result is cross-checked against determinantal divisors.
std::vector<PolyQ> smith_form(const PolyMatrix& m);

/// Determinant by cofactor expansion (intended for small matrices).
PolyQ poly_determinant(const PolyMatrix& m);

/// Monic gcd of all k x k minors, for k = 1..min(rows, cols); zero once k exceeds the rank.
std::vector<PolyQ> determinantal_divisors(const PolyMatrix& m);

}  // namespace pencilrank

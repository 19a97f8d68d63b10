#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pencilrank/kronecker.hpp"
#include "pencilrank/minimal_ranks.hpp"
#include "pencilrank/pencil.hpp"

namespace pencilrank {

/// Eigenvalue cluster of a floating-point pencil with its block sizes.
struct NumericEigenGroup {
  std::complex<double> value;   // lambda0 with rank(A + lambda0 B) dropping
  bool conjugate_pair = false;  // real field: value stands for value and its conjugate
  std::vector<int> powers;      // ascending
};

struct NumericStructure {
  int m = 0;
  int n = 0;
  Field field = Field::real;
  double tolerance = 0.0;
  /// Absolute singular-value cutoff used for rank decisions.
  double threshold = 0.0;
  int normal_rank = 0;
  std::vector<int> min_col_indices;
  std::vector<int> min_row_indices;
  std::vector<NumericEigenGroup> eigen_groups;
  std::vector<int> infinite_divisor_degrees;
  /// Set when some singular value fell within a factor 10 of the cutoff.
  bool ill_conditioned = false;
  std::vector<std::string> warnings;

  int regular_size() const;
  std::string to_string() const;
  /// Same indices, normal rank and divisor powers; eigenvalues agree to `eig_tol` relative.
  bool matches(const KroneckerStructure& exact, double eig_tol = 1e-6) const;
};

/// Structure from singular-value-thresholded ranks at cutoff tolerance * max(1, ||(A, B)||).
NumericStructure staircase_structure(const FloatPencil& p, Field field = Field::real,
                                     std::uint64_t seed = 0x5eed);

/// Minimal ranks implied by a numerically determined structure.
MinimalRanks numeric_minimal_ranks(const NumericStructure& s);

}  // namespace pencilrank

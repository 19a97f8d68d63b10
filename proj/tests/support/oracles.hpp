#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pencilrank/kronecker.hpp"
#include "pencilrank/minimal_ranks.hpp"
#include "pencilrank/pencil.hpp"

namespace pencilrank::testing {

/// Rank by textbook Gaussian elimination over Q (no fraction-free tricks).
int gauss_rank(const MatrixQ& m);

/// Exact complex rational number re + i im.
struct GaussianQ {
  Rational re;
  Rational im;
};
using MatrixGQ = std::vector<std::vector<GaussianQ>>;

/// Rank over Q(i).
int gauss_rank(const MatrixGQ& m);

/// One block of a canonical recipe. Roots follow the convention that J_m(a) + lambda E drops rank at -a.
struct RecipeBlock {
  enum class Kind { column, row, jordan, infinite, quadratic };
  Kind kind = Kind::jordan;
  int size = 1;  // k for L_k, l for R_l, m for J_m, v for N_v, k for Q_{2k}
  Rational a;
  Rational b;
  int rows() const;
  int cols() const;
};

struct Recipe {
  std::vector<RecipeBlock> blocks;
  int m() const;
  int n() const;
  /// Block-diagonal pencil, assembled without the library's block constructors.
  Pencil build() const;
  std::string to_string() const;
};

/// Rank of A + lambda0 B at every eigenvalue the recipe predicts (rational points; over C also the
/// points -a +- b i of the quadratic blocks), at infinity and at one generic point. rho is the pair of
/// the two smallest ranks among distinct points.
MinimalRanks point_rank_oracle(const Pencil& p, const Recipe& recipe, Field field);

/// Field-independent summary of a Kronecker structure used to compare against recipes.
struct StructureSummary {
  std::vector<int> min_col_indices;
  std::vector<int> min_row_indices;
  std::vector<int> infinite_degrees;
  /// (eigenvalue, power) rounded to 1e-9, with conjugate pairs listed by the root of positive imaginary part
  /// over R (flagged by `pair`), or by both roots over C.
  struct Divisor {
    double re = 0, im = 0;
    int power = 0;
    bool pair = false;
    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend auto operator<=>(const Divisor&, const Divisor&) = default;
  };
  std::vector<Divisor> finite;
  friend bool operator==(const StructureSummary&, const StructureSummary&) = default;
  std::string to_string() const;
};

StructureSummary expected_summary(const Recipe& recipe, Field field);
StructureSummary summarize(const KroneckerStructure& ks);

}  // namespace pencilrank::testing

#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "pencilrank/rational.hpp"

namespace pencilrank {

/// Dense row-major matrix of rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(int rows, int cols);
  MatrixQ(int rows, int cols, std::vector<Rational> entries);

  static MatrixQ zero(int rows, int cols) { return MatrixQ(rows, cols); }
  static MatrixQ identity(int n);
  static MatrixQ from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  /// Rational copy of a double matrix (exact binary values).
  static MatrixQ from_double(const Eigen::MatrixXd& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<Rational>& entries() const { return e_; }

  MatrixQ transpose() const;
  MatrixQ block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const MatrixQ& b);
  MatrixQ row(int i) const { return block(i, 0, 1, cols_); }
  MatrixQ col(int j) const { return block(0, j, rows_, 1); }

  bool is_zero() const;
  Rational frobenius_norm_squared() const;
  Eigen::MatrixXd to_double() const;

  MatrixQ& operator+=(const MatrixQ& o);
  MatrixQ& operator-=(const MatrixQ& o);
  MatrixQ& operator*=(const Rational& c);
  friend MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
  friend MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
  friend MatrixQ operator*(MatrixQ a, const Rational& c) { return a *= c; }
  friend MatrixQ operator*(const Rational& c, MatrixQ a) { return a *= c; }
  friend MatrixQ operator-(const MatrixQ& a) { return a * Rational(-1); }
  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> e_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
int rank_exact(const MatrixQ& m);

/// Determinant of a square matrix by fraction-free elimination.
Rational determinant_exact(const MatrixQ& m);

/// Reduced row echelon form; pivot columns are reported through `pivots` if given.
MatrixQ rref(const MatrixQ& m, std::vector<int>* pivots = nullptr);

/// Columns form a basis of the right kernel.
MatrixQ nullspace_basis(const MatrixQ& m);

std::optional<MatrixQ> inverse(const MatrixQ& m);

/// M = U * V^T with U (rows x r), V (cols x r), r = rank.
struct RankFactorization {
  MatrixQ u;
  MatrixQ v;
};
RankFactorization rank_factorization(const MatrixQ& m);

MatrixQ hstack(const MatrixQ& a, const MatrixQ& b);
MatrixQ vstack(const MatrixQ& a, const MatrixQ& b);
MatrixQ direct_sum(const MatrixQ& a, const MatrixQ& b);

/// Kronecker product.
MatrixQ kron(const MatrixQ& a, const MatrixQ& b);

/// Column-major vectorization as a single column.
MatrixQ vec(const MatrixQ& m);

/// Numerical rank with singular values above `threshold`.
int numeric_rank(const Eigen::MatrixXd& m, double threshold);

}  // namespace pencilrank

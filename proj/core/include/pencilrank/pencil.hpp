#pragma once

#include <Eigen/Dense>

#include <string>

#include "pencilrank/matrix.hpp"

namespace pencilrank {

enum class Field { real, complex };

const char* to_string(Field f);
Field parse_field(const std::string& text);

/// T in GL2 acting on the pencil pair: A'' = t11 A + t12 B, B'' = t21 A + t22 B.
struct Gl2Transform {
  Rational t11{1}, t12{0}, t21{0}, t22{1};

  Rational determinant() const { return t11 * t22 - t12 * t21; }
  static Gl2Transform identity() { return {}; }
  static Gl2Transform swap() { return {0, 1, 1, 0}; }
  Gl2Transform inverse() const;
  friend bool operator==(const Gl2Transform&, const Gl2Transform&) = default;
};

/// The pencil A + lambda B with exact rational entries.
class Pencil {
 public:
  Pencil() = default;
  Pencil(MatrixQ a, MatrixQ b);
  static Pencil zero(int m, int n) { return Pencil(MatrixQ(m, n), MatrixQ(m, n)); }

  int m() const { return a_.rows(); }
  int n() const { return a_.cols(); }
  const MatrixQ& a() const { return a_; }
  const MatrixQ& b() const { return b_; }

  /// t A + u B
  MatrixQ combination(const Rational& t, const Rational& u) const { return t * a_ + u * b_; }
  Pencil transpose() const { return Pencil(a_.transpose(), b_.transpose()); }
  /// (P A U^T) + lambda (P B U^T)
  Pencil equivalent(const MatrixQ& p, const MatrixQ& u) const;
  Pencil apply(const Gl2Transform& t) const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  Rational norm_squared() const { return a_.frobenius_norm_squared() + b_.frobenius_norm_squared(); }

  friend bool operator==(const Pencil&, const Pencil&) = default;
  std::string to_string() const;

 private:
  MatrixQ a_;
  MatrixQ b_;
};

Pencil direct_sum(const Pencil& p, const Pencil& q);

/// Floating-point pencil with a rank-decision tolerance.
struct FloatPencil {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  double tolerance = 1e-8;

  FloatPencil() = default;
  FloatPencil(Eigen::MatrixXd a_in, Eigen::MatrixXd b_in, double tol);
  int m() const { return static_cast<int>(a.rows()); }
  int n() const { return static_cast<int>(a.cols()); }
};

FloatPencil to_float(const Pencil& p, double tolerance = 1e-8);

/// Canonical blocks.
namespace blocks {

/// J_m(a) = a E_m + H_m, H_m with ones on the superdiagonal.
MatrixQ jordan_matrix(int m, const Rational& a);
MatrixQ shift_matrix(int m);
/// J_m(a) + lambda E_m
Pencil jordan(int m, const Rational& a);
/// N_v = E_v + lambda H_v
Pencil infinite(int v);
/// L_k: k x (k+1), lambda on the diagonal, ones on the superdiagonal.
Pencil column_block(int k);
/// R_l = L_l^T
Pencil row_block(int l);
/// Q_{2k}(a,b) = E_k (x) [[a,b],[-b,a]] + H_k (x) E_2
MatrixQ quadratic_matrix(int k, const Rational& a, const Rational& b);
/// Q_{2k}(a,b) + lambda E_{2k}
Pencil quadratic(int k, const Rational& a, const Rational& b);

}  // namespace blocks

}  // namespace pencilrank

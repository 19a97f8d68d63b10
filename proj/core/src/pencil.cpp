#include "pencilrank/pencil.hpp"

#include "pencilrank/errors.hpp"

namespace pencilrank {

const char* to_string(Field f) { return f == Field::real ? "real" : "complex"; }

Field parse_field(const std::string& text) {
  if (text == "real" || text == "R") return Field::real;
  if (text == "complex" || text == "C") return Field::complex;
  throw InputError("unknown field '" + text + "' (expected real or complex)");
}

Gl2Transform Gl2Transform::inverse() const {
  const Rational d = determinant();
  if (d.is_zero()) throw InputError("singular GL2 transform");
  return {t22 / d, -t12 / d, -t21 / d, t11 / d};
}

Pencil::Pencil(MatrixQ a, MatrixQ b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) throw InputError("pencil matrices differ in shape");
}

Pencil Pencil::equivalent(const MatrixQ& p, const MatrixQ& u) const {
  const MatrixQ ut = u.transpose();
  return Pencil(p * a_ * ut, p * b_ * ut);
}

Pencil Pencil::apply(const Gl2Transform& t) const {
  if (t.determinant().is_zero()) throw InputError("singular GL2 transform");
  return Pencil(t.t11 * a_ + t.t12 * b_, t.t21 * a_ + t.t22 * b_);
}

std::string Pencil::to_string() const { return a_.to_string() + " + lambda " + b_.to_string(); }

Pencil direct_sum(const Pencil& p, const Pencil& q) {
  return Pencil(direct_sum(p.a(), q.a()), direct_sum(p.b(), q.b()));
}

FloatPencil::FloatPencil(Eigen::MatrixXd a_in, Eigen::MatrixXd b_in, double tol)
    : a(std::move(a_in)), b(std::move(b_in)), tolerance(tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("pencil matrices differ in shape");
  if (!(tolerance > 0)) throw InputError("tolerance must be positive");
}

FloatPencil to_float(const Pencil& p, double tolerance) {
  return FloatPencil(p.a().to_double(), p.b().to_double(), tolerance);
}

namespace blocks {

MatrixQ shift_matrix(int m) {
  MatrixQ h(m, m);
  for (int i = 0; i + 1 < m; ++i) h(i, i + 1) = 1;
  return h;
}

MatrixQ jordan_matrix(int m, const Rational& a) { return a * MatrixQ::identity(m) + shift_matrix(m); }

Pencil jordan(int m, const Rational& a) {
  if (m < 1) throw InputError("Jordan block size must be positive");
  return Pencil(jordan_matrix(m, a), MatrixQ::identity(m));
}

Pencil infinite(int v) {
  if (v < 1) throw InputError("infinite block size must be positive");
  return Pencil(MatrixQ::identity(v), shift_matrix(v));
}

Pencil column_block(int k) {
  if (k < 0) throw InputError("minimal index must be nonnegative");
  MatrixQ a(k, k + 1), b(k, k + 1);
  for (int i = 0; i < k; ++i) {
    a(i, i + 1) = 1;
    b(i, i) = 1;
  }
  return Pencil(a, b);
}

Pencil row_block(int l) { return column_block(l).transpose(); }

MatrixQ quadratic_matrix(int k, const Rational& a, const Rational& b) {
  if (k < 1) throw InputError("quadratic block order must be positive");
  if (b.is_zero()) throw InputError("quadratic block needs b != 0");
  const MatrixQ rot = MatrixQ::from_rows({{a, b}, {-b, a}});
  return kron(MatrixQ::identity(k), rot) + kron(shift_matrix(k), MatrixQ::identity(2));
}

Pencil quadratic(int k, const Rational& a, const Rational& b) {
  return Pencil(quadratic_matrix(k, a, b), MatrixQ::identity(2 * k));
}

}  // namespace blocks

}  // namespace pencilrank

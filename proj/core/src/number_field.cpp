#include "pencilrank/number_field.hpp"

#include "pencilrank/errors.hpp"
#include "pencilrank/factor.hpp"

namespace pencilrank {

NumberFieldElem::NumberFieldElem(PolyQ minimal_polynomial, const PolyQ& residue) : h_(std::move(minimal_polynomial)) {
  if (h_.degree() < 1 || h_.leading() != 1) throw InputError("minimal polynomial must be monic of positive degree");
  if (!is_irreducible(h_)) throw InputError("minimal polynomial " + h_.to_string() + " is reducible");
  r_ = residue % h_;
}

NumberFieldElem NumberFieldElem::generator(const PolyQ& minimal_polynomial) {
  return NumberFieldElem(minimal_polynomial, PolyQ::linear(0, 1));
}

NumberFieldElem NumberFieldElem::from_rational(const PolyQ& minimal_polynomial, const Rational& value) {
  return NumberFieldElem(minimal_polynomial, PolyQ::constant(value));
}

void NumberFieldElem::require_same(const NumberFieldElem& a, const NumberFieldElem& b) {
  if (!(a.h_ == b.h_)) throw InputError("number field elements with different minimal polynomials");
}

NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b) {
  NumberFieldElem::require_same(a, b);
  return NumberFieldElem(NumberFieldElem::Unchecked{}, a.h_, a.r_ + b.r_);
}

NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b) {
  NumberFieldElem::require_same(a, b);
  return NumberFieldElem(NumberFieldElem::Unchecked{}, a.h_, a.r_ - b.r_);
}

NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b) {
  NumberFieldElem::require_same(a, b);
  return NumberFieldElem(NumberFieldElem::Unchecked{}, a.h_, (a.r_ * b.r_) % a.h_);
}

NumberFieldElem operator*(const Rational& c, const NumberFieldElem& a) {
  return NumberFieldElem(NumberFieldElem::Unchecked{}, a.h_, a.r_ * c);
}

bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) { return a.h_ == b.h_ && a.r_ == b.r_; }

NumberFieldElem NumberFieldElem::inverse() const {
  if (is_zero()) throw InputError("inverse of zero in a number field");
  // s r + t h = 1 since h is irreducible and r is nonzero mod h.
  const ExtendedGcd e = poly_extended_gcd(r_, h_);
  check_internal(e.g.is_one(), "residue not invertible modulo an irreducible polynomial");
  return NumberFieldElem(Unchecked{}, h_, e.s % h_);
}

namespace {

// Elimination on raw residues modulo h; entries are already reduced.
int rank_residues(std::vector<std::vector<PolyQ>> a, const PolyQ& h) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const ExtendedGcd e = poly_extended_gcd(a[r][c], h);
    check_internal(e.g.is_one(), "pivot not invertible modulo an irreducible polynomial");
    const PolyQ inv = e.s % h;
    for (int j = c; j < cols; ++j) a[r][j] = (a[r][j] * inv) % h;
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const PolyQ f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] = (a[i][j] - f * a[r][j]) % h;
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank_over_number_field(const NumberFieldMatrix& m) {
  if (m.empty() || m[0].empty()) return 0;
  const PolyQ& h = m[0][0].minimal_polynomial();
  std::vector<std::vector<PolyQ>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != m[0].size()) throw InputError("ragged number field matrix");
    std::vector<PolyQ> r;
    r.reserve(row.size());
    for (const auto& x : row) {
      if (!(x.minimal_polynomial() == h)) throw InputError("mixed minimal polynomials in one matrix");
      r.push_back(x.residue());
    }
    a.push_back(std::move(r));
  }
  return rank_residues(std::move(a), h);
}

NumberFieldMatrix combination_over_field(const MatrixQ& a, const PolyQ& t, const MatrixQ& b, const PolyQ& u,
                                         const PolyQ& h) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("pencil dimension mismatch");
  const NumberFieldElem tt(h, t);
  const NumberFieldElem uu(h, u);
  NumberFieldMatrix out;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<NumberFieldElem> row;
    for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j) * tt + b(i, j) * uu);
    out.push_back(std::move(row));
  }
  return out;
}

int rank_of_combination(const MatrixQ& a, const PolyQ& t, const MatrixQ& b, const PolyQ& u, const PolyQ& h) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("pencil dimension mismatch");
  if (h.degree() == 1) {
    const Rational theta = -h.coeff(0) / h.coeff(1);
    return rank_exact(t.evaluate(theta) * a + u.evaluate(theta) * b);
  }
  // Irreducibility is the caller's contract here; skip the re-check for speed.
  const PolyQ tr = t % h, ur = u % h;
  std::vector<std::vector<PolyQ>> m;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<PolyQ> row;
    for (int j = 0; j < a.cols(); ++j) row.push_back(tr * a(i, j) + ur * b(i, j));
    m.push_back(std::move(row));
  }
  return rank_residues(std::move(m), h);
}

}  // namespace pencilrank

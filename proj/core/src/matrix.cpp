#include "pencilrank/matrix.hpp"

#include <sstream>

#include "pencilrank/errors.hpp"

namespace pencilrank {

MatrixQ::MatrixQ(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

MatrixQ::MatrixQ(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  if (e_.size() != static_cast<std::size_t>(rows * cols)) {
    throw InputError("matrix entry count does not match dimensions");
  }
}

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  std::vector<Rational> e;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw InputError("ragged matrix literal");
    e.insert(e.end(), row.begin(), row.end());
  }
  return MatrixQ(r, c, std::move(e));
}

MatrixQ MatrixQ::from_double(const Eigen::MatrixXd& m) {
  MatrixQ out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) = Rational::from_double(m(i, j));
  return out;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatrixQ MatrixQ::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of range");
  MatrixQ b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void MatrixQ::set_block(int r0, int c0, const MatrixQ& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw InputError("block out of range");
  }
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool MatrixQ::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Rational MatrixQ::frobenius_norm_squared() const {
  Rational s(0);
  for (const auto& x : e_) s += x * x;
  return s;
}

Eigen::MatrixXd MatrixQ::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_double();
  return m;
}

MatrixQ& MatrixQ::operator+=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix dimension mismatch in sum");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MatrixQ& MatrixQ::operator-=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix dimension mismatch in difference");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

MatrixQ& MatrixQ::operator*=(const Rational& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch in product");
  MatrixQ c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

std::string MatrixQ::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j);
    }
  }
  os << "]";
  return os.str();
}

namespace {

// Rows scaled to integers; `scale` receives the product of the row multipliers.
std::vector<std::vector<Integer>> integer_rows(const MatrixQ& m, Integer* scale) {
  std::vector<std::vector<Integer>> out(static_cast<std::size_t>(m.rows()));
  if (scale) *scale = 1;
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j) {
      Integer d = m(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    auto& row = out[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).numerator() * (l / m(i, j).denominator()));
    if (scale) *scale *= l;
  }
  return out;
}

// Fraction-free echelon reduction in place; returns rank and number of row swaps.
int bareiss(std::vector<std::vector<Integer>>& a, int cols, int& swaps) {
  const int rows = static_cast<int>(a.size());
  Integer prev = 1;
  int r = 0;
  swaps = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++swaps;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

int rank_exact(const MatrixQ& m) {
  if (m.empty()) return 0;
  auto a = integer_rows(m, nullptr);
  int swaps = 0;
  return bareiss(a, m.cols(), swaps);
}

Rational determinant_exact(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return Rational(1);
  Integer scale;
  auto a = integer_rows(m, &scale);
  int swaps = 0;
  const int r = bareiss(a, n, swaps);
  if (r < n) return Rational(0);
  Integer det = a[n - 1][n - 1];
  if (swaps % 2) det = -det;
  return Rational(det, scale);
}

MatrixQ rref(const MatrixQ& m, std::vector<int>* pivots) {
  MatrixQ a = m;
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = a(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

MatrixQ nullspace_basis(const MatrixQ& m) {
  std::vector<int> piv;
  const MatrixQ r = rref(m, &piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  const int nfree = m.cols() - static_cast<int>(piv.size());
  MatrixQ basis(m.cols(), nfree);
  int k = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], k) = -r(static_cast<int>(i), f);
    ++k;
  }
  return basis;
}

std::optional<MatrixQ> inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  std::vector<int> piv;
  const MatrixQ r = rref(hstack(m, MatrixQ::identity(n)), &piv);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[static_cast<std::size_t>(n - 1)] >= n)) {
    return std::nullopt;
  }
  return r.block(0, n, n, n);
}

RankFactorization rank_factorization(const MatrixQ& m) {
  // M = C R where C holds the pivot columns of M and R the nonzero rows of rref(M).
  std::vector<int> piv;
  const MatrixQ r = rref(m, &piv);
  const int k = static_cast<int>(piv.size());
  MatrixQ u(m.rows(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m.rows(); ++i) u(i, j) = m(i, piv[static_cast<std::size_t>(j)]);
  MatrixQ v = r.block(0, 0, k, m.cols()).transpose();
  return {u, v};
}

MatrixQ hstack(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows()) throw InputError("row mismatch in hstack");
  MatrixQ out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

MatrixQ vstack(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.cols()) throw InputError("column mismatch in vstack");
  MatrixQ out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

MatrixQ direct_sum(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

MatrixQ kron(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      out.set_block(i * b.rows(), j * b.cols(), a(i, j) * b);
    }
  return out;
}

MatrixQ vec(const MatrixQ& m) {
  MatrixQ out(m.rows() * m.cols(), 1);
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) out(j * m.rows() + i, 0) = m(i, j);
  return out;
}

int numeric_rank(const Eigen::MatrixXd& m, double threshold) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++r;
  return r;
}

}  // namespace pencilrank

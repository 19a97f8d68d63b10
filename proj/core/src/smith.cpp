#include "pencilrank/smith.hpp"

#include <algorithm>
#include <numeric>

#include "pencilrank/errors.hpp"

namespace pencilrank {

PolyMatrix PolyMatrix::linear(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("pencil dimension mismatch");
  PolyMatrix m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = PolyQ::linear(a(i, j), b(i, j));
  return m;
}

PolyQ poly_determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square polynomial matrix");
  const int n = m.rows();
  if (n == 0) return PolyQ::constant(1);
  if (n == 1) return m(0, 0);
  PolyQ det;
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, cc++) = m(i, k);
      }
    }
    PolyQ term = m(0, j) * poly_determinant(minor);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

namespace {

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<PolyQ> determinantal_divisors(const PolyMatrix& m) {
  const int kmax = std::min(m.rows(), m.cols());
  std::vector<PolyQ> out;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::vector<int>> rs, cs;
    combinations(m.rows(), k, rs);
    combinations(m.cols(), k, cs);
    PolyQ g;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        PolyMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
        g = poly_gcd(g, poly_determinant(sub));
        if (g.is_one()) break;
      }
    out.push_back(g);
  }
  return out;
}

std::vector<PolyQ> smith_form(const PolyMatrix& input) {
  PolyMatrix a = input;
  const int rows = a.rows(), cols = a.cols();
  std::vector<PolyQ> diag;
  const auto swap_rows = [&](int i, int j) {
    for (int c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
  };
  const auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
  };

  for (int t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: nonzero entry of minimal degree in the trailing block.
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (!a(i, j).is_zero() && (pi < 0 || a(i, j).degree() < a(pi, pj).degree())) {
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        const auto [q, r] = divmod(a(i, t), a(t, t));
        for (int c = t; c < cols; ++c) a(i, c) -= q * a(t, c);
        if (!r.is_zero()) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        const auto [q, r] = divmod(a(t, j), a(t, t));
        for (int rr = t; rr < rows; ++rr) a(rr, j) -= q * a(rr, t);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the offending row in.
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (!divides(a(t, t), a(i, j))) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int c = t; c < cols; ++c) a(t, c) += a(bad, c);
    }
    diag.push_back(a(t, t).monic());
  }
done:
  for (std::size_t i = 1; i < diag.size(); ++i) {
    check_internal(divides(diag[i - 1], diag[i]), "Smith invariants fail the divisibility chain");
  }
  if (rows <= 4 && cols <= 4) {
    const auto dd = determinantal_divisors(input);
    PolyQ prev = PolyQ::constant(1);
    for (std::size_t k = 0; k < dd.size(); ++k) {
      if (k >= diag.size()) {
        check_internal(dd[k].is_zero(), "determinantal divisor beyond the normal rank is nonzero");
        continue;
      }
      check_internal(!dd[k].is_zero(), "determinantal divisor vanishes below the normal rank");
      check_internal((dd[k] / prev).monic() == diag[k], "Smith form disagrees with determinantal divisors");
      prev = dd[k];
    }
  }
  return diag;
}

}  // namespace pencilrank

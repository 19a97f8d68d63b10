#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pencilrank::testing {

int gauss_rank(const MatrixQ& m) {
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(i)].push_back(m(i, j).raw());
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (sgn(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
    const auto& prow = a[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < m.rows(); ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const mpq_class f = row[static_cast<std::size_t>(c)] / prow[static_cast<std::size_t>(c)];
      if (sgn(f) == 0) continue;
      for (int k = c; k < m.cols(); ++k) row[static_cast<std::size_t>(k)] -= f * prow[static_cast<std::size_t>(k)];
    }
    ++rank;
  }
  return rank;
}

namespace {

GaussianQ sub(const GaussianQ& x, const GaussianQ& y) { return {x.re - y.re, x.im - y.im}; }
GaussianQ mul(const GaussianQ& x, const GaussianQ& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
GaussianQ div(const GaussianQ& x, const GaussianQ& y) {
  const Rational d = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}
bool is_zero(const GaussianQ& x) { return x.re.is_zero() && x.im.is_zero(); }

}  // namespace

int gauss_rank(const MatrixGQ& m0) {
  MatrixGQ a = m0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (!is_zero(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const auto& prow = a[static_cast<std::size_t>(rank)];
      if (is_zero(row[static_cast<std::size_t>(c)])) continue;
      const GaussianQ f = div(row[static_cast<std::size_t>(c)], prow[static_cast<std::size_t>(c)]);
      for (int k = c; k < cols; ++k) {
        row[static_cast<std::size_t>(k)] = sub(row[static_cast<std::size_t>(k)], mul(f, prow[static_cast<std::size_t>(k)]));
      }
    }
    ++rank;
  }
  return rank;
}

int RecipeBlock::rows() const {
  switch (kind) {
    case Kind::column: return size;
    case Kind::row: return size + 1;
    case Kind::quadratic: return 2 * size;
    default: return size;
  }
}

int RecipeBlock::cols() const {
  switch (kind) {
    case Kind::column: return size + 1;
    case Kind::row: return size;
    case Kind::quadratic: return 2 * size;
    default: return size;
  }
}

int Recipe::m() const {
  int s = 0;
  for (const auto& b : blocks) s += b.rows();
  return s;
}

int Recipe::n() const {
  int s = 0;
  for (const auto& b : blocks) s += b.cols();
  return s;
}

Pencil Recipe::build() const {
  MatrixQ a(m(), n()), b(m(), n());
  int r0 = 0, c0 = 0;
  for (const auto& blk : blocks) {
    const int k = blk.size;
    switch (blk.kind) {
      case RecipeBlock::Kind::column:  // lambda on the diagonal, 1 on the superdiagonal
        for (int i = 0; i < k; ++i) {
          b(r0 + i, c0 + i) = 1;
          a(r0 + i, c0 + i + 1) = 1;
        }
        break;
      case RecipeBlock::Kind::row:
        for (int i = 0; i < k; ++i) {
          b(r0 + i, c0 + i) = 1;
          a(r0 + i + 1, c0 + i) = 1;
        }
        break;
      case RecipeBlock::Kind::jordan:
        for (int i = 0; i < k; ++i) {
          a(r0 + i, c0 + i) = blk.a;
          b(r0 + i, c0 + i) = 1;
          if (i + 1 < k) a(r0 + i, c0 + i + 1) = 1;
        }
        break;
      case RecipeBlock::Kind::infinite:
        for (int i = 0; i < k; ++i) {
          a(r0 + i, c0 + i) = 1;
          if (i + 1 < k) b(r0 + i, c0 + i + 1) = 1;
        }
        break;
      case RecipeBlock::Kind::quadratic:
        for (int i = 0; i < k; ++i) {
          const int r = r0 + 2 * i, c = c0 + 2 * i;
          a(r, c) = blk.a;
          a(r, c + 1) = blk.b;
          a(r + 1, c) = -blk.b;
          a(r + 1, c + 1) = blk.a;
          b(r, c) = 1;
          b(r + 1, c + 1) = 1;
          if (i + 1 < k) {
            a(r, c + 2) = 1;
            a(r + 1, c + 3) = 1;
          }
        }
        break;
    }
    r0 += blk.rows();
    c0 += blk.cols();
  }
  return Pencil(a, b);
}

std::string Recipe::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (i) os << " + ";
    switch (b.kind) {
      case RecipeBlock::Kind::column: os << "L" << b.size; break;
      case RecipeBlock::Kind::row: os << "R" << b.size; break;
      case RecipeBlock::Kind::jordan: os << "J" << b.size << "(" << b.a << ")"; break;
      case RecipeBlock::Kind::infinite: os << "N" << b.size; break;
      case RecipeBlock::Kind::quadratic: os << "Q" << 2 * b.size << "(" << b.a << "," << b.b << ")"; break;
    }
  }
  return os.str();
}

MinimalRanks point_rank_oracle(const Pencil& p, const Recipe& recipe, Field field) {
  std::vector<Rational> real_points;
  std::vector<GaussianQ> complex_points;
  for (const auto& b : recipe.blocks) {
    if (b.kind == RecipeBlock::Kind::jordan) {
      if (std::find(real_points.begin(), real_points.end(), -b.a) == real_points.end()) real_points.push_back(-b.a);
    } else if (b.kind == RecipeBlock::Kind::quadratic && field == Field::complex) {
      for (const Rational& im : {b.b, -b.b}) {
        const GaussianQ z{-b.a, im};
        if (std::none_of(complex_points.begin(), complex_points.end(),
                         [&](const GaussianQ& w) { return w.re == z.re && w.im == z.im; })) {
          complex_points.push_back(z);
        }
      }
    }
  }
  std::vector<int> ranks;
  for (const auto& x : real_points) ranks.push_back(gauss_rank(p.a() + x * p.b()));
  for (const auto& z : complex_points) {
    MatrixGQ m(static_cast<std::size_t>(p.m()), std::vector<GaussianQ>(static_cast<std::size_t>(p.n())));
    for (int i = 0; i < p.m(); ++i)
      for (int j = 0; j < p.n(); ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {p.a()(i, j) + z.re * p.b()(i, j),
                                                                       z.im * p.b()(i, j)};
      }
    ranks.push_back(gauss_rank(m));
  }
  ranks.push_back(gauss_rank(p.b()));  // infinity
  // A rational point away from every eigenvalue has the normal rank.
  Rational generic(7, 3);
  while (std::find(real_points.begin(), real_points.end(), generic) != real_points.end()) generic += Rational(1, 5);
  const int g = gauss_rank(p.a() + generic * p.b());
  ranks.push_back(g);
  ranks.push_back(g);
  std::sort(ranks.begin(), ranks.end());
  return {ranks[1], ranks[0]};
}

namespace {

double round9(double x) {
  const double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

StructureSummary expected_summary(const Recipe& recipe, Field field) {
  StructureSummary s;
  for (const auto& b : recipe.blocks) {
    switch (b.kind) {
      case RecipeBlock::Kind::column: s.min_col_indices.push_back(b.size); break;
      case RecipeBlock::Kind::row: s.min_row_indices.push_back(b.size); break;
      case RecipeBlock::Kind::infinite: s.infinite_degrees.push_back(b.size); break;
      case RecipeBlock::Kind::jordan: s.finite.push_back({round9(-b.a.to_double()), 0.0, b.size, false}); break;
      case RecipeBlock::Kind::quadratic: {
        const double re = round9(-b.a.to_double()), im = round9(std::abs(b.b.to_double()));
        if (field == Field::real) {
          s.finite.push_back({re, im, b.size, true});
        } else {
          s.finite.push_back({re, im, b.size, false});
          s.finite.push_back({re, -im, b.size, false});
        }
        break;
      }
    }
  }
  std::sort(s.min_col_indices.begin(), s.min_col_indices.end());
  std::sort(s.min_row_indices.begin(), s.min_row_indices.end());
  std::sort(s.infinite_degrees.begin(), s.infinite_degrees.end());
  std::sort(s.finite.begin(), s.finite.end());
  return s;
}

StructureSummary summarize(const KroneckerStructure& ks) {
  StructureSummary s;
  s.min_col_indices = ks.min_col_indices;
  s.min_row_indices = ks.min_row_indices;
  s.infinite_degrees = ks.infinite_divisor_degrees;
  for (const auto& d : ks.finite_divisors) {
    const auto& e = d.eigenvalue;
    const bool pair = e.kind == EigenvalueDescriptor::Kind::complex_pair;
    s.finite.push_back({round9(e.approx.real()), round9(pair ? std::abs(e.approx.imag()) : e.approx.imag()), d.power,
                        pair});
  }
  std::sort(s.min_col_indices.begin(), s.min_col_indices.end());
  std::sort(s.min_row_indices.begin(), s.min_row_indices.end());
  std::sort(s.infinite_degrees.begin(), s.infinite_degrees.end());
  std::sort(s.finite.begin(), s.finite.end());
  return s;
}

std::string StructureSummary::to_string() const {
  std::ostringstream os;
  const auto list = [&](const std::vector<int>& v) {
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
  };
  os << "cols ";
  list(min_col_indices);
  os << " rows ";
  list(min_row_indices);
  os << " inf ";
  list(infinite_degrees);
  os << " finite";
  for (const auto& d : finite) os << " [" << d.re << (d.pair ? "+-" : "+") << d.im << "i]^" << d.power;
  return os.str();
}

}  // namespace pencilrank::testing

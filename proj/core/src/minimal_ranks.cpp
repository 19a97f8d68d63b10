#include "pencilrank/minimal_ranks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "detail/descriptor_value.hpp"
#include "pencilrank/errors.hpp"
#include "pencilrank/factor.hpp"
#include "pencilrank/number_field.hpp"

namespace pencilrank {

std::string MinimalRanks::to_string() const {
  return "(" + std::to_string(r) + ", " + std::to_string(s) + ")";
}

RegularCounts regular_counts(const KroneckerStructure& ks) {
  RegularCounts rc;
  rc.j = static_cast<int>(ks.infinite_divisor_degrees.size());
  for (const auto& d : ks.finite_divisors) {
    if (d.eigenvalue.kind == EigenvalueDescriptor::Kind::complex_pair) continue;
    auto it = std::find_if(rc.per_eigenvalue_block_counts.begin(), rc.per_eigenvalue_block_counts.end(),
                           [&](const auto& e) { return e.first == d.eigenvalue; });
    if (it == rc.per_eigenvalue_block_counts.end()) {
      rc.per_eigenvalue_block_counts.emplace_back(d.eigenvalue, 1);
    } else {
      ++it->second;
    }
  }
  std::vector<int> counts;
  for (const auto& e : rc.per_eigenvalue_block_counts) counts.push_back(e.second);
  std::sort(counts.rbegin(), counts.rend());
  rc.k_s = counts.size() > 0 ? counts[0] : 0;
  rc.k_r = counts.size() > 1 ? counts[1] : 0;
  return rc;
}

namespace {

MinimalRanks regular_part_ranks(const KroneckerStructure& ks) {
  const RegularCounts rc = regular_counts(ks);
  const int q = ks.regular_size();
  std::array<int, 3> k{rc.j, rc.k_s, rc.k_r};
  std::sort(k.rbegin(), k.rend());
  // Ties between j and k_s give the same pair whichever is taken as largest.
  return {q - k[1], q - k[0]};
}

}  // namespace

MinimalRanks minimal_ranks_regular(const KroneckerStructure& ks) {
  if (ks.has_singular_part()) throw InputError("structure has a singular part; the regular rule does not apply");
  return regular_part_ranks(ks);
}

int minimal_ranks_singular_part(const KroneckerStructure& ks) {
  return std::accumulate(ks.min_col_indices.begin(), ks.min_col_indices.end(), 0) +
         std::accumulate(ks.min_row_indices.begin(), ks.min_row_indices.end(), 0);
}

MinimalRanks minimal_ranks_from_structure(const KroneckerStructure& ks) {
  const int sbar = minimal_ranks_singular_part(ks);
  const MinimalRanks reg = regular_part_ranks(ks);
  return {reg.r + sbar, reg.s + sbar};
}

MinimalRanks minimal_ranks(const Pencil& p, Field field) {
  return minimal_ranks_from_structure(kronecker_structure(p, field));
}

namespace {

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

MatrixQ submatrix(const MatrixQ& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  MatrixQ s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
  return s;
}

// Interpolates a polynomial of degree <= k through values at x = 0..k.
PolyQ interpolate(const std::vector<Rational>& values) {
  const int k = static_cast<int>(values.size()) - 1;
  PolyQ out;
  for (int i = 0; i <= k; ++i) {
    if (values[static_cast<std::size_t>(i)].is_zero()) continue;
    PolyQ basis = PolyQ::constant(1);
    Rational denom(1);
    for (int j = 0; j <= k; ++j) {
      if (j == i) continue;
      basis *= PolyQ::linear(-j, 1);
      denom *= Rational(i - j);
    }
    out += basis * (values[static_cast<std::size_t>(i)] / denom);
  }
  return out;
}

std::vector<int> pivot_indices(const MatrixQ& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return piv;
}

}  // namespace

DropPointSet rank_drop_points(const MatrixQ& a, const MatrixQ& b, Field field) {
  const Pencil p(a, b);
  DropPointSet out;
  out.normal_rank = normal_rank(p);
  const int nr = out.normal_rank;
  const int m = p.m(), n = p.n();

  const auto add_point = [&](const EigenvalueDescriptor& where, int rank) {
    for (const auto& q : out.points)
      if (q.where == where) return;
    out.points.push_back({where, rank});
  };
  add_point(EigenvalueDescriptor::rational_value(0), rank_exact(a));
  add_point(EigenvalueDescriptor::infinity(), rank_exact(b));
  if (nr == 0) return out;

  // Minor selection: everything in the certified envelope, a seeded sample otherwise.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> minors;
  if (m <= 4 && n <= 4) {
    for (const auto& r : all_subsets(m, nr))
      for (const auto& c : all_subsets(n, nr)) minors.emplace_back(r, c);
  } else {
    out.probabilistic = true;
    // One minor guaranteed nonzero: pivot rows and columns at a generic point.
    int c0 = 0;
    while (rank_exact(p.combination(1, c0)) < nr) ++c0;
    const MatrixQ g = p.combination(1, c0);
    minors.emplace_back(pivot_indices(g.transpose()), pivot_indices(g));
    std::mt19937_64 rng(0x5eed0fULL + static_cast<unsigned long long>(m * 131 + n));
    std::vector<int> rows(static_cast<std::size_t>(m)), cols(static_cast<std::size_t>(n));
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    for (int s = 0; s < 2 * m * n; ++s) {
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      std::vector<int> r(rows.begin(), rows.begin() + nr), c(cols.begin(), cols.begin() + nr);
      std::sort(r.begin(), r.end());
      std::sort(c.begin(), c.end());
      minors.emplace_back(r, c);
    }
  }

  std::vector<MatrixQ> samples;
  for (int x = 0; x <= nr; ++x) samples.push_back(p.combination(1, x));
  PolyQ g;
  for (const auto& [r, c] : minors) {
    std::vector<Rational> values;
    for (const auto& s : samples) values.push_back(determinant_exact(submatrix(s, r, c)));
    g = poly_gcd(g, interpolate(values));
    if (g.is_one()) break;
  }
  check_internal(!g.is_zero(), "all maximal minors vanish below the normal rank");

  for (const auto& f : factor_squarefree(squarefree_part(g))) {
    if (f.degree() == 1) {
      const Rational root = -f.coeff(0);
      add_point(EigenvalueDescriptor::rational_value(root), rank_exact(p.combination(1, root)));
      continue;
    }
    std::vector<EigenvalueDescriptor> roots;
    for (auto& d : root_descriptors(f, Field::complex)) {
      if (d.kind == EigenvalueDescriptor::Kind::real_algebraic || field == Field::complex) roots.push_back(d);
    }
    if (roots.empty()) continue;
    // Conjugate roots share one rank: evaluate once in Q[x]/(f).
    const int rank = rank_of_combination(a, PolyQ::constant(1), b, PolyQ::linear(0, 1), f);
    for (const auto& d : roots) add_point(d, rank);
  }
  return out;
}

OracleResult minimal_ranks_oracle_detailed(const Pencil& p, Field field) {
  OracleResult res;
  res.drops = rank_drop_points(p.a(), p.b(), field);
  res.probabilistic = res.drops.probabilistic;
  const int nr = res.drops.normal_rank;
  int s = nr;
  for (const auto& q : res.drops.points) s = std::min(s, q.rank);
  if (s == nr) {
    res.ranks = {nr, nr};
    res.minimizer_count = 0;
    return res;
  }
  int minimizers = 0;
  int r = nr;
  for (const auto& q : res.drops.points) {
    if (q.rank == s) ++minimizers;
  }
  if (minimizers >= 2) {
    r = s;
  } else {
    for (const auto& q : res.drops.points)
      if (q.rank != s) r = std::min(r, q.rank);
  }
  res.minimizer_count = minimizers;
  res.ranks = {r, s};
  return res;
}

MinimalRanks minimal_ranks_oracle(const Pencil& p, Field field) { return minimal_ranks_oracle_detailed(p, field).ranks; }

namespace {

std::string hp_text(const detail::HPComplex& z, int digits) {
  const detail::HPFloat eps("1e-80");
  std::string re = z.real().str(digits, std::ios_base::scientific);
  if (abs(z.imag()) <= eps) return re;
  const std::string im = abs(z.imag()).str(digits, std::ios_base::scientific);
  return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

AttainResult::Row row_for_point(const EigenvalueDescriptor& d) {
  AttainResult::Row row;
  row.point = d;
  if (d.kind == EigenvalueDescriptor::Kind::infinite) {
    row.modulus = PolyQ::linear(0, 1);
    row.t = PolyQ();
    row.u = PolyQ::constant(1);
    row.decimal = {"0", "1"};
  } else if (d.kind == EigenvalueDescriptor::Kind::rational) {
    row.modulus = PolyQ::linear(-d.value, 1);
    row.t = PolyQ::constant(1);
    row.u = PolyQ::constant(d.value);
    row.decimal = {"1", hp_text(detail::HPComplex(detail::to_hp(d.value)), 50)};
  } else {
    row.modulus = d.min_poly;
    row.t = PolyQ::constant(1);
    row.u = PolyQ::linear(0, 1);
    row.decimal = {"1", hp_text(detail::hp_value(d), 50)};
  }
  return row;
}

bool rational_point(const EigenvalueDescriptor& d) {
  return d.kind == EigenvalueDescriptor::Kind::rational || d.kind == EigenvalueDescriptor::Kind::infinite;
}

// Projective points (1, c) for c = 0, inf, 1, -1, 2, -2, ... in the requested start order.
std::vector<EigenvalueDescriptor> generic_candidates(bool infinity_first, int count) {
  std::vector<EigenvalueDescriptor> out;
  if (infinity_first) {
    out.push_back(EigenvalueDescriptor::infinity());
    out.push_back(EigenvalueDescriptor::rational_value(0));
  } else {
    out.push_back(EigenvalueDescriptor::rational_value(0));
    out.push_back(EigenvalueDescriptor::infinity());
  }
  for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
    out.push_back(EigenvalueDescriptor::rational_value(k));
    out.push_back(EigenvalueDescriptor::rational_value(-k));
  }
  return out;
}

int point_rank(const Pencil& p, const EigenvalueDescriptor& d) { return row_rank(p, row_for_point(d)); }

}  // namespace

int row_rank(const Pencil& p, const AttainResult::Row& row) {
  return rank_of_combination(p.a(), row.t, p.b(), row.u, row.modulus);
}

AttainResult attain_transform(const Pencil& p, Field field) {
  AttainResult res;
  res.ranks = minimal_ranks(p, field);
  const OracleResult oracle = minimal_ranks_oracle_detailed(p, field);
  check_internal(oracle.ranks == res.ranks, "structural and projective minimal ranks disagree");
  const int nr = oracle.drops.normal_rank;
  const int r = res.ranks.r, s = res.ranks.s;

  // Drop points ordered with rational ones first so the transform stays rational when possible.
  std::vector<RankPoint> pts = oracle.drops.points;
  std::stable_sort(pts.begin(), pts.end(), [](const RankPoint& x, const RankPoint& y) {
    return rational_point(x.where) && !rational_point(y.where);
  });

  const int budget = 2 * (p.m() + p.n()) + 6;
  EigenvalueDescriptor s_point;
  bool s_found = false;
  if (s < nr) {
    for (const auto& q : pts)
      if (q.rank == s) {
        s_point = q.where;
        s_found = true;
        break;
      }
  } else {
    for (const auto& c : generic_candidates(true, budget))
      if (point_rank(p, c) == s) {
        s_point = c;
        s_found = true;
        break;
      }
  }
  check_internal(s_found, "no point attains the second minimal rank");

  EigenvalueDescriptor r_point;
  bool r_found = false;
  if (r < nr) {
    for (const auto& q : pts)
      if (q.rank == r && !(q.where == s_point)) {
        r_point = q.where;
        r_found = true;
        break;
      }
  } else {
    for (const auto& c : generic_candidates(false, budget))
      if (!(c == s_point) && point_rank(p, c) == r) {
        r_point = c;
        r_found = true;
        break;
      }
  }
  check_internal(r_found, "no point attains the first minimal rank");

  res.rows = {row_for_point(r_point), row_for_point(s_point)};
  res.is_rational = rational_point(r_point) && rational_point(s_point);
  if (res.is_rational) {
    const auto coords = [](const EigenvalueDescriptor& d) -> std::pair<Rational, Rational> {
      if (d.kind == EigenvalueDescriptor::Kind::infinite) return {Rational(0), Rational(1)};
      return {Rational(1), d.value};
    };
    const auto [t11, t12] = coords(r_point);
    const auto [t21, t22] = coords(s_point);
    res.rational = Gl2Transform{t11, t12, t21, t22};
    check_internal(!res.rational.determinant().is_zero(), "attaining transform is singular");
    const Pencil q = p.apply(res.rational);
    res.verified_ranks = {rank_exact(q.a()), rank_exact(q.b())};
  } else {
    res.verified_ranks = {row_rank(p, res.rows[0]), row_rank(p, res.rows[1])};
  }
  check_internal(res.verified_ranks[0] == r && res.verified_ranks[1] == s,
                 "attaining transform does not reach the minimal ranks");
  return res;
}

bool in_b_rs(const Pencil& p, int r, int s, Field field) {
  if (r < s) throw InputError("in_b_rs expects r >= s");
  const MinimalRanks rho = minimal_ranks(p, field);
  return rho.r <= r && rho.s <= s;
}

bool in_c(const Pencil& p) {
  if (p.m() != p.n() || p.n() == 0 || p.n() % 2 != 0) return false;
  const MinimalRanks rho = minimal_ranks(p, Field::real);
  return rho.r == p.n() && rho.s == p.n();
}

}  // namespace pencilrank

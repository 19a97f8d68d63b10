#include "generators.hpp"

#include <algorithm>
#include <set>

#include "pencilrank/matrix.hpp"

namespace pencilrank::testing {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  return Rational(Integer(uniform_int(rng, -num_bound, num_bound)), Integer(uniform_int(rng, 1, den_bound)));
}

namespace {

Rational pooled_eigenvalue(Rng& rng) {
  static const std::vector<Rational> pool = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2),
                                             Rational(-3, 2)};
  return pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))];
}

}  // namespace

Recipe random_recipe(Rng& rng, int max_m, int max_n, bool allow_singular) {
  using K = RecipeBlock::Kind;
  for (;;) {
    Recipe r;
    const int target = uniform_int(rng, 1, 4);
    for (int attempt = 0; attempt < 12 && static_cast<int>(r.blocks.size()) < target; ++attempt) {
      RecipeBlock b;
      const int roll = uniform_int(rng, 0, allow_singular ? 9 : 5);
      if (roll <= 2) {
        b.kind = K::jordan;
        b.size = uniform_int(rng, 1, 3);
        b.a = pooled_eigenvalue(rng);
      } else if (roll == 3) {
        b.kind = K::infinite;
        b.size = uniform_int(rng, 1, 2);
      } else if (roll <= 5) {
        b.kind = K::quadratic;
        b.size = uniform_int(rng, 1, 2) == 1 || max_m < 4 ? 1 : 2;
        b.a = Rational(uniform_int(rng, -1, 1));
        b.b = Rational(uniform_int(rng, 1, 2)) * (uniform_int(rng, 0, 1) ? 1 : -1);
      } else if (roll <= 7) {
        b.kind = K::column;
        b.size = uniform_int(rng, 0, 2);
      } else {
        b.kind = K::row;
        b.size = uniform_int(rng, 0, 2);
      }
      if (r.m() + b.rows() > max_m || r.n() + b.cols() > max_n) continue;
      r.blocks.push_back(b);
    }
    if (!r.blocks.empty() && r.m() > 0 && r.n() > 0) return r;
  }
}

MatrixQ random_unimodular(Rng& rng, int n) {
  MatrixQ u = MatrixQ::identity(n);
  if (n < 1) return u;
  for (int step = 0; step < 3 * n; ++step) {
    const int i = uniform_int(rng, 0, n - 1), j = uniform_int(rng, 0, n - 1);
    if (i == j) {
      for (int c = 0; c < n; ++c) u(i, c) = -u(i, c);
      continue;
    }
    const Rational f(uniform_int(rng, -2, 2));
    for (int c = 0; c < n; ++c) u(i, c) += f * u(j, c);
  }
  for (int i = n - 1; i > 0; --i) {
    const int j = uniform_int(rng, 0, i);
    for (int c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
  }
  return u;
}

Pencil scramble(const Pencil& p, Rng& rng) {
  return p.equivalent(random_unimodular(rng, p.m()), random_unimodular(rng, p.n()));
}

MatrixQ random_integer_matrix(Rng& rng, int m, int n, int bound) {
  MatrixQ out(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = Rational(uniform_int(rng, -bound, bound));
  return out;
}

MatrixQ random_invertible(Rng& rng, int n, int bound) {
  for (;;) {
    MatrixQ m = random_integer_matrix(rng, n, n, bound);
    if (gauss_rank(m) == n) return m;
  }
}

std::map<std::string, Rational> random_binding(const FamilyRecord& record, Rng& rng) {
  std::map<std::string, Rational> out;
  std::vector<Rational> used;
  std::set<std::pair<Rational, Rational>> pairs;
  for (const auto& b : record.blocks) {
    if (b.kind == BlockSpec::Kind::jordan) {
      if (out.count(b.symbol)) continue;
      Rational v;
      do {
        v = random_rational(rng, 6, 3);
      } while (std::find(used.begin(), used.end(), v) != used.end());
      used.push_back(v);
      out[b.symbol] = v;
    } else if (b.kind == BlockSpec::Kind::quadratic) {
      if (out.count(b.symbol) && out.count(b.symbol2)) continue;
      Rational a, bb;
      do {
        a = random_rational(rng, 4, 2);
        bb = random_rational(rng, 4, 2);
      } while (bb.is_zero() || pairs.count({a, bb.abs()}));
      pairs.insert({a, bb.abs()});
      out[b.symbol] = a;
      out[b.symbol2] = bb;
    }
  }
  return out;
}

std::vector<const FamilyRecord*> table_families(bool with_equivalent_only) {
  std::vector<const FamilyRecord*> out;
  for (const auto& f : Catalog::builtin().families()) {
    if (!with_equivalent_only || f.has_equivalent()) out.push_back(&f);
  }
  return out;
}

PlantedPolynomial planted_polynomial(Rng& rng, int m, int n) {
  const int budget = std::min(m, n);
  std::vector<int> ranks(3, 0);
  int left = budget;
  // Every coefficient gets rank >= 1 while the budget allows, extra rank goes to random slots.
  for (int k = 0; k < 3 && left > 0; ++k) {
    ranks[static_cast<std::size_t>(k)] = 1;
    --left;
  }
  while (left > 0 && uniform_int(rng, 0, 1)) {
    ++ranks[static_cast<std::size_t>(uniform_int(rng, 0, 2))];
    --left;
  }
  std::vector<MatrixQ> coeffs;
  int offset = 0;
  for (int k = 0; k < 3; ++k) {
    MatrixQ c(m, n);
    for (int i = 0; i < ranks[static_cast<std::size_t>(k)]; ++i, ++offset) {
      c(offset, offset) = Rational(uniform_int(rng, 1, 3)) * (uniform_int(rng, 0, 1) ? 1 : -1);
    }
    coeffs.push_back(c);
  }
  const MatrixQ t = random_invertible(rng, 3, 2);
  const MatrixPolynomial planted(coeffs);
  PlantedPolynomial out{planted.transformed(t).equivalent(random_invertible(rng, m, 2), random_invertible(rng, n, 2)),
                        ranks};
  std::sort(out.tuple.rbegin(), out.tuple.rend());
  return out;
}

}  // namespace pencilrank::testing

#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pencilrank/catalog.hpp"
#include "pencilrank/pencil.hpp"
#include "pencilrank/polynomial_ranks.hpp"

namespace pencilrank::testing {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

/// Random small rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(Rng& rng, int num_bound, int den_bound);

/// Random recipe fitting in max_m x max_n with at least one block. Eigenvalues come from a small pool
/// so repeated eigenvalues and several blocks per eigenvalue are common.
Recipe random_recipe(Rng& rng, int max_m, int max_n, bool allow_singular = true);

/// Integer matrix with determinant +-1, a product of elementary operations.
MatrixQ random_unimodular(Rng& rng, int n);

/// P A U^T + lambda P B U^T with random unimodular P, U.
Pencil scramble(const Pencil& p, Rng& rng);

MatrixQ random_integer_matrix(Rng& rng, int m, int n, int bound);

/// Invertible integer matrix with entries in [-bound, bound].
MatrixQ random_invertible(Rng& rng, int n, int bound);

/// Parameter values satisfying the family constraints: distinct Jordan values, nonzero b, distinct
/// quadratic blocks.
std::map<std::string, Rational> random_binding(const FamilyRecord& record, Rng& rng);

/// Catalog families, optionally only those listing an equivalent pencil.
std::vector<const FamilyRecord*> table_families(bool with_equivalent_only);

/// d = 3 polynomial with planted rank tuple: coefficients of disjoint support and ranks r_k, mixed by
/// random invertible T, L, R.
struct PlantedPolynomial {
  MatrixPolynomial polynomial;
  std::vector<int> tuple;  // descending
};
PlantedPolynomial planted_polynomial(Rng& rng, int m, int n);

}  // namespace pencilrank::testing

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pencilrank/polynomial.hpp"

namespace pencilrank {

struct IrreducibleFactor {
  PolyQ poly;  // monic, irreducible over Q
  int multiplicity = 0;
};

/// Complete factorization over Q into monic irreducibles (constant content dropped).
/// Factors are ordered by degree, then by coefficients.
std::vector<IrreducibleFactor> factor_over_q(const PolyQ& p);

/// Monic irreducible factors of a squarefree polynomial.
std::vector<PolyQ> factor_squarefree(const PolyQ& p);

bool is_irreducible(const PolyQ& p);

/// Double-precision approximations of all complex roots (squarefree part), via high-precision refinement.
std::vector<std::complex<double>> approximate_roots(const PolyQ& p);

/// Real roots of p rendered as decimal strings with `digits` significant digits, increasing order.
std::vector<std::string> real_roots_decimal(const PolyQ& p, int digits);

/// Strict weak ordering on polynomials used for deterministic output.
bool poly_less(const PolyQ& a, const PolyQ& b);

}  // namespace pencilrank

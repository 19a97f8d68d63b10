#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <vector>

#include "pencilrank/polynomial.hpp"

namespace pencilrank::detail {

using HPFloat = boost::multiprecision::cpp_bin_float_100;
using HPComplex = boost::multiprecision::cpp_complex_100;

HPFloat to_hp(const Rational& r);

/// All complex roots of a squarefree polynomial to roughly 90 significant digits
/// (Aberth iteration seeded from companion-matrix eigenvalues).
std::vector<HPComplex> hp_roots(const PolyQ& squarefree);

HPComplex hp_evaluate(const PolyQ& p, const HPComplex& z);

}  // namespace pencilrank::detail

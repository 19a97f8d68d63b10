#pragma once

#include <vector>

#include "pencilrank/matrix.hpp"
#include "pencilrank/polynomial.hpp"

namespace pencilrank {

/// Element of Q[x]/(h) for a monic irreducible h. The residue has degree < deg h.
class NumberFieldElem {
 public:
  /// Checks that `minimal_polynomial` is monic and irreducible, reduces `residue`.
  NumberFieldElem(PolyQ minimal_polynomial, const PolyQ& residue);

  /// The class of x, i.e. the generator theta of the field.
  static NumberFieldElem generator(const PolyQ& minimal_polynomial);
  static NumberFieldElem from_rational(const PolyQ& minimal_polynomial, const Rational& value);

  const PolyQ& minimal_polynomial() const { return h_; }
  const PolyQ& residue() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }

  /// Multiplicative inverse; throws InputError for zero.
  NumberFieldElem inverse() const;

  friend NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b);
  friend NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b);
  friend NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b);
  friend NumberFieldElem operator*(const Rational& c, const NumberFieldElem& a);
  friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b);

 private:
  struct Unchecked {};
  NumberFieldElem(Unchecked, PolyQ h, PolyQ r) : h_(std::move(h)), r_(std::move(r)) {}
  static void require_same(const NumberFieldElem& a, const NumberFieldElem& b);

  PolyQ h_;
  PolyQ r_;
};

using NumberFieldMatrix = std::vector<std::vector<NumberFieldElem>>;

/// Rank by Gaussian elimination in Q[x]/(h). All entries must share one modulus,
/// otherwise std::invalid_argument (InputError) is thrown.
int rank_over_number_field(const NumberFieldMatrix& m);

/// Matrix t*A + u*B with t, u given as residues (polynomials in theta) modulo h.
NumberFieldMatrix combination_over_field(const MatrixQ& a, const PolyQ& t, const MatrixQ& b, const PolyQ& u,
                                         const PolyQ& h);

/// rank(t A + u B) at (t, u) with entries in Q[theta], theta a root of h.
int rank_of_combination(const MatrixQ& a, const PolyQ& t, const MatrixQ& b, const PolyQ& u, const PolyQ& h);

}  // namespace pencilrank

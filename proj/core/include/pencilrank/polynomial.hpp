#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pencilrank/rational.hpp"

namespace pencilrank {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coefficients);
  PolyQ(std::initializer_list<Rational> coefficients);

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, int degree);
  /// c0 + c1 x
  static PolyQ linear(const Rational& c0, const Rational& c1);
  /// Monic polynomial with the given roots.
  static PolyQ from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  const std::vector<Rational>& coefficients() const { return c_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  PolyQ derivative() const;
  PolyQ monic() const;
  /// Scales to a polynomial with coprime integer coefficients and positive leading coefficient.
  std::vector<Integer> primitive_integer() const;

  /// x^deg p(1/x).
  PolyQ reversed(int as_degree) const;
  /// p(x + shift).
  PolyQ shifted(const Rational& shift) const;
  /// (c x + d)^N p((a x + b)/(c x + d)) for N = degree_hint (>= degree of p).
  PolyQ mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
               int degree_hint) const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend PolyQ operator-(const PolyQ& a);
  /// Exact quotient; throws InternalError if the division leaves a remainder.
  friend PolyQ operator/(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator%(const PolyQ& a, const PolyQ& b);

  friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

  /// e.g. "x^2 - 2" with the given variable name.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
bool divides(const PolyQ& d, const PolyQ& p);

/// Monic gcd; gcd(0, 0) = 0.
PolyQ poly_gcd(const PolyQ& p, const PolyQ& q);
PolyQ poly_lcm(const PolyQ& p, const PolyQ& q);

struct ExtendedGcd {
  PolyQ g;  // monic gcd
  PolyQ s;  // s p + t q = g
  PolyQ t;
};
ExtendedGcd poly_extended_gcd(const PolyQ& p, const PolyQ& q);

PolyQ poly_pow(const PolyQ& p, unsigned exponent);

/// p / gcd(p, p'), made monic. Zero stays zero.
PolyQ squarefree_part(const PolyQ& p);

/// Yun's algorithm: p = lc * prod f_i^i with f_i squarefree, pairwise coprime, monic.
/// Only factors of positive degree are returned.
std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p);

/// Largest e with f^e | p (f nonconstant, p nonzero).
int multiplicity(const PolyQ& f, const PolyQ& p);

}  // namespace pencilrank

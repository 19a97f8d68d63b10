#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pencilrank/pencil.hpp"
#include "pencilrank/polynomial.hpp"
#include "pencilrank/sturm.hpp"

namespace pencilrank {

/// An eigenvalue lambda0 of A + lambda B, i.e. a root of an invariant polynomial, kept symbolic.
struct EigenvalueDescriptor {
  enum class Kind {
    rational,        // value
    real_algebraic,  // min_poly + isolating interval; index = position among the real roots
    complex_pair,    // min_poly; index = position among roots with positive imaginary part
    complex_root,    // one root of a conjugate pair (complex field); upper = imaginary part > 0
    infinite
  };

  Kind kind = Kind::rational;
  Rational value;
  PolyQ min_poly;
  RootInterval interval{Rational(0), Rational(0)};
  int index = 0;
  bool upper = true;
  std::complex<double> approx;

  static EigenvalueDescriptor rational_value(const Rational& v);
  static EigenvalueDescriptor infinity();

  bool is_real() const { return kind == Kind::rational || kind == Kind::real_algebraic; }
  bool is_finite() const { return kind != Kind::infinite; }
  /// Degree of the underlying irreducible factor (1 for rationals, 0 for infinity).
  int degree() const;
  /// Number of columns one divisor of power 1 occupies in a real (or complex) canonical form.
  int size_weight() const { return kind == Kind::complex_pair ? 2 : 1; }
  std::string to_string() const;

  friend bool operator==(const EigenvalueDescriptor& a, const EigenvalueDescriptor& b);
};

/// Deterministic ordering: finite before infinite, then by numeric position.
bool descriptor_less(const EigenvalueDescriptor& a, const EigenvalueDescriptor& b);

/// All roots of a monic irreducible polynomial as descriptors over the given field.
std::vector<EigenvalueDescriptor> root_descriptors(const PolyQ& irreducible, Field field);

struct ElementaryDivisor {
  EigenvalueDescriptor eigenvalue;
  int power = 0;
  friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
};

struct KroneckerStructure {
  int m = 0;
  int n = 0;
  Field field = Field::real;
  int normal_rank = 0;
  std::vector<int> min_col_indices;  // ascending, zeros retained
  std::vector<int> min_row_indices;
  std::vector<ElementaryDivisor> finite_divisors;
  std::vector<int> infinite_divisor_degrees;  // ascending

  /// Size of the regular part: sum of finite divisor degrees plus infinite degrees.
  int regular_size() const;
  bool has_singular_part() const { return !min_col_indices.empty() || !min_row_indices.empty(); }
  /// Throws InternalError when the row/column budgets or the normal-rank identity fail.
  void check_invariants() const;
  std::string to_string() const;

  friend bool operator==(const KroneckerStructure&, const KroneckerStructure&) = default;
};

/// Rank of A + lambda B over Q(lambda).
int normal_rank(const Pencil& p);

std::vector<ElementaryDivisor> finite_structure(const Pencil& p, Field field);

/// Degrees of the infinite elementary divisors, ascending.
std::vector<int> infinite_structure(const Pencil& p);

struct MinimalIndices {
  std::vector<int> columns;  // ascending
  std::vector<int> rows;
};
MinimalIndices minimal_indices(const Pencil& p);

KroneckerStructure kronecker_structure(const Pencil& p, Field field);

}  // namespace pencilrank

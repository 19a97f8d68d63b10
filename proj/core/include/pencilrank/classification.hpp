#pragma once

#include <array>
#include <map>
#include <string>

#include "pencilrank/catalog.hpp"
#include "pencilrank/kronecker.hpp"
#include "pencilrank/pencil.hpp"

namespace pencilrank {

/// A family parameter: exact rational, or an algebraic number given by its minimal polynomial
/// (with the index of the root among the real roots) plus an approximation.
struct ParamValue {
  bool is_rational = true;
  Rational value;
  PolyQ min_poly;
  int root_index = 0;
  double approx = 0.0;

  static ParamValue rational(const Rational& v);
  std::string to_string() const;
};

struct FamilyLabel {
  std::string name;
  int m = 0;
  int n = 0;
  int prime_count = 0;
  std::map<std::string, ParamValue> parameters;
};

struct Padding {
  int zero_rows = 0;
  int zero_cols = 0;
  bool transposed = false;
};

struct Classification {
  FamilyLabel label;
  Padding padding;
  /// GL2 change of basis applied first to move an infinite eigenvalue to a finite one.
  Gl2Transform mobius;
  /// False only for the zero pencil, which reduces to the empty 0x0 form.
  bool in_catalog = true;
};

/// Name used for the empty form left after stripping a zero pencil.
inline constexpr const char* kZeroFamily = "0";

/// Block-diagonal canonical pencil of a family; rational parameters only.
Pencil canonical_representative(const FamilyLabel& label);
Pencil canonical_representative(const std::string& family, const std::map<std::string, Rational>& params);

/// Equivalent pencil listed with the family, with symbolic entries bound from `params`.
Pencil equivalent_representative(const FamilyRecord& record, const std::map<std::string, Rational>& params);

/// Requires the pencil to reduce to at most 4x4 once zero minimal indices are stripped.
Classification classify(const Pencil& p);

/// (rank [A B], rank [A^T B^T], dim span{A, B})
std::array<int, 3> multilinear_rank(const Pencil& p);

int tensor_rank_lookup(const FamilyLabel& label);

struct EquivalenceResult {
  bool equivalent = false;
  /// True when decided in exact rational arithmetic; false when the Moebius search ran in
  /// 100-digit floating point.
  bool certified = true;
};

EquivalenceResult verify_equivalence_detailed(const Pencil& p1, const Pencil& p2);
bool verify_equivalence(const Pencil& p1, const Pencil& p2);

}  // namespace pencilrank

#pragma once

#include <vector>

#include "pencilrank/polynomial.hpp"

namespace pencilrank {

/// Interval endpoint: a rational or one of the two infinities.
struct Bound {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  Rational value;

  Bound(const Rational& v) : kind(Kind::finite), value(v) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Bound(T v) : kind(Kind::finite), value(v) {}  // NOLINT(google-explicit-constructor)
  static Bound neg_infinity() { return Bound(Kind::neg_inf); }
  static Bound pos_infinity() { return Bound(Kind::pos_inf); }

 private:
  explicit Bound(Kind k) : kind(k) {}
};

/// The Sturm chain p, p', -rem(p, p'), ...
std::vector<PolyQ> sturm_chain(const PolyQ& p);

/// Distinct real roots of squarefree p in (lo, hi]. Throws InputError for p = 0.
int sturm_real_root_count(const PolyQ& p, const Bound& lo, const Bound& hi);

/// All distinct real roots of p over the whole line.
int real_root_count(const PolyQ& p);

/// Half-open isolating interval (lo, hi] for one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Disjoint isolating intervals for the real roots of p, sorted increasingly.
/// Each interval contains exactly one root of the squarefree part of p.
std::vector<RootInterval> isolate_real_roots(const PolyQ& p);

/// Shrinks an isolating interval of squarefree p until hi - lo <= width.
void refine_root(const PolyQ& p, RootInterval& interval, const Rational& width);

/// Cauchy-type bound: every root has |x| < bound.
Rational root_bound(const PolyQ& p);

}  // namespace pencilrank

#include "pencilrank/kronecker.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "detail/descriptor_value.hpp"
#include "detail/highprec.hpp"
#include "pencilrank/errors.hpp"
#include "pencilrank/factor.hpp"
#include "pencilrank/smith.hpp"

namespace pencilrank {

EigenvalueDescriptor EigenvalueDescriptor::rational_value(const Rational& v) {
  EigenvalueDescriptor d;
  d.kind = Kind::rational;
  d.value = v;
  d.min_poly = PolyQ::linear(-v, 1);
  d.approx = v.to_double();
  return d;
}

EigenvalueDescriptor EigenvalueDescriptor::infinity() {
  EigenvalueDescriptor d;
  d.kind = Kind::infinite;
  d.approx = std::complex<double>(std::numeric_limits<double>::infinity(), 0.0);
  return d;
}

int EigenvalueDescriptor::degree() const {
  switch (kind) {
    case Kind::rational:
      return 1;
    case Kind::infinite:
      return 0;
    default:
      return min_poly.degree();
  }
}

std::string EigenvalueDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::rational:
      os << value;
      break;
    case Kind::real_algebraic:
      os << "root of " << min_poly.to_string("x") << " in (" << interval.lo << ", " << interval.hi << "] ~ "
         << approx.real();
      break;
    case Kind::complex_pair:
      os << "pair #" << index << " of " << min_poly.to_string("x") << " ~ " << approx.real() << " +- "
         << std::abs(approx.imag()) << "i";
      break;
    case Kind::complex_root:
      os << "root of " << min_poly.to_string("x") << " ~ " << approx.real() << (upper ? " + " : " - ")
         << std::abs(approx.imag()) << "i";
      break;
    case Kind::infinite:
      os << "inf";
      break;
  }
  return os.str();
}

bool operator==(const EigenvalueDescriptor& a, const EigenvalueDescriptor& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case EigenvalueDescriptor::Kind::rational:
      return a.value == b.value;
    case EigenvalueDescriptor::Kind::infinite:
      return true;
    case EigenvalueDescriptor::Kind::complex_root:
      return a.min_poly == b.min_poly && a.index == b.index && a.upper == b.upper;
    default:
      return a.min_poly == b.min_poly && a.index == b.index;
  }
}

bool descriptor_less(const EigenvalueDescriptor& a, const EigenvalueDescriptor& b) {
  const bool ai = a.kind == EigenvalueDescriptor::Kind::infinite;
  const bool bi = b.kind == EigenvalueDescriptor::Kind::infinite;
  if (ai != bi) return bi;
  if (ai) return false;
  if (a.kind == EigenvalueDescriptor::Kind::rational && b.kind == EigenvalueDescriptor::Kind::rational) {
    return a.value < b.value;
  }
  if (a.approx.real() != b.approx.real()) return a.approx.real() < b.approx.real();
  if (a.approx.imag() != b.approx.imag()) return a.approx.imag() < b.approx.imag();
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.min_poly == b.min_poly) return a.index < b.index;
  return poly_less(a.min_poly, b.min_poly);
}

std::vector<EigenvalueDescriptor> root_descriptors(const PolyQ& irreducible, Field field) {
  std::vector<EigenvalueDescriptor> out;
  const PolyQ f = irreducible.monic();
  if (f.degree() == 1) {
    out.push_back(EigenvalueDescriptor::rational_value(-f.coeff(0)));
    return out;
  }
  const auto intervals = isolate_real_roots(f);
  const auto roots = detail::hp_roots(f);
  std::vector<detail::HPFloat> reals;
  std::vector<detail::HPComplex> uppers;
  const detail::HPFloat eps("1e-60");
  for (const auto& z : roots) {
    detail::HPFloat scale = abs(z);
    if (scale < 1) scale = 1;
    if (abs(z.imag()) <= eps * scale) reals.push_back(z.real());
    else if (z.imag() > 0) uppers.push_back(z);
  }
  check_internal(reals.size() == intervals.size(), "real root count disagrees with Sturm isolation");
  std::sort(reals.begin(), reals.end());
  std::sort(uppers.begin(), uppers.end(), [](const detail::HPComplex& x, const detail::HPComplex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    EigenvalueDescriptor d;
    d.kind = EigenvalueDescriptor::Kind::real_algebraic;
    d.min_poly = f;
    d.interval = intervals[i];
    d.index = static_cast<int>(i);
    d.approx = static_cast<double>(reals[i]);
    out.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < uppers.size(); ++i) {
    const std::complex<double> z(static_cast<double>(uppers[i].real()), static_cast<double>(uppers[i].imag()));
    EigenvalueDescriptor d;
    d.min_poly = f;
    d.index = static_cast<int>(i);
    if (field == Field::real) {
      d.kind = EigenvalueDescriptor::Kind::complex_pair;
      d.approx = z;
      out.push_back(d);
    } else {
      d.kind = EigenvalueDescriptor::Kind::complex_root;
      d.upper = true;
      d.approx = z;
      out.push_back(d);
      d.upper = false;
      d.approx = std::conj(z);
      out.push_back(d);
    }
  }
  return out;
}

int KroneckerStructure::regular_size() const {
  int q = 0;
  for (const auto& d : finite_divisors) q += d.power * d.eigenvalue.size_weight();
  for (int v : infinite_divisor_degrees) q += v;
  return q;
}

void KroneckerStructure::check_invariants() const {
  const int q = regular_size();
  const int sk = std::accumulate(min_col_indices.begin(), min_col_indices.end(), 0);
  const int sl = std::accumulate(min_row_indices.begin(), min_row_indices.end(), 0);
  const int p = static_cast<int>(min_col_indices.size());
  const int r = static_cast<int>(min_row_indices.size());
  check_internal(sk + p + sl + q == n, "column budget of the Kronecker structure fails");
  check_internal(sk + sl + r + q == m, "row budget of the Kronecker structure fails");
  check_internal(sk + sl + q == normal_rank, "normal rank disagrees with the Kronecker structure");
  check_internal(p == n - normal_rank && r == m - normal_rank, "wrong number of minimal indices");
}

std::string KroneckerStructure::to_string() const {
  std::ostringstream os;
  os << m << "x" << n << " pencil, normal rank " << normal_rank << "\n";
  const auto list = [&](const std::vector<int>& v) {
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "}";
  };
  os << "  minimal column indices: ";
  list(min_col_indices);
  os << "\n  minimal row indices: ";
  list(min_row_indices);
  os << "\n  finite elementary divisors:";
  if (finite_divisors.empty()) os << " none";
  for (const auto& d : finite_divisors) os << "\n    [" << d.eigenvalue.to_string() << "]^" << d.power;
  os << "\n  infinite elementary divisor degrees: ";
  list(infinite_divisor_degrees);
  return os.str();
}

int normal_rank(const Pencil& p) {
  // A nonzero maximal minor has at most min(m, n) roots, so one of these points is generic.
  int best = 0;
  const int limit = std::min(p.m(), p.n());
  for (int c = 0; c <= limit; ++c) {
    best = std::max(best, rank_exact(p.combination(1, c)));
    if (best == limit) break;
  }
  return best;
}

std::vector<ElementaryDivisor> finite_structure(const Pencil& p, Field field) {
  std::vector<ElementaryDivisor> out;
  if (p.m() == 0 || p.n() == 0) return out;
  const auto invariants = smith_form(PolyMatrix::linear(p.a(), p.b()));
  for (const auto& s : invariants) {
    if (s.degree() <= 0) continue;
    for (const auto& f : factor_over_q(s)) {
      for (auto& d : root_descriptors(f.poly, field)) out.push_back({std::move(d), f.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const ElementaryDivisor& x, const ElementaryDivisor& y) {
    if (!(x.eigenvalue == y.eigenvalue)) return descriptor_less(x.eigenvalue, y.eigenvalue);
    return x.power < y.power;
  });
  return out;
}

std::vector<int> infinite_structure(const Pencil& p) {
  std::vector<int> out;
  if (p.m() == 0 || p.n() == 0) return out;
  const PolyQ x = PolyQ::linear(0, 1);
  for (const auto& s : smith_form(PolyMatrix::linear(p.b(), p.a()))) {
    if (s.degree() <= 0) continue;
    const int e = multiplicity(x, s);
    if (e > 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// dim ker of the block Toeplitz matrix acting on coefficient vectors of degree <= j.
int expansion_kernel_dim(const MatrixQ& a, const MatrixQ& b, int j) {
  const int m = a.rows(), n = a.cols();
  MatrixQ mj((j + 2) * m, (j + 1) * n);
  for (int i = 0; i <= j; ++i) {
    mj.set_block(i * m, i * n, a);
    mj.set_block((i + 1) * m, i * n, b);
  }
  return (j + 1) * n - rank_exact(mj);
}

std::vector<int> column_indices(const MatrixQ& a, const MatrixQ& b, int count, int max_degree) {
  std::vector<int> out;
  if (count == 0) return out;
  int prev_dim = 0, prev_le = 0;
  for (int j = 0; j <= max_degree && static_cast<int>(out.size()) < count; ++j) {
    const int dim = expansion_kernel_dim(a, b, j);
    const int le = dim - prev_dim;  // number of indices <= j
    for (int k = prev_le; k < le; ++k) out.push_back(j);
    prev_dim = dim;
    prev_le = le;
  }
  check_internal(static_cast<int>(out.size()) == count, "minimal index recovery did not terminate");
  return out;
}

}  // namespace

MinimalIndices minimal_indices(const Pencil& p) {
  MinimalIndices out;
  const int nr = normal_rank(p);
  const int m = p.m(), n = p.n();
  if (m == 0 || n == 0) {
    out.columns.assign(static_cast<std::size_t>(n), 0);
    out.rows.assign(static_cast<std::size_t>(m), 0);
    return out;
  }
  out.columns = column_indices(p.a(), p.b(), n - nr, nr);
  out.rows = column_indices(p.a().transpose(), p.b().transpose(), m - nr, nr);
  return out;
}

KroneckerStructure kronecker_structure(const Pencil& p, Field field) {
  KroneckerStructure ks;
  ks.m = p.m();
  ks.n = p.n();
  ks.field = field;
  ks.normal_rank = normal_rank(p);
  auto mi = minimal_indices(p);
  ks.min_col_indices = std::move(mi.columns);
  ks.min_row_indices = std::move(mi.rows);
  ks.finite_divisors = finite_structure(p, field);
  ks.infinite_divisor_degrees = infinite_structure(p);
  ks.check_invariants();
  return ks;
}

}  // namespace pencilrank

namespace pencilrank::detail {

HPComplex hp_value(const EigenvalueDescriptor& d) {
  using Kind = EigenvalueDescriptor::Kind;
  check_internal(d.kind != Kind::infinite, "high-precision value of the infinite eigenvalue");
  if (d.kind == Kind::rational) return HPComplex(to_hp(d.value));
  const auto roots = hp_roots(d.min_poly);
  std::vector<HPComplex> picked;
  const HPFloat eps("1e-60");
  for (const auto& z : roots) {
    HPFloat scale = abs(z);
    if (scale < 1) scale = 1;
    const bool real = abs(z.imag()) <= eps * scale;
    if (d.kind == Kind::real_algebraic ? real : (!real && z.imag() > 0)) picked.push_back(real ? HPComplex(z.real()) : z);
  }
  std::sort(picked.begin(), picked.end(), [](const HPComplex& x, const HPComplex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  check_internal(d.index >= 0 && d.index < static_cast<int>(picked.size()), "descriptor index out of range");
  HPComplex z = picked[static_cast<std::size_t>(d.index)];
  if (d.kind == Kind::complex_root && !d.upper) z = conj(z);
  return z;
}

}  // namespace pencilrank::detail

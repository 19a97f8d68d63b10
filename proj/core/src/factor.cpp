#include "pencilrank/factor.hpp"

#include <algorithm>
#include <sstream>

#include "detail/highprec.hpp"
#include "pencilrank/errors.hpp"

namespace pencilrank {

using detail::HPComplex;
using detail::HPFloat;

bool poly_less(const PolyQ& a, const PolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ca = a.coeff(i), cb = b.coeff(i);
    if (ca != cb) return ca < cb;
  }
  return false;
}

namespace {

struct RootGroup {
  std::vector<HPComplex> roots;  // one real root or a conjugate pair
};

std::vector<RootGroup> group_roots(const std::vector<HPComplex>& roots) {
  const HPFloat eps("1e-60");
  std::vector<RootGroup> groups;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    HPFloat scale = abs(roots[i]);
    if (scale < 1) scale = 1;
    if (abs(roots[i].imag()) <= eps * scale) {
      groups.push_back({{HPComplex(roots[i].real())}});
      continue;
    }
    // Pair with the closest unused conjugate.
    std::size_t best = roots.size();
    HPFloat best_dist = 0;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      const HPFloat dist = abs(roots[j] - conj(roots[i]));
      if (best == roots.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == roots.size()) throw InternalError("unpaired complex root in factorization");
    used[best] = true;
    groups.push_back({{roots[i], conj(roots[i])}});
  }
  return groups;
}

PolyQ integer_poly(const PolyQ& p) {
  const auto ints = p.primitive_integer();
  std::vector<Rational> c;
  c.reserve(ints.size());
  for (const auto& v : ints) c.emplace_back(v);
  return PolyQ(std::move(c));
}

// Candidate factor lc * prod (x - r), rounded to integers; false if not near-integral.
bool candidate(const Integer& lc, const std::vector<HPComplex>& roots, PolyQ& out) {
  std::vector<HPComplex> c{HPComplex(1)};
  for (const auto& r : roots) {
    std::vector<HPComplex> next(c.size() + 1, HPComplex(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  const HPFloat lch(lc.get_str(10));
  std::vector<Rational> coeffs;
  for (auto& v : c) {
    const HPFloat re = v.real() * lch;
    const HPFloat rounded = round(re);
    HPFloat tol = abs(re) * HPFloat("1e-40");
    if (tol < HPFloat("1e-30")) tol = HPFloat("1e-30");
    if (abs(re - rounded) > HPFloat("1e-6") + tol) return false;
    const std::string text = rounded.str(0, std::ios_base::fixed);
    const auto dot = text.find('.');
    coeffs.emplace_back(Rational::parse(dot == std::string::npos ? text : text.substr(0, dot)));
  }
  out = PolyQ(std::move(coeffs));
  return out.degree() >= 1;
}

}  // namespace

std::vector<PolyQ> factor_squarefree(const PolyQ& p) {
  std::vector<PolyQ> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    out.push_back(p.monic());
    return out;
  }
  PolyQ f = integer_poly(p);
  auto groups = group_roots(detail::hp_roots(f));
  bool progress = true;
  while (progress && f.degree() > 1) {
    progress = false;
    const std::size_t g = groups.size();
    const int half = f.degree() / 2;
    // Enumerate subsets of root groups by total degree.
    for (int target = 1; target <= half && !progress; ++target) {
      for (unsigned long mask = 1; mask < (1UL << g) && !progress; ++mask) {
        int deg = 0;
        std::vector<HPComplex> roots;
        for (std::size_t i = 0; i < g; ++i) {
          if (mask & (1UL << i)) {
            deg += static_cast<int>(groups[i].roots.size());
            roots.insert(roots.end(), groups[i].roots.begin(), groups[i].roots.end());
          }
        }
        if (deg != target) continue;
        PolyQ cand;
        if (!candidate(f.leading().numerator(), roots, cand)) continue;
        cand = integer_poly(cand);
        auto [quot, rem] = divmod(f, cand);
        if (!rem.is_zero()) continue;
        out.push_back(cand.monic());
        f = integer_poly(quot);
        std::vector<RootGroup> rest;
        for (std::size_t i = 0; i < g; ++i) {
          if (!(mask & (1UL << i))) rest.push_back(std::move(groups[i]));
        }
        groups = std::move(rest);
        progress = true;
      }
    }
  }
  if (f.degree() >= 1) out.push_back(f.monic());
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<IrreducibleFactor> factor_over_q(const PolyQ& p) {
  std::vector<IrreducibleFactor> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (auto& f : factor_squarefree(part)) out.push_back({std::move(f), mult});
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return poly_less(a.poly, b.poly);
  });
  return out;
}

bool is_irreducible(const PolyQ& p) {
  if (p.degree() <= 0) return false;
  const auto f = factor_over_q(p);
  return f.size() == 1 && f[0].multiplicity == 1;
}

std::vector<std::complex<double>> approximate_roots(const PolyQ& p) {
  std::vector<std::complex<double>> out;
  if (p.degree() <= 0) return out;
  for (const auto& z : detail::hp_roots(squarefree_part(p))) {
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}

std::vector<std::string> real_roots_decimal(const PolyQ& p, int digits) {
  std::vector<HPFloat> reals;
  const HPFloat eps("1e-60");
  for (const auto& z : detail::hp_roots(squarefree_part(p))) {
    HPFloat scale = abs(z);
    if (scale < 1) scale = 1;
    if (abs(z.imag()) <= eps * scale) reals.push_back(z.real());
  }
  std::sort(reals.begin(), reals.end());
  std::vector<std::string> out;
  for (const auto& r : reals) out.push_back(r.str(digits, std::ios_base::scientific));
  return out;
}

}  // namespace pencilrank

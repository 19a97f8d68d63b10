#include "detail/highprec.hpp"

#include <Eigen/Eigenvalues>

#include <complex>

#include "pencilrank/errors.hpp"

namespace pencilrank::detail {

HPFloat to_hp(const Rational& r) {
  HPFloat num(r.numerator().get_str(10));
  HPFloat den(r.denominator().get_str(10));
  return num / den;
}

HPComplex hp_evaluate(const PolyQ& p, const HPComplex& z) {
  HPComplex acc(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + HPComplex(to_hp(*it));
  return acc;
}

namespace {

std::vector<std::complex<double>> companion_roots(const PolyQ& monic) {
  const int n = monic.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic.coeff(i).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

}  // namespace

std::vector<HPComplex> hp_roots(const PolyQ& squarefree) {
  const int n = squarefree.degree();
  std::vector<HPComplex> z;
  if (n <= 0) return z;
  const PolyQ f = squarefree.monic();
  if (n == 1) {
    z.emplace_back(to_hp(-f.coeff(0)));
    return z;
  }
  const PolyQ df = f.derivative();
  const auto seeds = companion_roots(f);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    // Nudge identical seeds apart so the Aberth correction is well defined.
    const double jitter = 1e-7 * static_cast<double>(i + 1);
    z.emplace_back(HPFloat(seeds[i].real() + jitter), HPFloat(seeds[i].imag() + 0.5 * jitter));
  }
  const HPFloat stop("1e-95");
  for (int iter = 0; iter < 2000; ++iter) {
    HPFloat worst = 0;
    for (int i = 0; i < n; ++i) {
      const HPComplex fv = hp_evaluate(f, z[i]);
      if (fv == HPComplex(0)) continue;
      const HPComplex ratio = fv / hp_evaluate(df, z[i]);
      HPComplex repulsion(0);
      for (int j = 0; j < n; ++j) {
        if (j != i) repulsion += HPComplex(1) / (z[i] - z[j]);
      }
      const HPComplex step = ratio / (HPComplex(1) - ratio * repulsion);
      z[i] -= step;
      HPFloat scale = abs(z[i]);
      if (scale < 1) scale = 1;
      const HPFloat rel = abs(step) / scale;
      if (rel > worst) worst = rel;
    }
    if (worst < stop) break;
  }
  return z;
}

}  // namespace pencilrank::detail

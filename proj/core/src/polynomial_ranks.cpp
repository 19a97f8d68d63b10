#include "pencilrank/polynomial_ranks.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <random>
#include <sstream>

#include "pencilrank/errors.hpp"
#include "pencilrank/minimal_ranks.hpp"

namespace pencilrank {

using Cplx = std::complex<double>;

MatrixPolynomial::MatrixPolynomial(std::vector<MatrixQ> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw InputError("a matrix polynomial needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (c.rows() != coeffs_.front().rows() || c.cols() != coeffs_.front().cols()) {
      throw InputError("matrix polynomial coefficients must share dimensions");
    }
  }
}

MatrixPolynomial MatrixPolynomial::from_pencil(const Pencil& p) { return MatrixPolynomial({p.a(), p.b()}); }

MatrixQ MatrixPolynomial::combination(const std::vector<Rational>& t) const {
  if (static_cast<int>(t.size()) != d()) throw InputError("combination needs one weight per coefficient");
  MatrixQ out(m(), n());
  for (int k = 0; k < d(); ++k) {
    if (!t[static_cast<std::size_t>(k)].is_zero()) out = out + t[static_cast<std::size_t>(k)] * coefficient(k);
  }
  return out;
}

MatrixPolynomial MatrixPolynomial::transformed(const MatrixQ& t) const {
  if (t.rows() != d() || t.cols() != d()) throw InputError("transform must be d x d");
  std::vector<MatrixQ> out;
  for (int k = 0; k < d(); ++k) {
    std::vector<Rational> row;
    for (int j = 0; j < d(); ++j) row.push_back(t(k, j));
    out.push_back(combination(row));
  }
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial MatrixPolynomial::equivalent(const MatrixQ& left, const MatrixQ& right) const {
  std::vector<MatrixQ> out;
  for (const auto& c : coeffs_) out.push_back(left * c * right.transpose());
  return MatrixPolynomial(std::move(out));
}

AlgebraicVector AlgebraicVector::rational(const std::vector<Rational>& v) {
  AlgebraicVector out;
  for (const auto& x : v) {
    out.entries.push_back(PolyQ::constant(x));
    out.approx.emplace_back(x.to_double(), 0.0);
  }
  return out;
}

std::vector<Rational> AlgebraicVector::rational_entries() const {
  if (!is_rational()) throw InputError("vector has irrational entries");
  std::vector<Rational> out;
  for (const auto& e : entries) out.push_back(e.coeff(0));
  return out;
}

std::string AlgebraicVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << (is_rational() ? entries[i].coeff(0).to_string() : entries[i].to_string("t"));
  }
  os << ")";
  if (!is_rational()) {
    os << " with t root of " << modulus.to_string("x") << " ~ " << theta.real();
    if (theta.imag() != 0.0) os << (theta.imag() > 0 ? "+" : "-") << std::abs(theta.imag()) << "i";
  }
  return os.str();
}

namespace {

std::vector<int> assemble_tuple(const std::vector<RankSubspace>& subs) {
  std::vector<int> tuple;
  for (auto it = subs.rbegin(); it != subs.rend(); ++it)
    for (std::size_t i = 0; i < it->basis.size(); ++i) tuple.push_back(it->rank_value);
  return tuple;
}

AlgebraicVector row_vector(const AttainResult::Row& row) {
  if (row.modulus.degree() == 1) {
    const Rational root = -row.modulus.coeff(0);
    return AlgebraicVector::rational({row.t.evaluate(root), row.u.evaluate(root)});
  }
  AlgebraicVector v;
  v.modulus = row.modulus;
  v.entries = {row.t, row.u};
  v.theta = row.point.approx;
  v.approx = {row.t.evaluate(v.theta.real()), row.u.evaluate(v.theta.real())};
  if (v.theta.imag() != 0.0) {
    const auto eval = [&](const PolyQ& p) {
      Cplx acc(0.0, 0.0);
      for (int k = p.degree(); k >= 0; --k) acc = acc * v.theta + p.coeff(k).to_double();
      return acc;
    };
    v.approx = {eval(row.t), eval(row.u)};
  }
  return v;
}

}  // namespace

RankMinimizingDecomposition poly_minimal_ranks_d2(const MatrixPolynomial& p, Field field) {
  if (p.d() != 2) throw InputError("poly_minimal_ranks_d2 needs exactly two coefficients");
  const Pencil pencil(p.coefficient(0), p.coefficient(1));
  const AttainResult at = attain_transform(pencil, field);
  RankMinimizingDecomposition out;
  out.certified = true;
  const AlgebraicVector r_row = row_vector(at.rows[0]);
  const AlgebraicVector s_row = row_vector(at.rows[1]);
  if (at.ranks.r == at.ranks.s) {
    out.subspaces.push_back({{s_row, r_row}, at.ranks.s});
  } else {
    out.subspaces.push_back({{s_row}, at.ranks.s});
    out.subspaces.push_back({{r_row}, at.ranks.r});
  }
  out.tuple = assemble_tuple(out.subspaces);
  return out;
}

namespace {

struct Candidate {
  AlgebraicVector v;
  int rank = 0;
};

Eigen::VectorXcd normalized(const std::vector<Cplx>& v) {
  Eigen::VectorXcd x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x[static_cast<Eigen::Index>(i)] = v[i];
  const double nrm = x.norm();
  return nrm > 0 ? Eigen::VectorXcd(x / nrm) : x;
}

int span_dim(const std::vector<Eigen::VectorXcd>& cols) {
  if (cols.empty()) return 0;
  Eigen::MatrixXcd m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = cols[i];
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > 1e-8) ++r;
  return r;
}

class Search {
 public:
  Search(const MatrixPolynomial& p, const HeuristicOptions& opt, Field field)
      : p_(p), opt_(opt), field_(field), rng_(opt.seed) {
    for (const auto& c : p.coefficients()) dense_.push_back(c.to_double());
  }

  RankMinimizingDecomposition run() {
    const int d = p_.d();
    seed_pool();
    RankMinimizingDecomposition out;
    out.certified = d <= 2;
    std::vector<Eigen::VectorXcd> span;
    while (static_cast<int>(span.size()) < d) {
      std::vector<const Candidate*> outside;
      for (const auto& c : pool_) {
        auto trial = span;
        trial.push_back(normalized(c.v.approx));
        if (span_dim(trial) > static_cast<int>(span.size())) outside.push_back(&c);
      }
      check_internal(!outside.empty(), "no sample outside the accumulated subspace");
      int best = outside.front()->rank;
      for (const auto* c : outside) best = std::min(best, c->rank);
      std::stable_sort(outside.begin(), outside.end(), [](const Candidate* x, const Candidate* y) {
        return x->v.is_rational() && !y->v.is_rational();
      });
      // A minimizer missed at an earlier stage of equal rank belongs to that stage's subspace.
      const bool merge = !out.subspaces.empty() && out.subspaces.back().rank_value >= best;
      if (merge) out.certified = false;
      RankSubspace fresh;
      fresh.rank_value = best;
      RankSubspace& sub = merge ? out.subspaces.back() : fresh;
      for (const auto* c : outside) {
        if (c->rank != best) continue;
        auto trial = span;
        trial.push_back(normalized(c->v.approx));
        if (span_dim(trial) > static_cast<int>(span.size())) {
          span = std::move(trial);
          sub.basis.push_back(c->v);
        }
      }
      if (!merge) out.subspaces.push_back(std::move(fresh));
    }
    out.tuple = assemble_tuple(out.subspaces);
    return out;
  }

 private:
  const MatrixPolynomial& p_;
  HeuristicOptions opt_;
  Field field_;
  std::mt19937_64 rng_;
  std::vector<Eigen::MatrixXd> dense_;
  std::vector<Candidate> pool_;
  std::vector<std::vector<Rational>> anchors_;

  int rank_at(const std::vector<Rational>& t) const { return rank_exact(p_.combination(t)); }

  bool known(const std::vector<Cplx>& approx) const {
    const Eigen::VectorXcd x = normalized(approx);
    return std::any_of(pool_.begin(), pool_.end(),
                       [&](const Candidate& c) { return span_dim({normalized(c.v.approx), x}) == 1; });
  }

  bool add_rational(const std::vector<Rational>& t, bool anchor) {
    if (std::all_of(t.begin(), t.end(), [](const Rational& x) { return x.is_zero(); })) return false;
    const AlgebraicVector v = AlgebraicVector::rational(t);
    if (known(v.approx)) return false;
    pool_.push_back({v, rank_at(t)});
    if (anchor) anchors_.push_back(t);
    return true;
  }

  std::vector<Rational> random_point() {
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    std::vector<Rational> t;
    for (int k = 0; k < p_.d(); ++k) t.emplace_back(Rational(Integer(num(rng_)), Integer(den(rng_))));
    return t;
  }

  void scan_line(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const MatrixQ ma = p_.combination(a), mb = p_.combination(b);
    const DropPointSet drops = rank_drop_points(ma, mb, field_);
    for (const auto& pt : drops.points) {
      const auto& w = pt.where;
      if (w.kind == EigenvalueDescriptor::Kind::infinite) {
        add_rational(b, false);
      } else if (w.kind == EigenvalueDescriptor::Kind::rational) {
        std::vector<Rational> t;
        for (std::size_t k = 0; k < a.size(); ++k) t.push_back(a[k] + w.value * b[k]);
        add_rational(t, false);
      } else {
        AlgebraicVector v;
        v.modulus = w.min_poly;
        v.theta = w.approx;
        for (std::size_t k = 0; k < a.size(); ++k) {
          v.entries.push_back(PolyQ::linear(a[k], b[k]));
          v.approx.push_back(a[k].to_double() + v.theta * b[k].to_double());
        }
        if (!known(v.approx)) pool_.push_back({std::move(v), pt.rank});
      }
    }
  }

  // Alternating projection between {sum t_k A_k} and rank-q matrices, snapped to rationals.
  void project_search(int q) {
    const int d = p_.d();
    Eigen::MatrixXd gram(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gram(i, j) = dense_[static_cast<std::size_t>(i)].cwiseProduct(dense_[static_cast<std::size_t>(j)]).sum();
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver(gram);
    std::normal_distribution<double> g;
    // Restarts continue until `restarts` in a row find nothing new.
    int idle = 0;
    for (int restart = 0; restart < 6 * opt_.restarts && idle < opt_.restarts; ++restart) {
      ++idle;
      Eigen::VectorXd t(d);
      for (int k = 0; k < d; ++k) t[k] = g(rng_);
      t.normalize();
      bool converged = false;
      double ratio = 1.0;
      for (int it = 0; it < opt_.projection_iterations && !converged; ++it) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p_.m(), p_.n());
        for (int k = 0; k < d; ++k) m += t[k] * dense_[static_cast<std::size_t>(k)];
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd sv = svd.singularValues();
        if (sv.size() == 0 || sv[0] == 0.0) break;
        ratio = q < sv.size() ? sv[q] / sv[0] : 0.0;
        if (ratio <= 1e-13) {
          converged = true;
          break;
        }
        Eigen::VectorXd kept = sv;
        for (Eigen::Index i = q; i < kept.size(); ++i) kept[i] = 0.0;
        const Eigen::MatrixXd w = svd.matrixU() * kept.asDiagonal() * svd.matrixV().transpose();
        Eigen::VectorXd h(d);
        for (int k = 0; k < d; ++k) h[k] = dense_[static_cast<std::size_t>(k)].cwiseProduct(w).sum();
        Eigen::VectorXd next = solver.solve(h);
        if (next.norm() == 0.0) break;
        t = next.normalized();
      }
      // Convergence is often sublinear; near-converged points are snapped too, and the exact rank of
      // the snapped point decides whether it helps.
      if (!converged && ratio > 1e-7) continue;
      const double snap_tol = std::max(1e-9, 100.0 * ratio);
      Eigen::Index lead = 0;
      t.cwiseAbs().maxCoeff(&lead);
      std::vector<Rational> snapped;
      bool ok = true;
      for (int k = 0; k < d && ok; ++k) {
        Rational r;
        ok = rational_reconstruction(t[k] / t[lead], snap_tol, 100000, r);
        snapped.push_back(r);
      }
      if (ok && add_rational(snapped, true)) idle = 0;
    }
  }

  void seed_pool() {
    const int d = p_.d();
    for (int k = 0; k < d; ++k) {
      std::vector<Rational> e(static_cast<std::size_t>(d), Rational(0));
      e[static_cast<std::size_t>(k)] = 1;
      add_rational(e, true);
    }
    MatrixQ vecs(p_.m() * p_.n(), d);
    for (int k = 0; k < d; ++k) vecs.set_block(0, k, vec(p_.coefficient(k)));
    const MatrixQ ker = nullspace_basis(vecs);
    for (int c = 0; c < ker.cols(); ++c) {
      std::vector<Rational> t;
      for (int k = 0; k < d; ++k) t.push_back(ker(k, c));
      add_rational(t, true);
    }
    int generic = 0;
    for (int i = 0; i < opt_.samples; ++i) {
      const auto t = random_point();
      generic = std::max(generic, rank_at(t));
      add_rational(t, i < d + 2);
    }
    if (d >= 3) {
      for (int q = 0; q < generic; ++q) project_search(q);
    }
    if (d < 2) return;
    const auto anchors = anchors_;
    for (std::size_t i = 0; i < anchors.size(); ++i)
      for (std::size_t j = i + 1; j < anchors.size(); ++j) {
        const AlgebraicVector a = AlgebraicVector::rational(anchors[i]);
        const AlgebraicVector b = AlgebraicVector::rational(anchors[j]);
        if (span_dim({normalized(a.approx), normalized(b.approx)}) < 2) continue;
        scan_line(anchors[i], anchors[j]);
      }
    // Lines through two rank-deficient points often lie inside the deficient locus, where the rank drops
    // further at intersections with its other components.
    std::vector<std::vector<Rational>> deficient;
    for (const auto& c : pool_) {
      if (c.rank >= generic || c.rank == 0 || !c.v.is_rational()) continue;
      deficient.push_back(c.v.rational_entries());
      if (deficient.size() >= 8) break;
    }
    for (std::size_t i = 0; i < deficient.size(); ++i)
      for (std::size_t j = i + 1; j < deficient.size(); ++j) scan_line(deficient[i], deficient[j]);
  }
};

}  // namespace

RankMinimizingDecomposition poly_minimal_ranks_heuristic(const MatrixPolynomial& p, const HeuristicOptions& options,
                                                          Field field) {
  return Search(p, options, field).run();
}

RankMinimizingDecomposition poly_minimal_ranks(const MatrixPolynomial& p, Field field) {
  if (p.d() == 2) return poly_minimal_ranks_d2(p, field);
  return poly_minimal_ranks_heuristic(p, {}, field);
}

PolyMembership poly_in_b_detailed(const MatrixPolynomial& p, std::vector<int> ranks, Field field) {
  if (static_cast<int>(ranks.size()) != p.d()) throw InputError("rank tuple length must equal d");
  std::sort(ranks.rbegin(), ranks.rend());
  const RankMinimizingDecomposition rho = poly_minimal_ranks(p, field);
  PolyMembership out;
  out.certified = rho.certified;
  out.member = true;
  for (std::size_t k = 0; k < ranks.size(); ++k)
    if (ranks[k] < rho.tuple[k]) out.member = false;
  return out;
}

bool poly_in_b(const MatrixPolynomial& p, std::vector<int> ranks, Field field) {
  return poly_in_b_detailed(p, std::move(ranks), field).member;
}

}  // namespace pencilrank

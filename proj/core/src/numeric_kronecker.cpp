#include "pencilrank/numeric_kronecker.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

namespace pencilrank {

namespace {

using Cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;

class RankJudge {
 public:
  explicit RankJudge(double threshold) : threshold_(threshold) {}

  int rank(const MatC& m) {
    if (m.size() == 0) return 0;
    const Eigen::VectorXd sv = Eigen::BDCSVD<MatC>(m).singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv[i] > threshold_) ++r;
      if (sv[i] > threshold_ / 10 && sv[i] < threshold_ * 10) ill_ = true;
    }
    return r;
  }
  bool ill() const { return ill_; }
  double threshold() const { return threshold_; }

 private:
  double threshold_;
  bool ill_ = false;
};

// Block-Toeplitz matrix whose kernel holds polynomial vectors of degree <= j in ker(A + lambda B).
MatC toeplitz(const MatC& a, const MatC& b, int j) {
  const Eigen::Index m = a.rows(), n = a.cols();
  MatC t = MatC::Zero((j + 2) * m, (j + 1) * n);
  for (int i = 0; i <= j; ++i) {
    t.block(i * m, i * n, m, n) = a;
    t.block((i + 1) * m, i * n, m, n) = b;
  }
  return t;
}

// Jordan-chain matrix of length k: diagonal d, subdiagonal s.
MatC chain(const MatC& d, const MatC& s, int k) {
  const Eigen::Index m = d.rows(), n = d.cols();
  MatC t = MatC::Zero(k * m, k * n);
  for (int i = 0; i < k; ++i) {
    t.block(i * m, i * n, m, n) = d;
    if (i > 0) t.block(i * m, (i - 1) * n, m, n) = s;
  }
  return t;
}

std::vector<int> indices_from(const MatC& a, const MatC& b, int expected, RankJudge& judge) {
  std::vector<int> out;
  if (expected <= 0) return out;
  const int n = static_cast<int>(a.cols());
  int prev_null = 0, prev_count = 0;
  for (int j = 0; j <= n && static_cast<int>(out.size()) < expected; ++j) {
    const int null = (j + 1) * n - judge.rank(toeplitz(a, b, j));
    const int count = null - prev_null;
    for (int c = prev_count; c < count && static_cast<int>(out.size()) < expected; ++c) out.push_back(j);
    prev_null = null;
    prev_count = std::max(prev_count, count);
  }
  return out;
}

// Block sizes at an eigenvalue from the growth of the chain kernels; `singular` = number of column indices.
std::vector<int> chain_powers(const MatC& diag, const MatC& sub, int singular, int limit, RankJudge& judge) {
  std::vector<int> weyr;
  int prev_null = 0;
  const int n = static_cast<int>(diag.cols());
  for (int k = 1; k <= limit + 1; ++k) {
    const int null = k * n - judge.rank(chain(diag, sub, k));
    const int w = null - prev_null - singular;
    prev_null = null;
    if (w <= 0) break;
    weyr.push_back(w);
  }
  std::vector<int> powers;
  for (std::size_t k = 0; k < weyr.size(); ++k) {
    const int next = k + 1 < weyr.size() ? weyr[k + 1] : 0;
    for (int c = 0; c < weyr[k] - next; ++c) powers.push_back(static_cast<int>(k) + 1);
  }
  std::sort(powers.begin(), powers.end());
  return powers;
}

int power_sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

std::vector<std::vector<Cplx>> single_linkage(const std::vector<Cplx>& pts, double radius) {
  const std::size_t k = pts.size();
  std::vector<int> label(k, -1);
  int next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < k; ++v) {
        if (label[v] < 0 && std::abs(pts[u] - pts[v]) <= radius * std::max(1.0, std::abs(pts[u]))) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<Cplx>> out(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < k; ++i) out[static_cast<std::size_t>(label[i])].push_back(pts[i]);
  return out;
}

struct Finder {
  const MatC& a;
  const MatC& b;
  int singular;
  int limit;
  double tolerance;
  bool exact_counts;  // candidate multiplicities are trusted (regular, unprojected)
  RankJudge& judge;
  std::vector<NumericEigenGroup>& out;
  std::vector<std::string>& warnings;

  double radius(std::size_t k) const { return std::pow(100.0 * tolerance, 1.0 / static_cast<double>(std::max<std::size_t>(k, 1))); }

  // Singular value that vanishes at a multiple eigenvalue of the cluster's size.
  double residual(Cplx c, int len, int need) const {
    const Eigen::VectorXd sv = Eigen::BDCSVD<MatC>(chain(a + c * b, b, len)).singularValues();
    const Eigen::Index i = sv.size() - need;
    return i >= 0 && i < sv.size() ? sv[i] : 0.0;
  }

  // The mean of a split cluster can sit well off the point where the chain ranks drop.
  Cplx refine(Cplx center, const std::vector<Cplx>& members) const {
    const int len = static_cast<int>(members.size());
    const int need = len * singular + len;
    double spread = 0.0;
    for (const Cplx& z : members) spread = std::max(spread, std::abs(z - center));
    spread = std::max(spread, std::pow(tolerance, 0.25) * std::max(1.0, std::abs(center)));
    const auto search = [&](Cplx origin, Cplx dir) {
      constexpr double g = 0.6180339887498949;
      double lo = -spread, hi = spread;
      double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      double f1 = residual(origin + x1 * dir, len, need), f2 = residual(origin + x2 * dir, len, need);
      for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, std::abs(origin)); ++it) {
        if (f1 < f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - g * (hi - lo);
          f1 = residual(origin + x1 * dir, len, need);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + g * (hi - lo);
          f2 = residual(origin + x2 * dir, len, need);
        }
      }
      const Cplx best = origin + 0.5 * (lo + hi) * dir;
      return residual(best, len, need) < residual(origin, len, need) ? best : origin;
    };
    Cplx c = search(center, Cplx(1.0, 0.0));
    if (center.imag() != 0.0) {
      for (int round = 0; round < 3; ++round) c = search(search(c, Cplx(0.0, 1.0)), Cplx(1.0, 0.0));
    }
    return c;
  }

  void resolve(const std::vector<Cplx>& members, std::size_t level) {
    Cplx center(0.0, 0.0);
    for (const Cplx& z : members) center += z;
    center /= static_cast<double>(members.size());
    const double r = radius(level);
    if (std::abs(center.imag()) <= r * std::max(1.0, std::abs(center))) center.imag(0.0);
    auto powers = chain_powers(a + center * b, b, singular, limit, judge);
    int alg = power_sum(powers);
    if (alg != static_cast<int>(members.size())) {
      const Cplx refined = refine(center, members);
      auto retry = chain_powers(a + refined * b, b, singular, limit, judge);
      if (power_sum(retry) == static_cast<int>(members.size())) {
        center = refined;
        powers = std::move(retry);
        alg = power_sum(powers);
      }
    }
    if (alg == static_cast<int>(members.size()) || (!exact_counts && alg > 0 && members.size() == 1)) {
      out.push_back({center, false, powers});
      return;
    }
    if (members.size() == 1) {
      if (exact_counts) warnings.push_back("eigenvalue cluster near " + std::to_string(center.real()) +
                                           " failed the rank-drop check");
      return;
    }
    for (const auto& sub : single_linkage(members, radius(members.size() - 1))) resolve(sub, members.size() - 1);
  }
};

// Candidates beyond tolerance^(-1/2) in modulus are treated as perturbed infinite eigenvalues.
std::vector<Cplx> candidate_eigenvalues(const MatC& a, const MatC& b, int nr, bool regular, double tolerance,
                                       std::mt19937_64& rng) {
  const double far = 1.0 / std::sqrt(tolerance);
  const Eigen::Index m = a.rows(), n = a.cols();
  Eigen::MatrixXd pa, pb;
  if (regular) {
    pa = a.real();
    pb = b.real();
  } else {
    std::normal_distribution<double> g;
    Eigen::MatrixXd left(nr, m), right(n, nr);
    for (Eigen::Index i = 0; i < left.size(); ++i) left.data()[i] = g(rng);
    for (Eigen::Index i = 0; i < right.size(); ++i) right.data()[i] = g(rng);
    pa = left * a.real() * right;
    pb = left * b.real() * right;
  }
  std::vector<Cplx> out;
  if (pa.size() == 0) return out;
  // QZ can fail to converge; retry on a rotated pair (c A + s B, -s A + c B).
  std::uniform_real_distribution<double> angle(0.0, 3.141592653589793);
  double c = 1.0, sn = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (attempt > 0) {
      const double th = angle(rng);
      c = std::cos(th);
      sn = std::sin(th);
    }
    const Eigen::MatrixXd ra = c * pa + sn * pb, rb = -sn * pa + c * pb;
    Eigen::RealQZ<Eigen::MatrixXd> qz(ra, rb, false);
    if (qz.info() != Eigen::Success) continue;
    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(ra, rb, false);
    const auto alphas = ges.alphas();
    const auto betas = ges.betas();
    const double scale = std::max({1.0, pa.norm(), pb.norm()});
    for (Eigen::Index i = 0; i < alphas.size(); ++i) {
      // Root (t', u') = (beta, -alpha) of the rotated pair, mapped back to (t, u).
      const Cplx t = c * betas[i] + sn * alphas[i];
      const Cplx u = sn * betas[i] - c * alphas[i];
      if (std::abs(t) <= 1e-10 * scale || std::abs(t) <= 1e-10 * std::abs(u) || std::abs(u) > far * std::abs(t)) continue;
      out.push_back(u / t);
    }
    return out;
  }
  // QZ never converged: solve (c A + s B) + mu (-s A + c B) as a standard problem for the rotation
  // whose second matrix is best conditioned.
  double best_cond = 0.0;
  double bc = 1.0, bs = 0.0;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const double th = angle(rng);
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(-std::sin(th) * pa + std::cos(th) * pb).singularValues();
    const double cond = sv[sv.size() - 1] / std::max(sv[0], 1e-300);
    if (cond > best_cond) {
      best_cond = cond;
      bc = std::cos(th);
      bs = std::sin(th);
    }
  }
  const Eigen::MatrixXd ra = bc * pa + bs * pb, rb = -bs * pa + bc * pb;
  const Eigen::VectorXcd mus = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(
                                   (-rb.partialPivLu().solve(ra)).cast<Cplx>(), false)
                                   .eigenvalues();
  for (Eigen::Index i = 0; i < mus.size(); ++i) {
    const Cplx t = bc - bs * mus[i];
    const Cplx u = bs + bc * mus[i];
    if (std::abs(t) <= 1e-10 * std::abs(u) || std::abs(u) > far * std::abs(t)) continue;
    out.push_back(u / t);
  }
  return out;
}

}  // namespace

int NumericStructure::regular_size() const {
  int s = 0;
  for (const auto& g : eigen_groups) s += power_sum(g.powers) * (g.conjugate_pair ? 2 : 1);
  return s + power_sum(infinite_divisor_degrees);
}

MinimalRanks numeric_minimal_ranks(const NumericStructure& s) {
  int sbar = power_sum(s.min_col_indices) + power_sum(s.min_row_indices);
  std::vector<int> counts;
  for (const auto& g : s.eigen_groups) {
    if (!g.conjugate_pair) counts.push_back(static_cast<int>(g.powers.size()));
  }
  std::sort(counts.rbegin(), counts.rend());
  std::array<int, 3> k{static_cast<int>(s.infinite_divisor_degrees.size()), counts.size() > 0 ? counts[0] : 0,
                       counts.size() > 1 ? counts[1] : 0};
  std::sort(k.rbegin(), k.rend());
  const int q = s.regular_size();
  return {q - k[1] + sbar, q - k[0] + sbar};
}

std::string NumericStructure::to_string() const {
  std::ostringstream os;
  const auto list = [&](const std::vector<int>& v) {
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
  };
  os << m << "x" << n << " normal rank " << normal_rank << " (threshold " << threshold << ")\n";
  os << "  column indices ";
  list(min_col_indices);
  os << "\n  row indices ";
  list(min_row_indices);
  os << "\n";
  for (const auto& g : eigen_groups) {
    os << "  eigenvalue " << g.value.real();
    if (g.value.imag() != 0.0) os << (g.conjugate_pair ? " +- " : (g.value.imag() > 0 ? " + " : " - ")) << std::abs(g.value.imag()) << "i";
    os << " powers ";
    list(g.powers);
    os << "\n";
  }
  if (!infinite_divisor_degrees.empty()) {
    os << "  infinite powers ";
    list(infinite_divisor_degrees);
    os << "\n";
  }
  if (ill_conditioned) os << "  warning: ill-conditioned rank decision\n";
  for (const auto& w : warnings) os << "  warning: " << w << "\n";
  return os.str();
}

bool NumericStructure::matches(const KroneckerStructure& exact, double eig_tol) const {
  if (m != exact.m || n != exact.n || normal_rank != exact.normal_rank) return false;
  if (min_col_indices != exact.min_col_indices || min_row_indices != exact.min_row_indices) return false;
  if (infinite_divisor_degrees != exact.infinite_divisor_degrees) return false;
  std::vector<std::pair<EigenvalueDescriptor, std::vector<int>>> groups;
  for (const auto& d : exact.finite_divisors) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == d.eigenvalue; });
    if (it == groups.end()) {
      groups.push_back({d.eigenvalue, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back(d.power);
  }
  if (groups.size() != eigen_groups.size()) return false;
  std::vector<bool> used(eigen_groups.size(), false);
  for (auto& [desc, powers] : groups) {
    std::sort(powers.begin(), powers.end());
    const bool pair = desc.kind == EigenvalueDescriptor::Kind::complex_pair;
    bool hit = false;
    for (std::size_t i = 0; i < eigen_groups.size() && !hit; ++i) {
      const auto& g = eigen_groups[i];
      if (used[i] || g.conjugate_pair != pair || g.powers != powers) continue;
      const double scale = eig_tol * std::max(1.0, std::abs(desc.approx));
      const bool close = std::abs(g.value - desc.approx) <= scale || (pair && std::abs(g.value - std::conj(desc.approx)) <= scale);
      if (close) used[i] = hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

NumericStructure staircase_structure(const FloatPencil& p, Field field, std::uint64_t seed) {
  NumericStructure s;
  s.m = p.m();
  s.n = p.n();
  s.field = field;
  s.tolerance = p.tolerance;
  const double norm = std::sqrt(p.a.squaredNorm() + p.b.squaredNorm());
  s.threshold = p.tolerance * std::max(1.0, norm);
  RankJudge judge(s.threshold);
  const MatC a = p.a.cast<Cplx>(), b = p.b.cast<Cplx>();
  std::mt19937_64 rng(seed);

  // Normal rank: the largest rank over a few random directions.
  std::uniform_real_distribution<double> angle(0.0, 3.141592653589793);
  for (int trial = 0; trial < 4; ++trial) {
    const double t = angle(rng);
    s.normal_rank = std::max(s.normal_rank, judge.rank(std::cos(t) * a + std::sin(t) * b));
  }
  s.min_col_indices = indices_from(a, b, s.n - s.normal_rank, judge);
  s.min_row_indices = indices_from(a.transpose(), b.transpose(), s.m - s.normal_rank, judge);
  const int singular = static_cast<int>(s.min_col_indices.size());

  int regular = s.n;
  for (int e : s.min_col_indices) regular -= e + 1;
  for (int e : s.min_row_indices) regular -= e;

  if (regular > 0) {
    s.infinite_divisor_degrees = chain_powers(b, a, singular, regular, judge);
    const bool square_regular = s.m == s.n && s.normal_rank == s.n;
    const int finite_size = regular - power_sum(s.infinite_divisor_degrees);
    // A random projection of a singular pencil can be badly conditioned; retry with fresh ones.
    std::vector<NumericEigenGroup> groups;
    std::vector<std::string> group_warnings;
    const int attempts = square_regular ? 1 : 4;
    for (int attempt = 0; attempt < attempts; ++attempt) {
      const auto candidates = candidate_eigenvalues(a, b, s.normal_rank, square_regular, p.tolerance, rng);
      std::vector<NumericEigenGroup> found;
      std::vector<std::string> found_warnings;
      Finder finder{a, b, singular, regular, p.tolerance, square_regular, judge, found, found_warnings};
      const std::size_t top = std::max<std::size_t>(candidates.size(), 1);
      for (const auto& cluster : single_linkage(candidates, finder.radius(top))) finder.resolve(cluster, top);
      int size = 0;
      for (const auto& g : found) size += power_sum(g.powers);
      int best = 0;
      for (const auto& g : groups) best += power_sum(g.powers);
      if (attempt == 0 || (size > best && size <= finite_size)) {
        groups = std::move(found);
        group_warnings = std::move(found_warnings);
        best = size;
      }
      if (best == finite_size) break;
    }
    s.warnings.insert(s.warnings.end(), group_warnings.begin(), group_warnings.end());

    if (field == Field::real) {
      std::vector<bool> taken(groups.size(), false);
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (taken[i]) continue;
        if (groups[i].value.imag() == 0.0) {
          s.eigen_groups.push_back(groups[i]);
          continue;
        }
        std::size_t best = groups.size();
        double dist = 0.0;
        for (std::size_t j = 0; j < groups.size(); ++j) {
          if (j == i || taken[j] || groups[j].powers != groups[i].powers) continue;
          const double d = std::abs(groups[j].value - std::conj(groups[i].value));
          if (best == groups.size() || d < dist) {
            best = j;
            dist = d;
          }
        }
        if (best == groups.size()) {
          s.warnings.push_back("complex eigenvalue without a conjugate partner");
          s.eigen_groups.push_back(groups[i]);
          continue;
        }
        taken[i] = taken[best] = true;
        NumericEigenGroup g = groups[i];
        g.value = Cplx(0.5 * (g.value.real() + groups[best].value.real()),
                       0.5 * (std::abs(g.value.imag()) + std::abs(groups[best].value.imag())));
        g.conjugate_pair = true;
        s.eigen_groups.push_back(g);
      }
    } else {
      s.eigen_groups = std::move(groups);
    }
    std::sort(s.eigen_groups.begin(), s.eigen_groups.end(), [](const auto& x, const auto& y) {
      if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
      return x.value.imag() < y.value.imag();
    });
  }
  if (s.regular_size() != std::max(regular, 0)) {
    s.warnings.push_back("regular part accounts for " + std::to_string(s.regular_size()) + " of " +
                         std::to_string(regular) + " columns");
  }
  s.ill_conditioned = judge.ill();
  return s;
}

}  // namespace pencilrank

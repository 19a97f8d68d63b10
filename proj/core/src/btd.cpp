#include "pencilrank/btd.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <random>
#include <thread>

#include "pencilrank/errors.hpp"

namespace pencilrank {

Tensor3::Tensor3(int m, int n, int d) : m_(m), n_(n), d_(d) {
  if (m < 0 || n < 0 || d < 0) throw InputError("tensor dimensions must be non-negative");
  data_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(n) * static_cast<std::size_t>(d), 0.0);
}

Eigen::MatrixXd Tensor3::slice(int k) const {
  Eigen::MatrixXd s(m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) s(i, j) = (*this)(i, j, k);
  return s;
}

void Tensor3::set_slice(int k, const Eigen::MatrixXd& s) {
  if (s.rows() != m_ || s.cols() != n_) throw InputError("slice dimensions do not match the tensor");
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) (*this)(i, j, k) = s(i, j);
}

double Tensor3::norm() const {
  double acc = 0.0;
  for (double x : data_) acc += x * x;
  return std::sqrt(acc);
}

Tensor3 pencil_to_tensor(const Pencil& p) {
  Tensor3 t(p.m(), p.n(), 2);
  t.set_slice(0, p.a().to_double());
  t.set_slice(1, p.b().to_double());
  return t;
}

Tensor3 pencil_to_tensor(const FloatPencil& p) {
  Tensor3 t(p.m(), p.n(), 2);
  t.set_slice(0, p.a);
  t.set_slice(1, p.b);
  return t;
}

Tensor3 BtdState::reconstruct() const {
  const Eigen::MatrixXd m1 = u * v.transpose();
  const Eigen::MatrixXd m2 = s() > 0 ? Eigen::MatrixXd(x * y.transpose()) : Eigen::MatrixXd::Zero(u.rows(), v.rows());
  Tensor3 t(static_cast<int>(u.rows()), static_cast<int>(v.rows()), 2);
  for (int k = 0; k < 2; ++k) t.set_slice(k, w[k] * m1 + z[k] * m2);
  return t;
}

double BtdState::max_factor_norm() const {
  const double b1 = (u * v.transpose()).norm() * w.norm();
  const double b2 = s() > 0 ? (x * y.transpose()).norm() * z.norm() : 0.0;
  return std::max(b1, b2);
}

double BtdState::cond_wz() const {
  Eigen::Matrix2d m;
  m.col(0) = w;
  m.col(1) = z;
  const Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2d>(m).singularValues();
  return sv[1] > 0.0 ? sv[0] / sv[1] : std::numeric_limits<double>::infinity();
}

Pencil BtdExact::reconstruct() const {
  const MatrixQ m1 = u * v.transpose();
  const MatrixQ m2 = x.cols() > 0 ? x * y.transpose() : MatrixQ(m1.rows(), m1.cols());
  return Pencil(w[0] * m1 + z[0] * m2, w[1] * m1 + z[1] * m2);
}

namespace {

Eigen::MatrixXd truncated_factor(const Eigen::MatrixXd& m, int rank, Eigen::MatrixXd& left) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd root = svd.singularValues().head(rank).cwiseSqrt();
  left = svd.matrixU().leftCols(rank) * root.asDiagonal();
  return svd.matrixV().leftCols(rank) * root.asDiagonal();
}

}  // namespace

BtdAttaining btd_attaining(const Pencil& p, Field field) {
  const AttainResult at = attain_transform(p, field);
  BtdAttaining out;
  out.ranks = at.ranks;
  const int r = at.ranks.r, s = at.ranks.s;
  if (at.is_rational) {
    const Gl2Transform& t = at.rational;
    const MatrixQ a2 = t.t11 * p.a() + t.t12 * p.b();
    const MatrixQ b2 = t.t21 * p.a() + t.t22 * p.b();
    const auto f1 = rank_factorization(a2);
    const auto f2 = rank_factorization(b2);
    check_internal(f1.u.cols() == r && f2.u.cols() == s, "rank factorization disagrees with minimal ranks");
    const Gl2Transform inv = t.inverse();
    BtdExact ex{f1.u, f1.v, f2.u, f2.v, {inv.t11, inv.t21}, {inv.t12, inv.t22}};
    check_internal(ex.reconstruct() == p, "exact block-term reconstruction failed");
    out.state.u = ex.u.to_double();
    out.state.v = ex.v.to_double();
    out.state.x = ex.x.to_double();
    out.state.y = ex.y.to_double();
    out.state.w = {ex.w[0].to_double(), ex.w[1].to_double()};
    out.state.z = {ex.z[0].to_double(), ex.z[1].to_double()};
    out.exact = std::move(ex);
  } else {
    Eigen::Matrix2d t;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const std::string& txt = at.rows[static_cast<std::size_t>(i)].decimal[static_cast<std::size_t>(j)];
        if (txt.find('i') != std::string::npos) throw InputError("block-term factors with complex entries are not supported");
        t(i, j) = std::stod(txt);
      }
    const Eigen::MatrixXd a = p.a().to_double(), b = p.b().to_double();
    out.state.v = truncated_factor(t(0, 0) * a + t(0, 1) * b, r, out.state.u);
    out.state.y = truncated_factor(t(1, 0) * a + t(1, 1) * b, s, out.state.x);
    const Eigen::Matrix2d inv = t.inverse();
    out.state.w = inv.col(0);
    out.state.z = inv.col(1);
  }
  const Tensor3 rec = out.state.reconstruct();
  const Tensor3 orig = pencil_to_tensor(p);
  double err = 0.0;
  for (int k = 0; k < 2; ++k) err += (rec.slice(k) - orig.slice(k)).squaredNorm();
  out.state.objective = std::sqrt(err);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Real = long double;
using MatL = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vec2L = Eigen::Matrix<Real, 2, 1>;

struct Work {
  std::array<MatL, 2> t;
  MatL u, v, x, y;
  Vec2L w, z;
  bool deficient = false;

  MatL block1() const { return u * v.transpose(); }
  MatL block2() const { return x.cols() > 0 ? MatL(x * y.transpose()) : MatL::Zero(u.rows(), v.rows()); }

  Real objective() const {
    const MatL m1 = block1(), m2 = block2();
    Real acc = 0;
    for (int k = 0; k < 2; ++k) acc += (t[static_cast<std::size_t>(k)] - w[k] * m1 - z[k] * m2).squaredNorm();
    return std::sqrt(acc);
  }

  // Least-squares solution of F * gram = rhs with a minimum-norm fallback.
  MatL solve_right(const MatL& rhs, const MatL& gram) {
    if (gram.rows() == 0) return MatL::Zero(rhs.rows(), 0);
    Eigen::CompleteOrthogonalDecomposition<MatL> cod(gram);
    if (cod.rank() < gram.rows()) deficient = true;
    return cod.solve(rhs.transpose()).transpose();
  }

  // U, V of a block with weight vector c and residual slices.
  void update_pair(MatL& left, MatL& right, const Vec2L& c, const MatL& other, const Vec2L& other_c) {
    const Real cc = c.squaredNorm();
    if (cc == 0 || left.cols() == 0) {
      deficient = deficient || left.cols() > 0;
      return;
    }
    MatL s = MatL::Zero(t[0].rows(), t[0].cols());
    for (int k = 0; k < 2; ++k) s += c[k] * (t[static_cast<std::size_t>(k)] - other_c[k] * other);
    left = solve_right(s * right, (right.transpose() * right) * cc);
    right = solve_right(s.transpose() * left, (left.transpose() * left) * cc);
  }

  void update_weights() {
    const MatL m1 = block1(), m2 = block2();
    Eigen::Matrix<Real, 2, 2> g;
    g << m1.squaredNorm(), (m1.array() * m2.array()).sum(), (m1.array() * m2.array()).sum(), m2.squaredNorm();
    const bool single = x.cols() == 0;
    for (int k = 0; k < 2; ++k) {
      const MatL& tk = t[static_cast<std::size_t>(k)];
      if (single) {
        if (g(0, 0) == 0) {
          deficient = true;
          continue;
        }
        w[k] = (m1.array() * tk.array()).sum() / g(0, 0);
        continue;
      }
      Vec2L rhs((m1.array() * tk.array()).sum(), (m2.array() * tk.array()).sum());
      Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix<Real, 2, 2>> cod(g);
      if (cod.rank() < 2) deficient = true;
      const Vec2L sol = cod.solve(rhs);
      w[k] = sol[0];
      z[k] = sol[1];
    }
  }

  // Move scale from weight vectors into the factors and balance U against V.
  static void balance(MatL& left, MatL& right, Vec2L& c) {
    if (left.cols() == 0) return;
    const Real a = c.norm();
    if (a == 0) return;
    c /= a;
    const Real nl = left.norm(), nr = right.norm();
    if (nl == 0 || nr == 0) return;
    const Real total = std::sqrt(a * nl * nr);
    left *= total / nl;
    right *= total / nr;
  }
};

double sigma_at(const MatL& m, int index) {
  if (index < 0) return 0.0;
  const auto sv = Eigen::JacobiSVD<MatL>(m).singularValues();
  return index < sv.size() ? static_cast<double>(sv[index]) : 0.0;
}

MatL random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatL m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return m;
}

BtdState to_state(const Work& w, double objective, int iteration) {
  BtdState s;
  s.u = w.u.cast<double>();
  s.v = w.v.cast<double>();
  s.x = w.x.cast<double>();
  s.y = w.y.cast<double>();
  s.w = w.w.cast<double>();
  s.z = w.z.cast<double>();
  s.objective = objective;
  s.iteration = iteration;
  return s;
}

}  // namespace

AlsResult als_approximate(const Tensor3& t, int r, int s, std::uint64_t seed, const AlsConfig& config,
                          const std::optional<BtdState>& start) {
  if (t.d() != 2) throw InputError("block-term ALS needs an m x n x 2 tensor");
  if (r < s || s < 0) throw InputError("block ranks need r >= s >= 0");
  if (r > std::min(t.m(), t.n())) throw InputError("block rank exceeds min(m, n)");
  Work work;
  for (int k = 0; k < 2; ++k) work.t[static_cast<std::size_t>(k)] = t.slice(k).cast<Real>();
  const Real tnorm = static_cast<Real>(t.norm());
  if (start) {
    if (start->r() != r || start->s() != s) throw InputError("starting state has the wrong block ranks");
    work.u = start->u.cast<Real>();
    work.v = start->v.cast<Real>();
    work.x = start->x.cast<Real>();
    work.y = start->y.cast<Real>();
    work.w = start->w.cast<Real>();
    work.z = start->z.cast<Real>();
  } else {
    std::mt19937_64 rng(seed);
    work.u = random_matrix(t.m(), r, rng);
    work.v = random_matrix(t.n(), r, rng);
    work.x = random_matrix(t.m(), s, rng);
    work.y = random_matrix(t.n(), s, rng);
    work.w = Vec2L(1, 0);
    work.z = Vec2L(0, 1);
    const auto scale = [&](MatL& a, MatL& b) {
      const Real nrm = (a * b.transpose()).norm();
      if (nrm == 0 || tnorm == 0) return;
      const Real f = std::sqrt(tnorm / nrm);
      a *= f;
      b *= f;
    };
    scale(work.u, work.v);
    scale(work.x, work.y);
  }

  AlsResult out;
  Real prev = work.objective();
  out.log.initial_objective = static_cast<double>(prev);
  out.log.initial_factor_norm = to_state(work, 0.0, 0).max_factor_norm();
  int iter = 0;
  for (iter = 1; iter <= config.max_iters; ++iter) {
    work.deficient = false;
    const MatL m2 = work.block2();
    work.update_pair(work.u, work.v, work.w, m2, work.z);
    const MatL m1 = work.block1();
    work.update_pair(work.x, work.y, work.z, m1, work.w);
    work.update_weights();
    Work::balance(work.u, work.v, work.w);
    Work::balance(work.x, work.y, work.z);
    const Real obj = work.objective();

    const BtdState snap = to_state(work, static_cast<double>(obj), iter);
    IterationRecord rec;
    rec.iter = iter;
    rec.objective = static_cast<double>(obj);
    rec.max_factor_norm = snap.max_factor_norm();
    rec.cond_wz = snap.cond_wz();
    rec.sigma_min_block1 = sigma_at(work.block1(), r - 1);
    rec.sigma_min_block2 = sigma_at(work.block2(), s - 1);
    rec.min_norm_solve = work.deficient;
    out.log.records.push_back(rec);

    const Real decrease = prev - obj;
    prev = obj;
    if (obj == 0) break;
    if (config.rel_tol > 0 && decrease >= 0 && decrease < static_cast<Real>(config.rel_tol) * obj) break;
  }
  out.state = to_state(work, static_cast<double>(prev), std::min(iter, config.max_iters));
  return out;
}

DivergenceDiagnostics diagnose(const DivergenceLog& log, const AlsConfig& config) {
  DivergenceDiagnostics d;
  double prev = log.initial_objective;
  d.best_objective = prev;
  // Objectives that have converged to roundoff are compared against a floor tied to the start, so the
  // relative tolerance never resolves changes below double precision of the initial objective.
  const double floor = 1e-4 * log.initial_objective;
  for (const auto& rec : log.records) {
    const double scale = std::max(prev, floor);
    if (scale > 0) d.worst_increase = std::max(d.worst_increase, (rec.objective - prev) / scale);
    prev = rec.objective;
    d.best_objective = std::min(d.best_objective, rec.objective);
  }
  d.monotone = d.worst_increase <= config.monotone_tolerance;
  if (!log.records.empty()) {
    const auto& last = log.records.back();
    d.factor_growth = log.initial_factor_norm > 0 ? last.max_factor_norm / log.initial_factor_norm : 1.0;
    d.final_cond = last.cond_wz;
  }
  d.diverging = d.factor_growth >= config.growth_threshold && d.final_cond >= config.cond_threshold;
  return d;
}

std::vector<TrialOutcome> run_trials(const Tensor3& t, int r, int s, int trials, std::uint64_t seed,
                                     const AlsConfig& config) {
  if (trials < 1) throw InputError("at least one trial is required");
  std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(trials)));
  std::vector<std::future<void>> jobs;
  for (unsigned wkr = 0; wkr < workers; ++wkr) {
    jobs.push_back(std::async(std::launch::async, [&, wkr] {
      for (int i = static_cast<int>(wkr); i < trials; i += static_cast<int>(workers)) {
        // Per-trial seeds are derived deterministically from the base seed.
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::uint64_t trial_seed = 0;
        std::array<std::uint32_t, 2> words{};
        seq.generate(words.begin(), words.end());
        trial_seed = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
        TrialOutcome& o = out[static_cast<std::size_t>(i)];
        o.trial = i;
        o.result = als_approximate(t, r, s, trial_seed, config);
        o.diagnostics = diagnose(o.result.log, config);
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

DivergenceReport divergence_experiment(const Pencil& p, int r, int s, int trials, int iters, std::uint64_t seed,
                                       AlsConfig config) {
  if (!in_c(p)) throw InputError("divergence experiment needs a square pencil of even order with full minimal ranks");
  const int k2 = p.n();
  if (r != k2 - 1 || s != k2 - 1) throw InputError("divergence experiment runs at ranks (n-1, n-1)");
  config.max_iters = iters;
  DivergenceReport rep;
  rep.r = r;
  rep.s = s;
  rep.control_r = r + 1;
  rep.control_s = s;
  const Tensor3 t = pencil_to_tensor(p);
  rep.input_norm = t.norm();
  rep.trials = run_trials(t, r, s, trials, seed, config);
  rep.control = run_trials(t, r + 1, s, trials, seed ^ 0xc0ffeeULL, config);

  rep.best_objective = std::numeric_limits<double>::infinity();
  for (const auto& o : rep.trials) rep.best_objective = std::min(rep.best_objective, o.diagnostics.best_objective);
  rep.control_best_objective = std::numeric_limits<double>::infinity();
  rep.control_bounded = true;
  for (const auto& o : rep.control) {
    rep.control_best_objective = std::min(rep.control_best_objective, o.diagnostics.best_objective);
  }
  // Boundedness is judged on the control trials that reach the best objective.
  for (const auto& o : rep.control) {
    if (o.diagnostics.best_objective > rep.control_best_objective * (1 + 1e-6) + 1e-12) continue;
    for (const auto& rec : o.result.log.records)
      if (rec.max_factor_norm > config.bounded_factor_multiple * rep.input_norm) rep.control_bounded = false;
  }
  const int burn_in = iters / 10;
  rep.control_strictly_better = true;
  for (const auto& o : rep.trials)
    for (const auto& rec : o.result.log.records)
      if (rec.iter > burn_in && !(rep.control_best_objective < rec.objective)) rep.control_strictly_better = false;
  return rep;
}

void write_csv(std::ostream& os, const std::vector<TrialOutcome>& trials) {
  os << "trial,iter,objective,max_factor_norm,cond_wz,sigma_min_block1,sigma_min_block2\n";
  os.precision(17);
  for (const auto& t : trials)
    for (const auto& r : t.result.log.records)
      os << t.trial << ',' << r.iter << ',' << r.objective << ',' << r.max_factor_norm << ',' << r.cond_wz << ','
         << r.sigma_min_block1 << ',' << r.sigma_min_block2 << '\n';
}

namespace {

nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

nlohmann::json trials_json(const std::vector<TrialOutcome>& trials) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : trials) {
    const auto& d = t.diagnostics;
    int deficient = 0;
    for (const auto& r : t.result.log.records) deficient += r.min_norm_solve ? 1 : 0;
    arr.push_back({{"trial", t.trial},
                   {"iterations", t.result.log.records.size()},
                   {"initial_objective", t.result.log.initial_objective},
                   {"final_objective", t.result.state.objective},
                   {"best_objective", d.best_objective},
                   {"monotone", d.monotone},
                   {"worst_relative_increase", d.worst_increase},
                   {"factor_growth", finite_or_null(d.factor_growth)},
                   {"final_cond_wz", finite_or_null(d.final_cond)},
                   {"diverging", d.diverging},
                   {"min_norm_iterations", deficient}});
  }
  return arr;
}

}  // namespace

std::string summary_json(const std::vector<TrialOutcome>& trials, int r, int s, double input_norm) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& t : trials) best = std::min(best, t.diagnostics.best_objective);
  nlohmann::json j = {{"ranks", {r, s}},
                      {"input_norm", input_norm},
                      {"best_objective", finite_or_null(best)},
                      {"trials", trials_json(trials)}};
  return j.dump(2);
}

std::string summary_json(const DivergenceReport& rep) {
  nlohmann::json j = {{"ranks", {rep.r, rep.s}},
                      {"control_ranks", {rep.control_r, rep.control_s}},
                      {"input_norm", rep.input_norm},
                      {"best_objective", finite_or_null(rep.best_objective)},
                      {"control_best_objective", finite_or_null(rep.control_best_objective)},
                      {"control_strictly_better", rep.control_strictly_better},
                      {"control_bounded", rep.control_bounded},
                      {"trials", trials_json(rep.trials)},
                      {"control", trials_json(rep.control)}};
  return j.dump(2);
}

}  // namespace pencilrank

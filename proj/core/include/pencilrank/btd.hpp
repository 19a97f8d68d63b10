#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pencilrank/minimal_ranks.hpp"
#include "pencilrank/pencil.hpp"

namespace pencilrank {

/// Dense m x n x d array; slice k is the coefficient of e_k.
class Tensor3 {
 public:
  Tensor3(int m, int n, int d);
  int m() const { return m_; }
  int n() const { return n_; }
  int d() const { return d_; }
  double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
  Eigen::MatrixXd slice(int k) const;
  void set_slice(int k, const Eigen::MatrixXd& s);
  double norm() const;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(i);
  }
  int m_, n_, d_;
  std::vector<double> data_;
};

/// A (x) e1 + B (x) e2
Tensor3 pencil_to_tensor(const Pencil& p);
Tensor3 pencil_to_tensor(const FloatPencil& p);

/// (U V^T) (x) w + (X Y^T) (x) z
struct BtdState {
  Eigen::MatrixXd u, v, x, y;
  Eigen::Vector2d w{1.0, 0.0};
  Eigen::Vector2d z{0.0, 1.0};
  double objective = 0.0;
  int iteration = 0;

  int r() const { return static_cast<int>(u.cols()); }
  int s() const { return static_cast<int>(x.cols()); }
  Tensor3 reconstruct() const;
  /// max(||U V^T|| ||w||, ||X Y^T|| ||z||)
  double max_factor_norm() const;
  double cond_wz() const;
};

/// Exact decomposition with rational factors, available when the attaining transform is rational.
struct BtdExact {
  MatrixQ u, v, x, y;
  std::array<Rational, 2> w, z;
  Pencil reconstruct() const;
};

struct BtdAttaining {
  MinimalRanks ranks;
  BtdState state;
  std::optional<BtdExact> exact;
};

/// Decomposition with block ranks rho(A, B) from the attaining transform.
BtdAttaining btd_attaining(const Pencil& p, Field field = Field::real);

struct IterationRecord {
  int iter = 0;
  double objective = 0.0;
  double max_factor_norm = 0.0;
  double cond_wz = 0.0;
  double sigma_min_block1 = 0.0;
  double sigma_min_block2 = 0.0;
  bool min_norm_solve = false;  // some subproblem was rank deficient
};

struct DivergenceLog {
  double initial_objective = 0.0;
  double initial_factor_norm = 0.0;
  std::vector<IterationRecord> records;
};

struct AlsConfig {
  int max_iters = 1000;
  /// Stop once the relative objective decrease drops below this; 0 runs all iterations.
  double rel_tol = 0.0;
  /// Divergence diagnostics.
  double growth_threshold = 10.0;
  double cond_threshold = 1e3;
  double monotone_tolerance = 1e-12;
  /// Bound on control factor norms as a multiple of the input norm.
  double bounded_factor_multiple = 10.0;
};

struct AlsResult {
  BtdState state;
  DivergenceLog log;
};

/// Alternating least squares over block ranks (r, s) for an m x n x 2 tensor.
/// Random start from `seed` unless `start` is given.
AlsResult als_approximate(const Tensor3& t, int r, int s, std::uint64_t seed, const AlsConfig& config,
                          const std::optional<BtdState>& start = std::nullopt);

struct DivergenceDiagnostics {
  bool monotone = true;
  double worst_increase = 0.0;  // largest relative objective increase seen
  double factor_growth = 1.0;   // final / initial max factor norm
  double final_cond = 1.0;
  double best_objective = 0.0;
  bool diverging = false;       // growth and conditioning both over their thresholds
};
DivergenceDiagnostics diagnose(const DivergenceLog& log, const AlsConfig& config);

struct TrialOutcome {
  int trial = 0;
  AlsResult result;
  DivergenceDiagnostics diagnostics;
};

struct DivergenceReport {
  int r = 0, s = 0;
  int control_r = 0, control_s = 0;
  double input_norm = 0.0;
  std::vector<TrialOutcome> trials;
  std::vector<TrialOutcome> control;
  double best_objective = 0.0;
  double control_best_objective = 0.0;
  /// Control objective below the experiment's at every logged iteration after burn-in, best trials compared.
  bool control_strictly_better = false;
  bool control_bounded = false;
};

/// Independent seeded trials, run concurrently and ordered by trial index.
std::vector<TrialOutcome> run_trials(const Tensor3& t, int r, int s, int trials, std::uint64_t seed,
                                     const AlsConfig& config);

/// Trials at ranks (r, s) on a pencil in C plus a control run at (r + 1, s).
DivergenceReport divergence_experiment(const Pencil& p, int r, int s, int trials, int iters, std::uint64_t seed,
                                       AlsConfig config = {});

/// trial,iter,objective,max_factor_norm,cond_wz,sigma_min_block1,sigma_min_block2
void write_csv(std::ostream& os, const std::vector<TrialOutcome>& trials);
std::string summary_json(const DivergenceReport& report);
std::string summary_json(const std::vector<TrialOutcome>& trials, int r, int s, double input_norm);

}  // namespace pencilrank

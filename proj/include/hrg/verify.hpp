#pragma once

#include <functional>
#include <string>

#include "hrg/norms.hpp"

namespace hrg {

struct McEstimate {
  std::string name;
  double estimate = 0.0;
  double std_error = 0.0;
  double target = 0.0;
  double z = 0.0;
  long n_samples = 0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double slope_se = 0.0;
  int points = 0;
};

// Ordinary least squares y ~ slope * x + intercept; slope_se from residuals.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// Slope with standard error propagated from known per-point errors of y.
LinearFit weighted_slope(const std::vector<double>& x,
                         const std::vector<double>& y,
                         const std::vector<double>& se);

// Two-sided normal p-value for a z statistic.
double normal_p_value(double z);

// Deterministic sample fan-out: partitions [0, samples) over `threads`
// workers; callers write per-sample slots so the result is independent of the
// thread count.
void for_each_sample(long samples, int threads,
                     const std::function<void(long)>& fn);

// Pair moments E[Q1(xi P1 xi)(0)] (depth 1) and E[Q2(xi Gamma_2 xi)(0)]
// (depth 2) against the closed-form centering constants.
std::vector<McEstimate> mc_pair_moment(int L, int d, int n, long samples,
                                       std::uint64_t seed, int threads = 1);

// Covariance of P1 xi: diagonal, in-block off-diagonal, cross-block pair.
std::vector<McEstimate> mc_fluct_covariance(int L, int d, int n, long samples,
                                            std::uint64_t seed, int threads = 1);

// Var((II^(K) - II^(K-1))_{-n}(0)) under the coupled construction.
McEstimate mc_chaos_increment_variance(int L, int d, int n, int K, long samples,
                                       std::uint64_t seed, int threads = 1);

struct TailRow {
  double g = 0.0;
  long violations = 0;
  double p_hat = 0.0;
  double std_error = 0.0;
};

struct TailReport {
  std::vector<TailRow> rows;
  LinearFit fit;  // log p_hat vs g^-2 over rows with p_hat > 0
  long samples = 0;
};

TailReport mc_tail_probability(int L, int d, int Nmax,
                               const std::vector<double>& g_grid, long samples,
                               std::uint64_t seed, double kappa_s = 0.05,
                               int threads = 1);

struct MomentRow {
  double p = 0.0;
  double moment = 0.0;  // E[norm^p]^(1/p)
};

struct MomentGrowthReport {
  std::vector<MomentRow> rows;
  LinearFit loglog;  // log moment vs log p
  long samples = 0;
};

MomentGrowthReport mc_norm_moment_growth(int L, int d, int Nmax,
                                         const std::vector<double>& p_grid,
                                         long samples, std::uint64_t seed,
                                         double kappa_s = 0.05, int threads = 1);

struct ConvergenceReport {
  std::string quantity;
  std::vector<int> cutoffs;        // N values
  std::vector<double> distances;   // mean coupled increment distance per N
  LinearFit fit;                   // log distance vs N
};

struct ConvergenceStudy {
  std::vector<ConvergenceReport> reports;  // II, Psi, v, u
  long used_samples = 0;
  long skipped_samples = 0;
  double max_v_consistency = 0.0;  // worst |v[n] - L^-alpha coarsen(v[n+1])|
};

ConvergenceStudy convergence_study(int L, int d, int Nmax, double g, double r,
                                   long samples, std::uint64_t seed,
                                   double kappa_s = 0.05, int threads = 1);

struct BoundMonitorRow {
  std::string name;
  long violations = 0;
  double rate = 0.0;
};

// Empirical violation rates, over Omega_g samples, of the a-priori bounds the
// construction is designed to preserve: the weighted Psi bound, the per-level
// remainder bound, |v_0| <= 8, and the Q1/P1 growth envelopes of the solution
// trajectory.  Draws seeds until `samples` good-event samples are collected.
struct BoundMonitorReport {
  std::vector<BoundMonitorRow> rows;  // psi, remainder, v0, q1_growth, p1_growth
  long used_samples = 0;
  long skipped_samples = 0;
};

BoundMonitorReport mc_bound_monitors(int L, int d, int N, double g, double r,
                                     long samples, std::uint64_t seed,
                                     double kappa_s = 0.05, int threads = 1);

struct AblationRow {
  int N = 0;
  double mean_renormalized = 0.0;
  double se_renormalized = 0.0;
  double mean_ablated = 0.0;
  double se_ablated = 0.0;
};

struct AblationReport {
  std::vector<AblationRow> rows;
  double target_slope = 0.0;       // (1 - L^-d) g^2
  LinearFit ablated;               // mean ablated rho'_0 vs N
  LinearFit renormalized;          // mean renormalized rho'_0 vs N
  double renormalized_trend_p = 1.0;
};

AblationReport ablate_counterterm(int L, int d, int Nmax, double g, double r,
                                  long samples, std::uint64_t seed,
                                  int threads = 1);

}  // namespace hrg

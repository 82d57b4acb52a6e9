#pragma once

#include "hrg/noise.hpp"
#include "hrg/solver.hpp"

namespace hrg {

struct NormConfig {
  double kappa_s = 0.05;
  int Nmax = 1;

  void validate(int d) const;  // needs kappa_s in (0, alpha)
};

enum class BesovBlockKind {
  kFluctuation,  // P1 blocks (the defining form)
  kAverage,      // Q blocks (equivalent norm for beta < 0)
};

// Hierarchical Besov norm of a field living on the scaled lattice but
// represented at level N: |overall mean| combined with the weighted maxima
// L^(beta n) * max|block part of the n-level coarse-graining|, computed from
// the coarsening pyramid. For the fluctuation kind the mean enters
// additively and n runs over 1..N; for the average kind the n = 0 term is
// the mean itself and the combination is a single max.
double besov_norm(const Field& u, double beta,
                  BesovBlockKind kind = BesovBlockKind::kFluctuation);

// sup_{0<=n<=N} L^(-kappa_s n) * max( max|xi_{-n}|, max|II_{-n}|^(1/2) ).
double stochastic_norm(const EnhancedNoise& noise, int N, double kappa_s);

// Max of stochastic_norm over all cutoffs N <= Nmax (truncated uniform norm).
double uniform_stochastic_norm(const EnhancedNoise& noise, double kappa_s);

// Good event: norm_value <= 1/(2g). Requires g in (0, 1].
bool omega_indicator(double norm_value, double g);

// |v0_a - v0_b| + sup_n L^(-kappa n) max|P1 (v_a - v_b)_{-n}| up to the
// common cutoff. Default kappa = 3 kappa_s + 0.01 with kappa_s = 0.05.
double holder_distance(const SolutionTrajectory& a, const SolutionTrajectory& b,
                       double kappa = 0.16);

}  // namespace hrg

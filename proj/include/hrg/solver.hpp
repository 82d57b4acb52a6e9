#pragma once

#include <optional>

#include "hrg/flow.hpp"

namespace hrg {

struct BareProblem {
  int N = 1;
  Couplings couplings;
  const EnhancedNoise* noise = nullptr;  // non-owning
  // When set, the bare mass at level N is this value instead of the
  // renormalised closed form (used by the counterterm ablation).
  std::optional<double> bare_mass_override;

  void validate() const;
  // Coefficients entering the bare potential at level N.
  LevelCoefficients bare_coefficients() const;
  int L() const { return noise->config.L; }
  int d() const { return noise->config.d; }
};

struct SolutionTrajectory {
  int N = 0;
  std::vector<Field> v;  // v[n]: Field@n, n = 0..N
  Field u_values;        // u_N(L^-N x) = L^(-alpha N) v[N](x), on level N
};

struct RgSolveResult {
  SolutionTrajectory trajectory;
  // Coarse effective potential produced by the downward elimination;
  // rho[n]: Field@n for n = 0..N (rho[N] is the bare potential).
  std::vector<Field> rho;
  double max_condition = 0.0;
};

// Hierarchical block elimination: downward sweep eliminates in-block
// fluctuations and renormalises the potential; level-0 closure is a scalar
// equation; upward sweep reconstructs v level by level.
RgSolveResult rg_solve(const BareProblem& p,
                       const RemainderSolveOptions& opts = {});

struct DenseSolveResult {
  Field v;            // level-N solution
  double rcond = 0.0; // reciprocal condition estimate of the assembled matrix
};

// Dense oracle: assemble A = (-Delta_H) - diag(lambda xi + mu) at level N and
// solve A v = gamma * 1 by LU factorization. Level count capped.
DenseSolveResult dense_solve(const BareProblem& p,
                             std::int64_t cap = kDefaultDenseCap);

// max |(-Delta_H) v - (lambda xi + mu) v - gamma| / (1 + max|v|) at level N.
double residual(const BareProblem& p, const Field& v);

struct ReconstructedSolution {
  Field u;  // values u_N(L^-N x) on the level-N lattice
  // amplitudes[n] = L^((1-kappa) n) * max |P1 part of the scale-n coarse
  // grained u|, n = 1..N (index 0 unused).
  std::vector<double> amplitudes;
  double u0_mean = 0.0;
};

ReconstructedSolution reconstruct_u(const SolutionTrajectory& traj, double kappa);

struct EffectiveForceCrosscheck {
  // deviation[n] = max |rho[n](solver) - effective potential(flow at n)|.
  std::vector<double> deviation;
  // psi_hat[n] = (rho[n] - lambda xi - lambda^2 II - mu) / lambda^3, n = 1..N.
  std::vector<Field> psi_hat;
};

EffectiveForceCrosscheck crosscheck_effective_force(const BareProblem& p,
                                                    const RgSolveResult& solved,
                                                    const FlowTrajectory& flow);

}  // namespace hrg

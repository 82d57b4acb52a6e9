#pragma once

#include "hrg/noise.hpp"

namespace hrg {

struct Couplings {
  double g = 0.5;
  double r = 1.0;

  // g = 0 is admitted as the deterministic (noise-free) limit; the remainder
  // equation then has the analytic solution R = 0.
  Couplings() = default;
  Couplings(double g_, double r_);
};

struct LevelCoefficients {
  int n = 0;
  double lambda = 0.0;
  double mu = 0.0;
  double gamma = 1.0;
};

enum class BlockSolveMode {
  kDirect,      // closed-form diagonal-plus-rank-one solve
  kDenseLU,     // dense LU factorization per block
  kFixedPoint,  // damped fixed-point iteration (contraction route)
};

struct RemainderSolveOptions {
  BlockSolveMode mode = BlockSolveMode::kDirect;
  double condition_threshold = kDefaultConditionThreshold;
  double damping = 1.0;        // fixed-point relaxation factor
  int max_iterations = 1000;   // fixed-point only
  double tolerance = 1e-14;    // fixed-point relative update tolerance
};

struct FlowTrajectory {
  int N = 0;
  std::vector<LevelCoefficients> coeffs;  // index n = 0..N
  std::vector<Field> psi;                 // psi[n]: Field@n, psi[N] == 0
  std::vector<Field> remainder;           // remainder[n]: Field@n, n = 1..N
};

// Closed-form coefficients at level n from the renormalised couplings.
LevelCoefficients coefficients_closed_form(const Couplings& c, int n, int L, int d);

// Equivalent bare mass at cutoff N: L^(2N) * mu_{-N}.
double bare_mass_equiv(const Couplings& c, int N, int L, int d);

// One forward step of the coefficient recursion (level n -> n-1).
LevelCoefficients coefficients_step(const LevelCoefficients& coeffs, int L, int d);

// Solve the linear remainder equation at one level, block by block.
Field solve_remainder(const Field& xi_n, const Field& chaos_n, const Field& psi_n,
                      const LevelCoefficients& coeffs,
                      const RemainderSolveOptions& opts = {});

// One remainder-force step: Psi at level n-1 from the level-n data.
Field psi_step(const Field& psi_n, const Field& R, const Field& xi_n,
               const Field& chaos_n, const LevelCoefficients& coeffs);

// Full downward sweep n = N..1 producing Psi and R at every level.
FlowTrajectory run_flow(const EnhancedNoise& noise, const Couplings& c, int N,
                        const RemainderSolveOptions& opts = {});

// rho_{-n} = lambda*xi + lambda^2*chaos + lambda^3*psi + mu.
Field effective_potential(const Field& xi_n, const Field& chaos_n,
                          const Field& psi_n, const LevelCoefficients& coeffs);

}  // namespace hrg

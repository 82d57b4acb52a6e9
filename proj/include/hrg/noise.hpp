#pragma once

#include "hrg/field.hpp"
#include "hrg/operators.hpp"

namespace hrg {

struct NoiseConfig {
  std::uint64_t seed = 0;
  int Nmax = 1;
  int L = 3;
  int d = 2;

  double alpha() const { return 2.0 - static_cast<double>(d) / 2.0; }

  void validate() const;
};

// Coupled noise trajectories for all cutoffs N <= Nmax, derived from one base
// sample at level Nmax. The xi pyramid is shared across cutoffs, so the
// cross-cutoff coupling xi[N][n] == xi[Nmax][n] holds by construction
// (identical storage, not a recomputation).
struct EnhancedNoise {
  NoiseConfig config;
  // xi[n]: Field@n, n = 0..Nmax; xi[Nmax] is the base sample.
  std::vector<Field> xi;
  // chaos[N][n]: Field@n for n = 0..N; chaos[N][N] is identically zero.
  std::vector<std::vector<Field>> chaos;

  const Field& xi_at(int N, int n) const;
  const Field& chaos_at(int N, int n) const;
};

// i.i.d. standard normal field at level Nmax, flat-index order, stream "base".
Field sample_base(const NoiseConfig& config);

// xi trajectory for cutoff N from an explicit base field at level Nmax:
// xi[N] = L^((2-alpha)(Nmax-N)) * coarsen^(Nmax-N)(base), then one factor
// L^(2-alpha) per further coarsening. Returned vector is indexed by level n.
std::vector<Field> derive_xi_trajectory(const Field& base, int N);

// Pointwise xi * (P1 xi) - (1 - L^-d).
Field wick_pair_product(const Field& xi_n);

// Chaos trajectory for cutoff N via the scale recursion, indexed by level n.
std::vector<Field> chaos_recursive(const std::vector<Field>& xi_trajectory);

// Direct-definition oracle: L^((2-2alpha)(N-n)) * coarsen^(N-n) of the
// centered pair product xi_N * (Gamma_(N-n) xi_N) - c_(N-n).
Field chaos_direct(const Field& xi_N, int n);

// Closed-form centering constant c_k = (1 - L^-d) * sum_{j=1}^{k} L^((2-d)(j-1)).
double chaos_centering_constant(int L, int d, int k);

// Full coupled construction: shared xi pyramid plus chaos for every cutoff.
// Wick products are computed once per level and reused across cutoffs.
EnhancedNoise build_enhanced_noise(const NoiseConfig& config);
EnhancedNoise build_enhanced_noise(const NoiseConfig& config, const Field& base);

}  // namespace hrg

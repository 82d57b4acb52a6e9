#include <doctest.h>

#include <cmath>

#include "hrg/norms.hpp"
#include "hrg/rng.hpp"
#include "hrg/solver.hpp"

using namespace hrg;

namespace {

EnhancedNoise make_noise(std::uint64_t seed, int Nmax) {
  NoiseConfig cfg;
  cfg.seed = seed;
  cfg.Nmax = Nmax;
  return build_enhanced_noise(cfg);
}

}  // namespace

TEST_CASE("noise-free solve has the constant closed-form solution") {
  const EnhancedNoise noise = make_noise(201, 3);
  for (double r : {1.0, 2.0}) {
    BareProblem p;
    p.N = 3;
    p.couplings = Couplings(0.0, r);
    p.noise = &noise;
    const RgSolveResult sol = rg_solve(p);
    // (-Delta - mu) u = -gamma with u constant: u = -1/r after rescaling.
    for (std::int64_t i = 0; i < sol.trajectory.u_values.size(); ++i)
      CHECK(sol.trajectory.u_values[i] == doctest::Approx(-1.0 / r).epsilon(1e-12));
    CHECK(residual(p, sol.trajectory.v[3]) <= 1e-13);
  }
}

TEST_CASE("rg solve agrees with the dense oracle on good samples") {
  const Couplings c(0.1, 1.0);
  int used = 0;
  for (std::uint64_t k = 0; k < 12 && used < 8; ++k) {
    const EnhancedNoise noise = make_noise(sample_seed(211, k), 2);
    if (!omega_indicator(uniform_stochastic_norm(noise, 0.05), c.g)) continue;
    ++used;
    BareProblem p;
    p.N = 2;
    p.couplings = c;
    p.noise = &noise;
    const RgSolveResult sol = rg_solve(p);
    const DenseSolveResult dense = dense_solve(p);
    const double scale = std::max(1.0, max_abs(dense.v));
    CHECK(max_abs(sol.trajectory.v[2] - dense.v) / scale <= 1e-9);
    CHECK(residual(p, sol.trajectory.v[2]) <= 1e-10);
    CHECK(dense.rcond > 0.0);
    CHECK(sol.max_condition >= 1.0);
  }
  CHECK(used >= 8);
}

TEST_CASE("solution trajectory is coarsening consistent") {
  const EnhancedNoise noise = make_noise(223, 3);
  BareProblem p;
  p.N = 3;
  p.couplings = Couplings(0.1, 1.0);
  p.noise = &noise;
  const RgSolveResult sol = rg_solve(p);
  CHECK(static_cast<int>(sol.trajectory.v.size()) == 4);
  for (int n = 0; n < 3; ++n) {
    const Field pred =
        (1.0 / 3.0) * coarsen(sol.trajectory.v[static_cast<std::size_t>(n) + 1]);
    CHECK(max_abs(sol.trajectory.v[static_cast<std::size_t>(n)] - pred) <= 1e-11);
  }
  // u is the rescaled finest level: u = L^(-alpha N) v[N].
  const double scale = std::pow(3.0, -3);
  CHECK(max_abs(sol.trajectory.u_values - scale * sol.trajectory.v[3]) <= 1e-14);
}

TEST_CASE("effective force crosscheck ties solver and flow together") {
  const Couplings c(0.1, 1.0);
  const EnhancedNoise noise = make_noise(227, 2);
  BareProblem p;
  p.N = 2;
  p.couplings = c;
  p.noise = &noise;
  const RgSolveResult sol = rg_solve(p);
  const FlowTrajectory flow = run_flow(noise, c, 2);
  const auto cross = crosscheck_effective_force(p, sol, flow);
  REQUIRE(cross.deviation.size() == 3);
  for (double dev : cross.deviation) CHECK(dev <= 1e-8);
  // psi_hat extracted from rho must match the flow's Psi.
  for (int n = 1; n <= 2; ++n)
    CHECK(max_abs(cross.psi_hat[static_cast<std::size_t>(n)] -
                  flow.psi[static_cast<std::size_t>(n)]) <= 1e-6);
}

TEST_CASE("bare mass override reproduces the renormalised run when equal") {
  const EnhancedNoise noise = make_noise(229, 2);
  const Couplings c(0.5, 1.0);
  BareProblem p;
  p.N = 2;
  p.couplings = c;
  p.noise = &noise;
  const RgSolveResult a = rg_solve(p);
  p.bare_mass_override = bare_mass_equiv(c, 2, 3, 2);
  const RgSolveResult b = rg_solve(p);
  CHECK(max_abs(a.trajectory.v[2] - b.trajectory.v[2]) == 0.0);
  // A different override changes the level-0 effective scalar.
  p.bare_mass_override = c.r;
  const RgSolveResult ab = rg_solve(p);
  CHECK(ab.rho[0][0] > a.rho[0][0]);
}

TEST_CASE("reconstruct_u reports the scale decomposition") {
  const EnhancedNoise noise = make_noise(233, 3);
  BareProblem p;
  p.N = 3;
  p.couplings = Couplings(0.1, 1.0);
  p.noise = &noise;
  const RgSolveResult sol = rg_solve(p);
  const ReconstructedSolution rec = reconstruct_u(sol.trajectory, 0.16);
  CHECK(max_abs(rec.u - sol.trajectory.u_values) == 0.0);
  CHECK(rec.amplitudes.size() == 4);
  CHECK(rec.u0_mean ==
        doctest::Approx(mean_total(sol.trajectory.u_values)).epsilon(1e-12));
  for (int n = 1; n <= 3; ++n)
    CHECK(rec.amplitudes[static_cast<std::size_t>(n)] >= 0.0);
}

TEST_CASE("bare problem validation") {
  BareProblem p;
  p.noise = nullptr;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  const EnhancedNoise noise = make_noise(239, 2);
  p.noise = &noise;
  p.N = 5;  // exceeds the noise cutoff
  CHECK_THROWS_AS(p.validate(), PreconditionError);
}

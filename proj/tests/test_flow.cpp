#include <doctest.h>

#include <cmath>

#include "hrg/flow.hpp"
#include "hrg/rng.hpp"

using namespace hrg;

namespace {

EnhancedNoise make_noise(std::uint64_t seed, int Nmax) {
  NoiseConfig cfg;
  cfg.seed = seed;
  cfg.Nmax = Nmax;
  return build_enhanced_noise(cfg);
}

}  // namespace

TEST_CASE("closed-form coefficient spot values") {
  const Couplings c(0.5, 1.0);
  const auto k2 = coefficients_closed_form(c, 2, 3, 2);
  CHECK(k2.lambda == doctest::Approx(1.0 / 18.0).epsilon(1e-15));
  CHECK(k2.mu == doctest::Approx(5.0 / 729.0).epsilon(1e-15));
  CHECK(k2.gamma == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  const auto k0 = coefficients_closed_form(c, 0, 3, 2);
  CHECK(k0.lambda == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(k0.mu == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(k0.gamma == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(coefficients_closed_form(c, -1, 3, 2), PreconditionError);
  CHECK_THROWS_AS(Couplings(-0.1, 1.0), PreconditionError);
  CHECK_THROWS_AS(Couplings(1.5, 1.0), PreconditionError);
  CHECK_THROWS_AS(Couplings(0.5, 0.5), PreconditionError);
}

TEST_CASE("one recursion step from level 2") {
  const Couplings c(0.5, 1.0);
  const auto k1 = coefficients_step(coefficients_closed_form(c, 2, 3, 2), 3, 2);
  CHECK(k1.n == 1);
  CHECK(k1.lambda == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(k1.mu == doctest::Approx(7.0 / 81.0).epsilon(1e-14));
  CHECK(k1.gamma == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("recursion reproduces the closed form for N <= 8") {
  for (const auto& [g, r] : {std::pair{0.5, 1.0}, {0.1, 2.0}, {1.0, 1.5}}) {
    const Couplings c(g, r);
    for (int N = 1; N <= 8; ++N) {
      auto k = coefficients_closed_form(c, N, 3, 2);
      for (int n = N; n >= 1; --n) {
        k = coefficients_step(k, 3, 2);
        const auto ref = coefficients_closed_form(c, n - 1, 3, 2);
        CHECK(std::fabs(k.lambda - ref.lambda) <=
              1e-14 * std::max(1.0, std::fabs(ref.lambda)));
        CHECK(std::fabs(k.mu - ref.mu) <=
              1e-14 * std::max(1.0, std::fabs(ref.mu)));
        CHECK(std::fabs(k.gamma - ref.gamma) <=
              1e-14 * std::max(1.0, std::fabs(ref.gamma)));
      }
    }
  }
}

TEST_CASE("bare mass carries the counterterm") {
  const Couplings c(0.5, 1.0);
  CHECK(bare_mass_equiv(c, 4, 3, 2) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  for (int N = 1; N <= 6; ++N)
    CHECK(bare_mass_equiv(c, N, 3, 2) ==
          doctest::Approx(std::pow(9.0, N) *
                          coefficients_closed_form(c, N, 3, 2).mu)
              .epsilon(1e-12));
}

TEST_CASE("remainder solve satisfies its block equation") {
  const EnhancedNoise noise = make_noise(101, 3);
  const Couplings c(0.5, 1.0);
  for (int n = 1; n <= 3; ++n) {
    const auto k = coefficients_closed_form(c, n, 3, 2);
    const Field& xi = noise.xi_at(3, n);
    const Field& ch = noise.chaos_at(3, n);
    const Field psi(LatticeSpec(3, 2, n), 0.0);
    const Field R = solve_remainder(xi, ch, psi, k);

    CHECK(max_abs(coarsen(R)) <= 1e-11);  // remainder is a fluctuation field

    // Residual of ((1-mu) I - P1 diag(rho_tilde)) R = P1 rhs, with rhs and
    // rho_tilde recomputed independently.
    const Field p1xi = fluct(xi);
    Field rhs = ch + hadamard(xi, p1xi);
    add_scaled(rhs, k.lambda, psi);
    add_scaled(rhs, k.lambda, hadamard(ch, p1xi));
    add_scaled(rhs, k.lambda * k.lambda, hadamard(psi, p1xi));
    add_scaled(rhs, k.mu / k.lambda, xi);
    rhs = fluct(rhs);
    Field rho_t = k.lambda * xi;
    add_scaled(rho_t, k.lambda * k.lambda, ch);
    add_scaled(rho_t, k.lambda * k.lambda * k.lambda, psi);
    Field lhs = (1.0 - k.mu) * R - fluct(hadamard(rho_t, R));
    CHECK(max_abs(lhs - rhs) <= 1e-11);
  }
}

TEST_CASE("block solve modes agree") {
  const EnhancedNoise noise = make_noise(103, 2);
  const Couplings c(0.5, 1.0);
  const auto k = coefficients_closed_form(c, 2, 3, 2);
  const Field psi(LatticeSpec(3, 2, 2), 0.0);
  const Field& xi = noise.xi_at(2, 2);
  const Field& ch = noise.chaos_at(2, 2);

  RemainderSolveOptions direct, lu, fp;
  lu.mode = BlockSolveMode::kDenseLU;
  fp.mode = BlockSolveMode::kFixedPoint;
  fp.damping = 0.5;
  fp.max_iterations = 20000;
  const Field rd = solve_remainder(xi, ch, psi, k, direct);
  const Field rl = solve_remainder(xi, ch, psi, k, lu);
  const Field rf = solve_remainder(xi, ch, psi, k, fp);
  CHECK(max_abs(rd - rl) <= 1e-12);
  CHECK(max_abs(rd - rf) <= 1e-9);
}

TEST_CASE("remainder solve degenerate inputs") {
  const LatticeSpec s(3, 2, 1);
  const Field zero(s, 0.0);
  LevelCoefficients k;
  k.lambda = 0.0;
  k.mu = 0.2;
  CHECK(max_abs(solve_remainder(zero, zero, zero, k)) == 0.0);

  k.lambda = 0.5;
  k.mu = 1.0;
  CHECK_THROWS_AS(solve_remainder(zero, zero, zero, k), PreconditionError);

  // Constant xi with lambda = 1, mu = 0 makes every block matrix singular.
  LevelCoefficients bad;
  bad.lambda = 1.0;
  bad.mu = 0.0;
  const Field ones(s, 1.0);
  CHECK_THROWS_AS(solve_remainder(ones, zero, zero, bad), SingularBlockError);
}

TEST_CASE("psi step contracts and run_flow wires the levels") {
  const EnhancedNoise noise = make_noise(107, 3);
  const Couplings c(0.5, 1.0);
  const FlowTrajectory flow = run_flow(noise, c, 3);
  CHECK(flow.N == 3);
  CHECK(flow.coeffs.size() == 4);
  CHECK(max_abs(flow.psi[3]) == 0.0);
  for (int n = 3; n >= 1; --n) {
    const auto& k = flow.coeffs[static_cast<std::size_t>(n)];
    const Field expect =
        psi_step(flow.psi[static_cast<std::size_t>(n)],
                 flow.remainder[static_cast<std::size_t>(n)],
                 noise.xi_at(3, n), noise.chaos_at(3, n), k);
    CHECK(max_abs(flow.psi[static_cast<std::size_t>(n) - 1] - expect) == 0.0);
    CHECK(max_abs(coarsen(flow.remainder[static_cast<std::size_t>(n)])) <= 1e-11);
  }
}

TEST_CASE("noise-free flow is exactly trivial") {
  const EnhancedNoise noise = make_noise(109, 3);
  const FlowTrajectory flow = run_flow(noise, Couplings(0.0, 1.5), 3);
  for (int n = 0; n <= 3; ++n) CHECK(max_abs(flow.psi[static_cast<std::size_t>(n)]) == 0.0);
  for (int n = 1; n <= 3; ++n)
    CHECK(max_abs(flow.remainder[static_cast<std::size_t>(n)]) == 0.0);
}

TEST_CASE("effective potential assembles the force") {
  const EnhancedNoise noise = make_noise(113, 2);
  const Couplings c(0.3, 1.0);
  const auto k = coefficients_closed_form(c, 2, 3, 2);
  const Field psi(LatticeSpec(3, 2, 2), 0.25);
  const Field rho =
      effective_potential(noise.xi_at(2, 2), noise.chaos_at(2, 2), psi, k);
  const Field& xi = noise.xi_at(2, 2);
  const Field& ch = noise.chaos_at(2, 2);
  for (std::int64_t i = 0; i < rho.size(); ++i)
    CHECK(rho[i] == doctest::Approx(k.lambda * xi[i] + k.lambda * k.lambda * ch[i] +
                                    std::pow(k.lambda, 3) * 0.25 + k.mu)
                        .epsilon(1e-14));
}

#include "hrg/flow.hpp"

#include <cmath>
#include <string>

#include "block_solve.hpp"

namespace hrg {

namespace {

double alpha_of(int d) { return 2.0 - static_cast<double>(d) / 2.0; }

void check_level(const Field& f, int n, const char* what) {
  if (f.spec.n != n)
    throw PreconditionError(std::string(what) + ": field level mismatch");
}

}  // namespace

Couplings::Couplings(double g_, double r_) : g(g_), r(r_) {
  if (!(g >= 0.0 && g <= 1.0))
    throw PreconditionError("Couplings: g must lie in [0, 1]");
  if (!(r >= 1.0)) throw PreconditionError("Couplings: r must be >= 1");
}

LevelCoefficients coefficients_closed_form(const Couplings& c, int n, int L,
                                           int d) {
  if (n < 0) throw PreconditionError("coefficients_closed_form: n must be >= 0");
  const double a = alpha_of(d);
  const double Ld = std::pow(static_cast<double>(L), d);
  LevelCoefficients out;
  out.n = n;
  out.lambda = std::pow(static_cast<double>(L), -a * n) * c.g;
  out.mu = std::pow(static_cast<double>(L), -2.0 * n) *
           (c.r - (1.0 - 1.0 / Ld) * n * c.g * c.g);
  out.gamma = std::pow(static_cast<double>(L), -(2.0 - a) * n);
  return out;
}

double bare_mass_equiv(const Couplings& c, int N, int L, int d) {
  const double Ld = std::pow(static_cast<double>(L), d);
  return c.r - (1.0 - 1.0 / Ld) * N * c.g * c.g;
}

LevelCoefficients coefficients_step(const LevelCoefficients& coeffs, int L,
                                    int d) {
  if (coeffs.n < 1) throw PreconditionError("coefficients_step: n must be >= 1");
  const double a = alpha_of(d);
  const double Ld = std::pow(static_cast<double>(L), d);
  const double La = std::pow(static_cast<double>(L), a);
  LevelCoefficients out;
  out.n = coeffs.n - 1;
  out.lambda = La * coeffs.lambda;
  out.mu = static_cast<double>(L) * L *
           (coeffs.mu + (1.0 - 1.0 / Ld) * coeffs.lambda * coeffs.lambda);
  out.gamma = std::pow(static_cast<double>(L), 2.0 - a) * coeffs.gamma;
  return out;
}

Field solve_remainder(const Field& xi_n, const Field& chaos_n,
                      const Field& psi_n, const LevelCoefficients& coeffs,
                      const RemainderSolveOptions& opts) {
  const int n = xi_n.spec.n;
  if (n < 1) throw PreconditionError("solve_remainder: level must be >= 1");
  check_level(chaos_n, n, "solve_remainder(chaos)");
  check_level(psi_n, n, "solve_remainder(psi)");
  const double lam = coeffs.lambda, mu = coeffs.mu;
  if (lam < 0.0) throw PreconditionError("solve_remainder: lambda must be >= 0");
  if (lam == 0.0) return Field(xi_n.spec, 0.0);  // noise-free analytic limit
  if (mu == 1.0)
    throw PreconditionError("solve_remainder: mu = 1 (resonant mass)");

  const Field p1xi = fluct(xi_n);

  // rhs = P1 II + P1(xi * P1 xi) + lam P1 Psi + lam P1(II * P1 xi)
  //       + lam^2 P1(Psi * P1 xi) + (mu/lam) P1 xi
  Field rhs_raw = chaos_n + hadamard(xi_n, p1xi);
  add_scaled(rhs_raw, lam, psi_n);
  add_scaled(rhs_raw, lam, hadamard(chaos_n, p1xi));
  add_scaled(rhs_raw, lam * lam, hadamard(psi_n, p1xi));
  add_scaled(rhs_raw, mu / lam, xi_n);
  Field rhs = fluct(rhs_raw);

  // rho_tilde = lam xi + lam^2 II + lam^3 Psi; the block map is
  // R -> mu R + P1(rho_tilde * R), so solve ((1-mu) I - P1 diag(rho_tilde)) R = rhs.
  Field rho_t = lam * xi_n;
  add_scaled(rho_t, lam * lam, chaos_n);
  add_scaled(rho_t, lam * lam * lam, psi_n);

  const auto table = block_index_table(xi_n.spec);
  std::size_t m = 1;
  for (int k = 0; k < xi_n.spec.d; ++k) m *= static_cast<std::size_t>(xi_n.spec.L);
  const std::int64_t nblocks = xi_n.spec.point_count() / static_cast<std::int64_t>(m);

  Field R(xi_n.spec, 0.0);
  std::vector<double> b(m), rr(m), xx(m);
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::int64_t* idx = table.data() + blk * static_cast<std::int64_t>(m);
    for (std::size_t j = 0; j < m; ++j) {
      b[j] = rho_t[idx[j]];
      rr[j] = rhs[idx[j]];
    }
    detail::solve_block(1.0 - mu, b.data(), rr.data(), xx.data(), m, opts, n, blk);
    for (std::size_t j = 0; j < m; ++j) R[idx[j]] = xx[j];
  }
  return R;
}

Field psi_step(const Field& psi_n, const Field& R, const Field& xi_n,
               const Field& chaos_n, const LevelCoefficients& coeffs) {
  const int n = xi_n.spec.n;
  if (n < 1) throw PreconditionError("psi_step: level must be >= 1");
  check_level(psi_n, n, "psi_step(psi)");
  check_level(R, n, "psi_step(R)");
  check_level(chaos_n, n, "psi_step(chaos)");
  const double lam = coeffs.lambda;
  const double a = alpha_of(xi_n.spec.d);
  const double gain = std::pow(static_cast<double>(xi_n.spec.L), 2.0 - 3.0 * a);

  const Field p1xi = fluct(xi_n);
  Field acc = psi_n + hadamard(xi_n, R) + hadamard(chaos_n, p1xi);
  add_scaled(acc, lam, hadamard(chaos_n, R));
  add_scaled(acc, lam, hadamard(psi_n, p1xi));
  add_scaled(acc, lam * lam, hadamard(psi_n, R));
  return gain * coarsen(acc);
}

FlowTrajectory run_flow(const EnhancedNoise& noise, const Couplings& c, int N,
                        const RemainderSolveOptions& opts) {
  if (N < 1 || N > noise.config.Nmax)
    throw PreconditionError("run_flow: N out of range");
  const int L = noise.config.L, d = noise.config.d;
  FlowTrajectory out;
  out.N = N;
  out.coeffs.resize(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n)
    out.coeffs[static_cast<std::size_t>(n)] = coefficients_closed_form(c, n, L, d);
  out.psi.resize(static_cast<std::size_t>(N) + 1);
  out.remainder.resize(static_cast<std::size_t>(N) + 1);
  out.psi[static_cast<std::size_t>(N)] = Field(LatticeSpec(L, d, N), 0.0);
  if (c.g == 0.0) {
    // Noise-free coupling: the effective potential is exactly mu at every
    // level, so the stochastic sector is vacuous and Psi = R = 0 throughout.
    for (int n = N - 1; n >= 0; --n)
      out.psi[static_cast<std::size_t>(n)] = Field(LatticeSpec(L, d, n), 0.0);
    for (int n = 1; n <= N; ++n)
      out.remainder[static_cast<std::size_t>(n)] =
          Field(LatticeSpec(L, d, n), 0.0);
    return out;
  }
  for (int n = N; n >= 1; --n) {
    const auto& cf = out.coeffs[static_cast<std::size_t>(n)];
    const Field& xi_n = noise.xi_at(N, n);
    const Field& ch_n = noise.chaos_at(N, n);
    Field& psi_n = out.psi[static_cast<std::size_t>(n)];
    Field R = solve_remainder(xi_n, ch_n, psi_n, cf, opts);
    out.psi[static_cast<std::size_t>(n - 1)] = psi_step(psi_n, R, xi_n, ch_n, cf);
    out.remainder[static_cast<std::size_t>(n)] = std::move(R);
  }
  return out;
}

Field effective_potential(const Field& xi_n, const Field& chaos_n,
                          const Field& psi_n, const LevelCoefficients& coeffs) {
  const double lam = coeffs.lambda;
  Field rho = lam * xi_n;
  add_scaled(rho, lam * lam, chaos_n);
  add_scaled(rho, lam * lam * lam, psi_n);
  for (auto& v : rho.values) v += coeffs.mu;
  return rho;
}

}  // namespace hrg

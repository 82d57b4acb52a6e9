#include "hrg/solver.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "block_solve.hpp"

namespace hrg {

namespace {

double alpha_of(int d) { return 2.0 - static_cast<double>(d) / 2.0; }

}  // namespace

void BareProblem::validate() const {
  if (noise == nullptr) throw PreconditionError("BareProblem: missing noise");
  if (N < 1 || N > noise->config.Nmax)
    throw PreconditionError("BareProblem: N out of range");
}

LevelCoefficients BareProblem::bare_coefficients() const {
  LevelCoefficients c = coefficients_closed_form(couplings, N, L(), d());
  if (bare_mass_override)
    c.mu = std::pow(static_cast<double>(L()), -2.0 * N) * *bare_mass_override;
  return c;
}

RgSolveResult rg_solve(const BareProblem& p, const RemainderSolveOptions& opts) {
  p.validate();
  const int L = p.L(), d = p.d(), N = p.N;
  const double a = alpha_of(d);
  const double La = std::pow(static_cast<double>(L), a);
  const double L2 = static_cast<double>(L) * L;

  RgSolveResult out;
  out.rho.resize(static_cast<std::size_t>(N) + 1);
  std::vector<Field> gain(static_cast<std::size_t>(N) + 1);  // in-block m fields

  // Bare potential at level N: lambda_{-N} xi_{-N} + mu_{-N}.
  const LevelCoefficients cN = p.bare_coefficients();
  {
    Field rho = cN.lambda * p.noise->xi_at(N, N);
    for (auto& v : rho.values) v += cN.mu;
    out.rho[static_cast<std::size_t>(N)] = std::move(rho);
  }
  double gamma = cN.gamma;

  std::size_t m = 1;
  for (int k = 0; k < d; ++k) m *= static_cast<std::size_t>(L);

  // Downward sweep: per block solve (I - P1_B diag(rho_B)) m_B = P1_B rho_B,
  // then renormalise the potential to the coarse level.
  for (int n = N; n >= 1; --n) {
    const Field& rho = out.rho[static_cast<std::size_t>(n)];
    const auto table = block_index_table(rho.spec);
    const std::int64_t nblocks =
        rho.spec.point_count() / static_cast<std::int64_t>(m);
    Field mfield(rho.spec, 0.0);
    Field coarse_rho(rho.spec.coarser(), 0.0);
    std::vector<double> b(m), rr(m), xx(m);
    for (std::int64_t blk = 0; blk < nblocks; ++blk) {
      const std::int64_t* idx = table.data() + blk * static_cast<std::int64_t>(m);
      double mean = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        b[j] = rho[idx[j]];
        mean += b[j];
      }
      mean /= static_cast<double>(m);
      for (std::size_t j = 0; j < m; ++j) rr[j] = b[j] - mean;  // P1_B rho_B
      const double cond =
          detail::solve_block(1.0, b.data(), rr.data(), xx.data(), m, opts, n, blk);
      out.max_condition = std::max(out.max_condition, cond);
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        mfield[idx[j]] = xx[j];
        acc += b[j] * (1.0 + xx[j]);
      }
      coarse_rho[blk] = L2 * acc / static_cast<double>(m);
    }
    gain[static_cast<std::size_t>(n)] = std::move(mfield);
    out.rho[static_cast<std::size_t>(n - 1)] = std::move(coarse_rho);
    gamma *= std::pow(static_cast<double>(L), 2.0 - a);
  }

  // Level 0: algebraic closure. gamma has been rescaled back to gamma_0 = 1.
  const double rho0 = out.rho[0][0];
  if (rho0 == 0.0 || !std::isfinite(1.0 / rho0))
    throw SingularBlockError("level-0 effective potential vanishes", 0, 0);
  SolutionTrajectory traj;
  traj.N = N;
  traj.v.resize(static_cast<std::size_t>(N) + 1);
  traj.v[0] = Field(LatticeSpec(L, d, 0), -gamma / rho0);

  // Upward sweep: v_{-n} = (1 + m) * (L^alpha refine(v_{-n+1})).
  for (int n = 1; n <= N; ++n) {
    Field up = La * refine(traj.v[static_cast<std::size_t>(n - 1)]);
    const Field& mf = gain[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < up.values.size(); ++i)
      up.values[i] *= 1.0 + mf.values[i];
    traj.v[static_cast<std::size_t>(n)] = std::move(up);
  }
  traj.u_values = std::pow(static_cast<double>(L), -a * N) *
                  traj.v[static_cast<std::size_t>(N)];
  out.trajectory = std::move(traj);
  return out;
}

DenseSolveResult dense_solve(const BareProblem& p, std::int64_t cap) {
  p.validate();
  const int L = p.L(), d = p.d(), N = p.N;
  const LatticeSpec spec(L, d, N);
  if (spec.point_count() > cap)
    throw PreconditionError("dense_solve: lattice exceeds dense cap");
  const LevelCoefficients cN = p.bare_coefficients();
  const auto lap = assemble_dense_operator(OperatorKind::kNegLaplacian, spec,
                                           0, cap);
  const Field& xi = p.noise->xi_at(N, N);
  const std::int64_t np = spec.point_count();
  Eigen::MatrixXd A(np, np);
  for (std::int64_t i = 0; i < np; ++i)
    for (std::int64_t j = 0; j < np; ++j) A(i, j) = lap.at(i, j);
  for (std::int64_t i = 0; i < np; ++i)
    A(i, i) -= cN.lambda * xi[i] + cN.mu;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  DenseSolveResult out;
  out.rcond = lu.rcond();
  if (!(out.rcond > 1.0 / kDefaultConditionThreshold))
    throw SingularBlockError("dense_solve: matrix numerically singular", N, -1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Constant(np, cN.gamma);
  Eigen::VectorXd v = lu.solve(rhs);
  out.v = Field(spec, 0.0);
  for (std::int64_t i = 0; i < np; ++i) out.v[i] = v(i);
  return out;
}

double residual(const BareProblem& p, const Field& v) {
  p.validate();
  const int L = p.L(), d = p.d(), N = p.N;
  if (v.spec != LatticeSpec(L, d, N))
    throw PreconditionError("residual: field lattice mismatch");
  const LevelCoefficients cN = p.bare_coefficients();
  const Field& xi = p.noise->xi_at(N, N);
  Field lhs = apply_neg_laplacian(v);
  double worst = 0.0;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    const double r = lhs.values[i] -
                     (cN.lambda * xi.values[i] + cN.mu) * v.values[i] - cN.gamma;
    worst = std::max(worst, std::fabs(r));
  }
  return worst / (1.0 + max_abs(v));
}

ReconstructedSolution reconstruct_u(const SolutionTrajectory& traj,
                                    double kappa) {
  ReconstructedSolution out;
  if (traj.v.empty()) throw PreconditionError("reconstruct_u: empty trajectory");
  const int N = traj.N;
  const int L = traj.v[0].spec.L;
  const int d = traj.v[0].spec.d;
  const double a = alpha_of(d);
  out.u = traj.u_values;
  out.u0_mean = traj.v[0][0];
  out.amplitudes.assign(static_cast<std::size_t>(N) + 1, 0.0);
  for (int n = 1; n <= N; ++n) {
    // Scale-n component of the reconstructed solution: u at scale n is
    // L^(-alpha n) v_{-n}; its in-block fluctuation carries the amplitude.
    Field un = std::pow(static_cast<double>(L), -a * n) *
               traj.v[static_cast<std::size_t>(n)];
    out.amplitudes[static_cast<std::size_t>(n)] =
        std::pow(static_cast<double>(L), (1.0 - kappa) * n) * max_abs(fluct(un));
  }
  return out;
}

EffectiveForceCrosscheck crosscheck_effective_force(const BareProblem& p,
                                                    const RgSolveResult& solved,
                                                    const FlowTrajectory& flow) {
  p.validate();
  if (flow.N != p.N || static_cast<int>(solved.rho.size()) != p.N + 1)
    throw PreconditionError("crosscheck_effective_force: cutoff mismatch");
  const int N = p.N;
  EffectiveForceCrosscheck out;
  out.deviation.assign(static_cast<std::size_t>(N) + 1, 0.0);
  out.psi_hat.resize(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    const auto& cf = flow.coeffs[static_cast<std::size_t>(n)];
    const Field& rho = solved.rho[static_cast<std::size_t>(n)];
    const Field& xi = p.noise->xi_at(N, n);
    const Field& ch = p.noise->chaos_at(N, n);
    Field expect = effective_potential(xi, ch,
                                       flow.psi[static_cast<std::size_t>(n)], cf);
    out.deviation[static_cast<std::size_t>(n)] = max_abs(rho - expect);
    if (n >= 1 && cf.lambda > 0.0) {
      Field num = rho - (cf.lambda * xi);
      add_scaled(num, -cf.lambda * cf.lambda, ch);
      for (auto& v : num.values) v -= cf.mu;
      out.psi_hat[static_cast<std::size_t>(n)] =
          (1.0 / (cf.lambda * cf.lambda * cf.lambda)) * num;
    }
  }
  return out;
}

}  // namespace hrg

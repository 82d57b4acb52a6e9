#include "hrg/norms.hpp"

#include <cmath>

namespace hrg {

void NormConfig::validate(int d) const {
  const double alpha = 2.0 - static_cast<double>(d) / 2.0;
  if (!(kappa_s > 0.0 && kappa_s < alpha))
    throw PreconditionError("NormConfig: kappa_s must lie in (0, alpha)");
  if (Nmax < 0) throw PreconditionError("NormConfig: Nmax must be >= 0");
}

double besov_norm(const Field& u, double beta, BesovBlockKind kind) {
  const int N = u.spec.n;
  const double L = u.spec.L;
  Field g = u;
  double best = 0.0;
  for (int n = N; n >= 1; --n) {
    const double w = std::pow(L, beta * n);
    const double part = (kind == BesovBlockKind::kFluctuation)
                            ? max_abs(fluct(g))
                            : max_abs(g);
    best = std::max(best, w * part);
    g = coarsen(g);
  }
  const double mean = std::fabs(g[0]);
  if (kind == BesovBlockKind::kFluctuation) return mean + best;
  return std::max(mean, best);
}

double stochastic_norm(const EnhancedNoise& noise, int N, double kappa_s) {
  if (N < 0 || N > noise.config.Nmax)
    throw PreconditionError("stochastic_norm: N out of range");
  const double L = noise.config.L;
  double best = 0.0;
  for (int n = 0; n <= N; ++n) {
    const double w = std::pow(L, -kappa_s * n);
    const double xi = max_abs(noise.xi_at(N, n));
    const double ch = std::sqrt(max_abs(noise.chaos_at(N, n)));
    best = std::max(best, w * std::max(xi, ch));
  }
  return best;
}

double uniform_stochastic_norm(const EnhancedNoise& noise, double kappa_s) {
  double best = 0.0;
  for (int N = 0; N <= noise.config.Nmax; ++N)
    best = std::max(best, stochastic_norm(noise, N, kappa_s));
  return best;
}

bool omega_indicator(double norm_value, double g) {
  if (!(g > 0.0 && g <= 1.0))
    throw PreconditionError("omega_indicator: g must lie in (0, 1]");
  return norm_value <= 1.0 / (2.0 * g);
}

double holder_distance(const SolutionTrajectory& a, const SolutionTrajectory& b,
                       double kappa) {
  if (a.v.empty() || b.v.empty())
    throw PreconditionError("holder_distance: empty trajectory");
  if (a.v[0].spec.L != b.v[0].spec.L || a.v[0].spec.d != b.v[0].spec.d)
    throw PreconditionError("holder_distance: incompatible lattices");
  const int N = std::min(a.N, b.N);
  const double L = a.v[0].spec.L;
  double dist = std::fabs(a.v[0][0] - b.v[0][0]);
  double best = 0.0;
  for (int n = 1; n <= N; ++n) {
    const Field diff = a.v[static_cast<std::size_t>(n)] -
                       b.v[static_cast<std::size_t>(n)];
    best = std::max(best, std::pow(L, -kappa * n) * max_abs(fluct(diff)));
  }
  return dist + best;
}

}  // namespace hrg

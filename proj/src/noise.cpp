#include "hrg/noise.hpp"

#include <cmath>
#include <string>

#include "hrg/rng.hpp"

namespace hrg {

void NoiseConfig::validate() const {
  if (Nmax < 1) throw PreconditionError("NoiseConfig: Nmax must be >= 1");
  LatticeSpec check(L, d, Nmax);  // validates L, d
}

const Field& EnhancedNoise::xi_at(int N, int n) const {
  if (N < 0 || N > config.Nmax || n < 0 || n > N)
    throw PreconditionError("EnhancedNoise::xi_at: level out of range");
  // Shared pyramid: the trajectory at cutoff N is the truncation of the
  // trajectory at Nmax.
  return xi[static_cast<std::size_t>(n)];
}

const Field& EnhancedNoise::chaos_at(int N, int n) const {
  if (N < 0 || N > config.Nmax || n < 0 || n > N)
    throw PreconditionError("EnhancedNoise::chaos_at: level out of range");
  return chaos[static_cast<std::size_t>(N)][static_cast<std::size_t>(n)];
}

Field sample_base(const NoiseConfig& config) {
  config.validate();
  Field f(LatticeSpec(config.L, config.d, config.Nmax));
  const std::uint64_t stream = stream_id("base");
  const std::int64_t np = f.size();
  for (std::int64_t i = 0; i < np; ++i)
    f[i] = normal_variate(config.seed, stream, static_cast<std::uint64_t>(i));
  return f;
}

namespace {

double coarsen_gain(int L, int d) {
  // L^(2-alpha) with alpha = 2 - d/2, i.e. L^(d/2); exact for even d.
  return std::pow(static_cast<double>(L), static_cast<double>(d) / 2.0);
}

}  // namespace

std::vector<Field> derive_xi_trajectory(const Field& base, int N) {
  if (N < 0 || N > base.spec.n)
    throw PreconditionError("derive_xi_trajectory: N out of range");
  const double gain = coarsen_gain(base.spec.L, base.spec.d);
  Field top = base;
  for (int k = base.spec.n; k > N; --k) top = gain * coarsen(top);
  std::vector<Field> traj(static_cast<std::size_t>(N) + 1);
  traj[static_cast<std::size_t>(N)] = std::move(top);
  for (int n = N; n >= 1; --n)
    traj[static_cast<std::size_t>(n - 1)] =
        gain * coarsen(traj[static_cast<std::size_t>(n)]);
  return traj;
}

Field wick_pair_product(const Field& xi_n) {
  if (xi_n.spec.n < 1)
    throw PreconditionError("wick_pair_product: level must be >= 1");
  const double c =
      1.0 - std::pow(static_cast<double>(xi_n.spec.L), -xi_n.spec.d);
  Field prod = hadamard(xi_n, fluct(xi_n));
  for (auto& v : prod.values) v -= c;
  return prod;
}

std::vector<Field> chaos_recursive(const std::vector<Field>& xi_trajectory) {
  if (xi_trajectory.empty())
    throw PreconditionError("chaos_recursive: empty trajectory");
  const int N = static_cast<int>(xi_trajectory.size()) - 1;
  const auto& top = xi_trajectory[static_cast<std::size_t>(N)].spec;
  // L^(2-2alpha) = L^(d-2); equal to 1 at d = 2.
  const double gain = std::pow(static_cast<double>(top.L), top.d - 2);
  std::vector<Field> chaos(static_cast<std::size_t>(N) + 1);
  chaos[static_cast<std::size_t>(N)] = Field(top, 0.0);
  for (int n = N; n >= 1; --n) {
    const Field& xi_n = xi_trajectory[static_cast<std::size_t>(n)];
    Field next = coarsen(chaos[static_cast<std::size_t>(n)]) +
                 coarsen(wick_pair_product(xi_n));
    chaos[static_cast<std::size_t>(n - 1)] = gain * next;
  }
  return chaos;
}

double chaos_centering_constant(int L, int d, int k) {
  const double base = 1.0 - std::pow(static_cast<double>(L), -d);
  double s = 0.0;
  for (int j = 1; j <= k; ++j)
    s += std::pow(static_cast<double>(L), (2.0 - d) * (j - 1));
  return base * s;
}

Field chaos_direct(const Field& xi_N, int n) {
  const int N = xi_N.spec.n;
  if (n < 0 || n > N) throw PreconditionError("chaos_direct: n out of range");
  const int depth = N - n;
  if (depth == 0) return Field(xi_N.spec, 0.0);
  const double c = chaos_centering_constant(xi_N.spec.L, xi_N.spec.d, depth);
  Field prod = hadamard(xi_N, apply_fluct_propagator(xi_N, depth));
  for (auto& v : prod.values) v -= c;
  for (int k = 0; k < depth; ++k) prod = coarsen(prod);
  const double scale = std::pow(static_cast<double>(xi_N.spec.L),
                                (xi_N.spec.d - 2.0) * depth);
  return scale * prod;
}

EnhancedNoise build_enhanced_noise(const NoiseConfig& config) {
  return build_enhanced_noise(config, sample_base(config));
}

EnhancedNoise build_enhanced_noise(const NoiseConfig& config, const Field& base) {
  config.validate();
  if (base.spec != LatticeSpec(config.L, config.d, config.Nmax))
    throw PreconditionError("build_enhanced_noise: base lattice mismatch");
  EnhancedNoise out;
  out.config = config;
  out.xi = derive_xi_trajectory(base, config.Nmax);

  // Wick products are shared: W[n] = coarsen(wick(xi[n])) feeds the chaos
  // recursion of every cutoff N >= n.
  std::vector<Field> W(static_cast<std::size_t>(config.Nmax) + 1);
  for (int n = 1; n <= config.Nmax; ++n)
    W[static_cast<std::size_t>(n)] =
        coarsen(wick_pair_product(out.xi[static_cast<std::size_t>(n)]));

  const double gain = std::pow(static_cast<double>(config.L), config.d - 2);
  out.chaos.resize(static_cast<std::size_t>(config.Nmax) + 1);
  out.chaos[0] = {Field(LatticeSpec(config.L, config.d, 0), 0.0)};
  for (int N = 1; N <= config.Nmax; ++N) {
    auto& tr = out.chaos[static_cast<std::size_t>(N)];
    tr.resize(static_cast<std::size_t>(N) + 1);
    tr[static_cast<std::size_t>(N)] =
        Field(LatticeSpec(config.L, config.d, N), 0.0);
    for (int n = N; n >= 1; --n) {
      Field next = coarsen(tr[static_cast<std::size_t>(n)]) +
                   W[static_cast<std::size_t>(n)];
      tr[static_cast<std::size_t>(n - 1)] = gain * next;
    }
  }
  return out;
}

}  // namespace hrg

#include "hrg/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "hrg/rng.hpp"

namespace hrg {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json physics_json(const RunConfig& cfg) {
  json j;
  j["L"] = cfg.L;
  j["d"] = cfg.d;
  j["Nmax"] = cfg.Nmax;
  j["g"] = cfg.g;
  j["r"] = cfg.r;
  j["kappa_s"] = cfg.kappa_s;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["dense_cap"] = cfg.dense_cap;
  j["condition_threshold"] = cfg.condition_threshold;
  return j;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const RunConfig& cfg,
            const std::string& header)
      : out_(path) {
    if (!out_) throw PreconditionError("cannot open " + path.string());
    out_ << "# engine_version=" << kEngineVersion << "\n";
    out_ << "# seed=" << cfg.seed << "\n";
    out_ << "# config_hash=" << config_hash(cfg) << "\n";
    out_ << header << "\n";
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ",";
      out_ << cells[i];
    }
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

void write_json_file(const std::filesystem::path& path, const RunConfig& cfg,
                     json body) {
  body["engine_version"] = kEngineVersion;
  body["seed"] = cfg.seed;
  body["config_hash"] = config_hash(cfg);
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot open " + path.string());
  out << body.dump(2) << "\n";
}

Field random_field(const LatticeSpec& spec, std::uint64_t seed,
                   std::uint64_t salt) {
  Field f(spec);
  const std::uint64_t stream = stream_id("selftest") ^ salt;
  for (std::int64_t i = 0; i < f.size(); ++i)
    f[i] = normal_variate(seed, stream, static_cast<std::uint64_t>(i));
  return f;
}

struct Check {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool pass() const { return worst <= tolerance; }
};

std::vector<Check> run_selftest(const RunConfig& cfg) {
  std::vector<Check> checks;
  const int L = cfg.L, d = cfg.d;
  const double alpha = 2.0 - static_cast<double>(d) / 2.0;

  // Operator identity suite.
  Check dec{"decomposition_reconstruction", 0.0, kTolIdentity};
  Check orth{"projector_orthogonality", 0.0, 1e-13};
  Check cri{"coarsen_refine_identity", 0.0, 1e-14};
  Check comp{"coarsening_composition", 0.0, kTolIdentity};
  Check pinv{"fluct_inverse_identity", 0.0, kTolIdentity};
  Check invlap{"inverse_laplacian_identity", 0.0, kTolInverse};
  Check densecmp{"recursive_vs_dense_laplacian", 0.0, kTolIdentity};
  for (int n = 1; n <= 3; ++n) {
    const LatticeSpec spec(L, d, n);
    for (int t = 0; t < 10; ++t) {
      const std::uint64_t salt =
          static_cast<std::uint64_t>(n) * 100 + static_cast<std::uint64_t>(t);
      const Field f = random_field(spec, cfg.seed, salt);

      // f = broadcast(mean) + sum of broadcast level-k fluctuations.
      Field recon(spec, mean_total(f));
      {
        Field g = f;
        for (int k = 1; k <= n; ++k) {
          Field part = fluct(g);
          while (part.spec.n < n) part = refine(part);
          recon = recon + part;
          g = coarsen(g);
        }
      }
      dec.worst = std::max(dec.worst, max_abs(f - recon));

      // Level-k extractors are idempotent and mutually annihilating.
      auto extract = [&](const Field& h, int k) {
        Field g = h;
        for (int b = 0; b < k - 1; ++b) g = coarsen(g);
        g = fluct(g);
        for (int b = 0; b < k - 1; ++b) g = refine(g);
        return g;
      };
      for (int k = 1; k <= n; ++k) {
        const Field ek = extract(f, k);
        orth.worst = std::max(orth.worst, max_abs(extract(ek, k) - ek));
        for (int j = 1; j <= n; ++j)
          if (j != k) orth.worst = std::max(orth.worst, max_abs(extract(ek, j)));
      }

      if (n >= 1) {
        const Field w = coarsen(f);
        cri.worst = std::max(cri.worst, max_abs(coarsen(refine(w)) - w));
      }
      if (n >= 2) {
        // Two coarsening steps equal one direct two-level block average.
        Field direct(LatticeSpec(L, d, n - 2), 0.0);
        {
          Field g = coarsen(coarsen(f));
          direct = g;
        }
        const auto table = block_index_table(spec);
        // Brute force: average L^(2d) fine points per doubly-coarse block.
        Field brute(LatticeSpec(L, d, n - 2), 0.0);
        const auto t1 = block_index_table(spec);
        const auto t2 = block_index_table(spec.coarser());
        std::size_t m = 1;
        for (int k = 0; k < d; ++k) m *= static_cast<std::size_t>(L);
        for (std::int64_t c2 = 0; c2 < brute.size(); ++c2) {
          double s = 0.0;
          for (std::size_t j = 0; j < m; ++j) {
            const std::int64_t mid = t2[static_cast<std::size_t>(c2) * m + j];
            for (std::size_t k = 0; k < m; ++k)
              s += f[t1[static_cast<std::size_t>(mid) * m + k]];
          }
          brute[c2] = s / static_cast<double>(m * m);
        }
        comp.worst = std::max(comp.worst, max_abs(direct - brute));
        (void)table;
      }

      // P1 image is a fixed point of the inverse Laplacian.
      const Field p1f = fluct(f);
      pinv.worst = std::max(pinv.worst,
                            max_abs(apply_inverse_laplacian(p1f) - p1f));

      // inverse o (-Delta_H) = id on mean-zero fields.
      Field mz = f;
      {
        const double mean = mean_total(f);
        for (auto& v : mz.values) v -= mean;
      }
      invlap.worst = std::max(
          invlap.worst,
          max_abs(apply_inverse_laplacian(apply_neg_laplacian(mz)) - mz));

      if (spec.point_count() <= cfg.dense_cap) {
        const auto dl = assemble_dense_operator(OperatorKind::kNegLaplacian,
                                                spec, 0, cfg.dense_cap);
        densecmp.worst = std::max(
            densecmp.worst, max_abs(dl.apply(f) - apply_neg_laplacian(f)));
      }
    }
  }
  checks.insert(checks.end(), {dec, orth, cri, comp, pinv, invlap, densecmp});

  // Chaos equivalence on a few coupled samples.
  Check chaos{"chaos_recursive_vs_direct", 0.0, 1e-9};
  for (int t = 0; t < 5; ++t) {
    NoiseConfig nc;
    nc.seed = sample_seed(cfg.seed, static_cast<std::uint64_t>(t));
    nc.Nmax = 3;
    nc.L = L;
    nc.d = d;
    const EnhancedNoise noise = build_enhanced_noise(nc);
    for (int N = 1; N <= nc.Nmax; ++N)
      for (int n = 0; n <= N; ++n)
        chaos.worst = std::max(
            chaos.worst,
            max_abs(noise.chaos_at(N, n) - chaos_direct(noise.xi_at(N, N), n)));
  }
  checks.push_back(chaos);

  // Solver against the dense oracle plus the effective-force identity.
  Check sdense{"rg_vs_dense_solve", 0.0, 1e-9};
  Check sres{"solver_residual", 0.0, 1e-10};
  Check sforce{"effective_force_crosscheck", 0.0, 1e-8};
  const Couplings cpl(0.1, 1.0);
  for (int t = 0; t < 5; ++t) {
    NoiseConfig nc;
    nc.seed = sample_seed(cfg.seed ^ 0x5eedULL, static_cast<std::uint64_t>(t));
    nc.Nmax = 2;
    nc.L = L;
    nc.d = d;
    const EnhancedNoise noise = build_enhanced_noise(nc);
    BareProblem p;
    p.N = 2;
    p.couplings = cpl;
    p.noise = &noise;
    const RgSolveResult rg = rg_solve(p);
    const DenseSolveResult dn = dense_solve(p, cfg.dense_cap);
    const double scale =
        std::max(1.0, max_abs(rg.trajectory.v[static_cast<std::size_t>(p.N)]));
    sdense.worst = std::max(
        sdense.worst,
        max_abs(rg.trajectory.v[static_cast<std::size_t>(p.N)] - dn.v) / scale);
    sres.worst = std::max(
        sres.worst,
        residual(p, rg.trajectory.v[static_cast<std::size_t>(p.N)]));
    const FlowTrajectory flow = run_flow(noise, cpl, p.N);
    const auto cc = crosscheck_effective_force(p, rg, flow);
    for (double dv : cc.deviation) sforce.worst = std::max(sforce.worst, dv);
  }
  checks.insert(checks.end(), {sdense, sres, sforce});
  (void)alpha;
  return checks;
}

int cmd_selftest(const RunConfig& cfg, const std::filesystem::path& dir) {
  const auto checks = run_selftest(cfg);
  json body;
  bool all = true;
  for (const auto& c : checks) {
    body["checks"][c.name] = {{"worst", c.worst},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass()}};
    all = all && c.pass();
  }
  body["pass"] = all;
  write_json_file(dir / "selftest.json", cfg, body);
  std::cout << "selftest: " << (all ? "pass" : "FAIL") << " ("
            << checks.size() << " checks)\n";
  return all ? 0 : 1;
}

int cmd_sample(const RunConfig& cfg, const std::filesystem::path& dir) {
  NoiseConfig nc{cfg.seed, cfg.Nmax, cfg.L, cfg.d};
  const EnhancedNoise noise = build_enhanced_noise(nc);
  CsvWriter csv(dir / "sample.csv", cfg, "level,point_index,xi,chaos");
  for (int n = 0; n <= cfg.Nmax; ++n) {
    const Field& xi = noise.xi_at(cfg.Nmax, n);
    const Field& ch = noise.chaos_at(cfg.Nmax, n);
    for (std::int64_t i = 0; i < xi.size(); ++i)
      csv.row({std::to_string(n), std::to_string(i), fmt17(xi[i]),
               fmt17(ch[i])});
  }
  std::cout << "sample: wrote " << (dir / "sample.csv").string() << "\n";
  return 0;
}

int cmd_flow(const RunConfig& cfg, const std::filesystem::path& dir) {
  NoiseConfig nc{cfg.seed, cfg.Nmax, cfg.L, cfg.d};
  const EnhancedNoise noise = build_enhanced_noise(nc);
  const Couplings cpl(cfg.g, cfg.r);
  RemainderSolveOptions opts;
  opts.condition_threshold = cfg.condition_threshold;
  const FlowTrajectory flow = run_flow(noise, cpl, cfg.Nmax, opts);
  {
    CsvWriter csv(dir / "flow_coefficients.csv", cfg,
                  "n,lambda,mu,gamma,bare_mass_equiv");
    for (int n = 0; n <= cfg.Nmax; ++n) {
      const auto& c = flow.coeffs[static_cast<std::size_t>(n)];
      csv.row({std::to_string(n), fmt17(c.lambda), fmt17(c.mu), fmt17(c.gamma),
               fmt17(bare_mass_equiv(cpl, n, cfg.L, cfg.d))});
    }
  }
  {
    CsvWriter csv(dir / "flow_fields.csv", cfg,
                  "n,max_abs_psi,mean_psi,max_abs_R,max_abs_block_mean_R");
    for (int n = 0; n <= cfg.Nmax; ++n) {
      const Field& psi = flow.psi[static_cast<std::size_t>(n)];
      double maxR = 0.0, maxQR = 0.0;
      if (n >= 1 && !flow.remainder[static_cast<std::size_t>(n)].values.empty()) {
        const Field& R = flow.remainder[static_cast<std::size_t>(n)];
        maxR = max_abs(R);
        maxQR = max_abs(coarsen(R));
      }
      csv.row({std::to_string(n), fmt17(max_abs(psi)), fmt17(mean_total(psi)),
               fmt17(maxR), fmt17(maxQR)});
    }
  }
  std::cout << "flow: wrote coefficient and field tables\n";
  return 0;
}

int cmd_solve(const RunConfig& cfg, const std::filesystem::path& dir) {
  NoiseConfig nc{cfg.seed, cfg.Nmax, cfg.L, cfg.d};
  const EnhancedNoise noise = build_enhanced_noise(nc);
  BareProblem p;
  p.N = cfg.Nmax;
  p.couplings = Couplings(cfg.g, cfg.r);
  p.noise = &noise;
  RemainderSolveOptions opts;
  opts.condition_threshold = cfg.condition_threshold;
  const RgSolveResult rg = rg_solve(p, opts);
  const double a = 2.0 - static_cast<double>(cfg.d) / 2.0;
  {
    CsvWriter csv(dir / "solve_trajectory.csv", cfg, "level,point_index,value");
    for (int n = 0; n <= cfg.Nmax; ++n) {
      const Field& v = rg.trajectory.v[static_cast<std::size_t>(n)];
      for (std::int64_t i = 0; i < v.size(); ++i)
        csv.row({std::to_string(n), std::to_string(i), fmt17(v[i])});
    }
  }
  {
    CsvWriter csv(dir / "solve_u.csv", cfg, "point_index,u");
    for (std::int64_t i = 0; i < rg.trajectory.u_values.size(); ++i)
      csv.row({std::to_string(i), fmt17(rg.trajectory.u_values[i])});
  }
  {
    // residual column: equation residual at level N, coarse-graining
    // consistency deviation at the lower levels.
    CsvWriter csv(dir / "solve_summary.csv", cfg,
                  "level,max_abs_v,residual,condition_max");
    for (int n = 0; n <= cfg.Nmax; ++n) {
      const Field& v = rg.trajectory.v[static_cast<std::size_t>(n)];
      double res;
      if (n == cfg.Nmax) {
        res = residual(p, v);
      } else {
        const Field pred =
            std::pow(static_cast<double>(cfg.L), -a) *
            coarsen(rg.trajectory.v[static_cast<std::size_t>(n) + 1]);
        res = max_abs(v - pred);
      }
      csv.row({std::to_string(n), fmt17(max_abs(v)), fmt17(res),
               fmt17(rg.max_condition)});
    }
  }
  std::cout << "solve: u mean " << fmt17(mean_total(rg.trajectory.u_values))
            << ", residual "
            << fmt17(residual(p, rg.trajectory.v[static_cast<std::size_t>(cfg.Nmax)]))
            << "\n";
  return 0;
}

void write_estimates(CsvWriter& csv, const std::vector<McEstimate>& ests,
                     int retry) {
  for (const auto& e : ests)
    csv.row({e.name, fmt17(e.estimate), fmt17(e.std_error), fmt17(e.target),
             fmt17(e.z), std::to_string(e.n_samples), std::to_string(retry)});
}

int cmd_verify_moments(const RunConfig& cfg, const std::filesystem::path& dir) {
  auto run_suite = [&](std::uint64_t seed) {
    std::vector<McEstimate> ests;
    for (auto& e : mc_pair_moment(cfg.L, cfg.d, 2, cfg.samples, seed, cfg.threads))
      ests.push_back(e);
    for (auto& e :
         mc_fluct_covariance(cfg.L, cfg.d, 2, cfg.samples, seed, cfg.threads))
      ests.push_back(e);
    ests.push_back(mc_chaos_increment_variance(cfg.L, cfg.d, 1, 2, cfg.samples,
                                               seed, cfg.threads));
    ests.push_back(mc_chaos_increment_variance(cfg.L, cfg.d, 1, 3, cfg.samples,
                                               seed, cfg.threads));
    return ests;
  };
  CsvWriter csv(dir / "moments.csv", cfg,
                "name,estimate,std_error,target,z,n_samples,retry");
  auto ests = run_suite(cfg.seed);
  write_estimates(csv, ests, 0);
  bool need_retry = false;
  for (const auto& e : ests) need_retry = need_retry || std::fabs(e.z) > 3.0;
  bool pass = !need_retry;
  if (need_retry) {
    // One documented retry at a fresh seed; the retry passes at |z| <= 4.
    auto retry = run_suite(splitmix64(cfg.seed ^ 0x9E3779B97F4A7C15ULL));
    write_estimates(csv, retry, 1);
    pass = true;
    for (const auto& e : retry) pass = pass && std::fabs(e.z) <= 4.0;
  }
  std::cout << "verify-moments: " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_tail(const RunConfig& cfg, const std::filesystem::path& dir) {
  const std::vector<double> grid{1.0, 0.5, 0.33, 0.25, 0.2};
  const TailReport rep = mc_tail_probability(cfg.L, cfg.d, cfg.Nmax, grid,
                                             cfg.samples, cfg.seed, cfg.kappa_s,
                                             cfg.threads);
  CsvWriter csv(dir / "tail.csv", cfg, "g,violations,p_hat,std_error");
  for (const auto& row : rep.rows)
    csv.row({fmt17(row.g), std::to_string(row.violations), fmt17(row.p_hat),
             fmt17(row.std_error)});
  json body;
  body["slope"] = rep.fit.slope;
  body["intercept"] = rep.fit.intercept;
  body["r2"] = rep.fit.r2;
  body["fit_points"] = rep.fit.points;
  body["samples"] = rep.samples;
  write_json_file(dir / "tail_fit.json", cfg, body);
  std::cout << "tail: slope " << fmt17(rep.fit.slope) << ", r2 "
            << fmt17(rep.fit.r2) << "\n";
  return 0;
}

int cmd_moments_growth(const RunConfig& cfg, const std::filesystem::path& dir) {
  const std::vector<double> grid{2, 4, 6, 8, 10};
  const MomentGrowthReport rep = mc_norm_moment_growth(
      cfg.L, cfg.d, cfg.Nmax, grid, cfg.samples, cfg.seed, cfg.kappa_s,
      cfg.threads);
  CsvWriter csv(dir / "moments_growth.csv", cfg, "p,moment");
  for (const auto& row : rep.rows) csv.row({fmt17(row.p), fmt17(row.moment)});
  json body;
  body["loglog_slope"] = rep.loglog.slope;
  body["r2"] = rep.loglog.r2;
  write_json_file(dir / "moments_growth_fit.json", cfg, body);
  std::cout << "moments-growth: log-log slope " << fmt17(rep.loglog.slope)
            << "\n";
  return 0;
}

int cmd_converge(const RunConfig& cfg, const std::filesystem::path& dir) {
  const ConvergenceStudy study =
      convergence_study(cfg.L, cfg.d, cfg.Nmax, cfg.g, cfg.r, cfg.samples,
                        cfg.seed, cfg.kappa_s, cfg.threads);
  CsvWriter csv(dir / "converge.csv", cfg, "quantity,N,mean_distance");
  for (const auto& rep : study.reports)
    for (std::size_t k = 0; k < rep.distances.size(); ++k)
      csv.row({rep.quantity, std::to_string(rep.cutoffs[k]),
               fmt17(rep.distances[k])});
  json body;
  for (const auto& rep : study.reports)
    body["rates"][rep.quantity] = {{"rate", rep.fit.slope},
                                   {"r2", rep.fit.r2}};
  body["used_samples"] = study.used_samples;
  body["skipped_samples"] = study.skipped_samples;
  body["max_v_consistency"] = study.max_v_consistency;
  write_json_file(dir / "converge_fit.json", cfg, body);
  std::cout << "converge: used " << study.used_samples << ", skipped "
            << study.skipped_samples << "\n";
  return 0;
}

int cmd_ablate(const RunConfig& cfg, const std::filesystem::path& dir) {
  const AblationReport rep =
      ablate_counterterm(cfg.L, cfg.d, cfg.Nmax, cfg.g, cfg.r, cfg.samples,
                         cfg.seed, cfg.threads);
  CsvWriter csv(dir / "ablate.csv", cfg,
                "N,mean_renormalized,se_renormalized,mean_ablated,se_ablated");
  for (const auto& row : rep.rows)
    csv.row({std::to_string(row.N), fmt17(row.mean_renormalized),
             fmt17(row.se_renormalized), fmt17(row.mean_ablated),
             fmt17(row.se_ablated)});
  json body;
  body["target_slope"] = rep.target_slope;
  body["ablated_slope"] = rep.ablated.slope;
  body["ablated_slope_se"] = rep.ablated.slope_se;
  body["renormalized_slope"] = rep.renormalized.slope;
  body["renormalized_trend_p"] = rep.renormalized_trend_p;
  write_json_file(dir / "ablate_fit.json", cfg, body);
  std::cout << "ablate: slope " << fmt17(rep.ablated.slope) << " vs target "
            << fmt17(rep.target_slope) << "\n";
  return 0;
}

}  // namespace

void RunConfig::validate() const {
  std::string errs;
  auto bad = [&](const std::string& m) {
    if (!errs.empty()) errs += "; ";
    errs += m;
  };
  if (L < 3) bad("L must be >= 3");
  if (L % 2 == 0) bad("L must be odd");
  if (d < 1) bad("d must be positive");
  if (Nmax < 1) bad("Nmax must be >= 1");
  if (!(g >= 0.0 && g <= 1.0)) bad("g must lie in [0, 1]");
  if (!(r >= 1.0)) bad("r must be >= 1");
  const double alpha = 2.0 - static_cast<double>(d) / 2.0;
  if (!(kappa_s > 0.0 && kappa_s < alpha)) bad("kappa_s must lie in (0, alpha)");
  if (samples < 1) bad("samples must be >= 1");
  if (dense_cap < 1) bad("dense_cap must be >= 1");
  if (!(condition_threshold > 1.0)) bad("condition_threshold must exceed 1");
  if (threads < 1) bad("threads must be >= 1");
  if (!errs.empty()) throw PreconditionError("invalid config: " + errs);
}

std::string config_to_json(const RunConfig& cfg) {
  json j = physics_json(cfg);
  j["output_dir"] = cfg.output_dir;
  j["threads"] = cfg.threads;
  return j.dump(2);
}

std::string config_hash(const RunConfig& cfg) {
  const std::string s = physics_json(cfg).dump();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(stream_id(s)));
  return buf;
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PreconditionError("malformed config file: " + std::string(e.what()));
  }
  cfg.L = j.value("L", cfg.L);
  cfg.d = j.value("d", cfg.d);
  cfg.Nmax = j.value("Nmax", cfg.Nmax);
  cfg.g = j.value("g", cfg.g);
  cfg.r = j.value("r", cfg.r);
  cfg.kappa_s = j.value("kappa_s", cfg.kappa_s);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.samples = j.value("samples", cfg.samples);
  cfg.output_dir = j.value("output_dir", cfg.output_dir);
  cfg.dense_cap = j.value("dense_cap", cfg.dense_cap);
  cfg.condition_threshold = j.value("condition_threshold", cfg.condition_threshold);
  cfg.threads = j.value("threads", cfg.threads);
  return cfg;
}

int execute(const std::string& command, const RunConfig& cfg) {
  try {
    cfg.validate();
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "config.json");
    json j = json::parse(config_to_json(cfg));
    j["engine_version"] = kEngineVersion;
    j["config_hash"] = config_hash(cfg);
    out << j.dump(2) << "\n";
  }
  try {
    if (command == "selftest") return cmd_selftest(cfg, dir);
    if (command == "sample") return cmd_sample(cfg, dir);
    if (command == "flow") return cmd_flow(cfg, dir);
    if (command == "solve") return cmd_solve(cfg, dir);
    if (command == "verify-moments") return cmd_verify_moments(cfg, dir);
    if (command == "tail") return cmd_tail(cfg, dir);
    if (command == "moments-growth") return cmd_moments_growth(cfg, dir);
    if (command == "converge") return cmd_converge(cfg, dir);
    if (command == "ablate") return cmd_ablate(cfg, dir);
  } catch (const std::exception& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return 1;
  }
  std::cerr << "unknown command: " << command << "\n";
  return 2;
}

}  // namespace hrg

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hrg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hierarchical RG engine for the 2-d lattice Anderson problem"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file");

  // Flag overrides; applied after the config file.
  std::optional<int> L, d, Nmax, threads;
  std::optional<double> g, r, kappa_s, condition_threshold;
  std::optional<long> samples;
  std::optional<std::int64_t> dense_cap;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  app.add_option("--L", L, "coarse-graining ratio (odd, >= 3)");
  app.add_option("--d", d, "dimension (default 2)");
  app.add_option("--Nmax", Nmax, "maximum cutoff level");
  app.add_option("--g", g, "renormalised coupling in [0, 1]");
  app.add_option("--r", r, "renormalised mass (>= 1)");
  app.add_option("--kappa-s", kappa_s, "stochastic norm exponent");
  app.add_option("--seed", seed, "base RNG seed");
  app.add_option("--samples", samples, "Monte Carlo sample count");
  app.add_option("--out", out, "output directory");
  app.add_option("--dense-cap", dense_cap, "dense oracle size cap");
  app.add_option("--condition-threshold", condition_threshold,
                 "block singularity threshold");
  app.add_option("--threads", threads, "sample fan-out threads");

  const char* commands[] = {"selftest", "sample",         "flow",
                            "solve",    "verify-moments", "tail",
                            "moments-growth", "converge", "ablate"};
  for (const char* c : commands) app.add_subcommand(c, "")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }

  hrg::RunConfig cfg;
  try {
    cfg = hrg::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (L) cfg.L = *L;
  if (d) cfg.d = *d;
  if (Nmax) cfg.Nmax = *Nmax;
  if (g) cfg.g = *g;
  if (r) cfg.r = *r;
  if (kappa_s) cfg.kappa_s = *kappa_s;
  if (seed) cfg.seed = *seed;
  if (samples) cfg.samples = *samples;
  if (out) cfg.output_dir = *out;
  if (dense_cap) cfg.dense_cap = *dense_cap;
  if (condition_threshold) cfg.condition_threshold = *condition_threshold;
  if (threads) cfg.threads = *threads;

  return hrg::execute(app.get_subcommands().front()->get_name(), cfg);
}

#pragma once

#include <string>

#include "hrg/verify.hpp"

namespace hrg {

struct RunConfig {
  int L = 3;
  int d = 2;
  int Nmax = 4;
  double g = 0.5;
  double r = 1.0;
  double kappa_s = 0.05;
  std::uint64_t seed = 20260823;
  long samples = 1000;
  std::string output_dir = "out";
  std::int64_t dense_cap = kDefaultDenseCap;
  double condition_threshold = kDefaultConditionThreshold;
  int threads = 1;

  // Throws PreconditionError listing every violated constraint.
  void validate() const;
};

// Canonical JSON serialization (sorted keys) and the hash embedded in every
// output file. The hash covers the physics-relevant fields only: output_dir
// and threads are excluded so runs that differ only in plumbing produce
// byte-identical data files.
std::string config_to_json(const RunConfig& cfg);
std::string config_hash(const RunConfig& cfg);

// Reads a JSON config file (all keys optional) and applies it over defaults.
// Empty path -> defaults. Callers apply flag overrides afterwards.
RunConfig load_config(const std::string& path);

// Exit codes: 0 success, 1 failed assertion, 2 usage/validation error.
int execute(const std::string& command, const RunConfig& cfg);

}  // namespace hrg

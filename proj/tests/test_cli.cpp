#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hrg/cli.hpp"

using namespace hrg;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("hrg_test_" + tag);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("config validation collects every violation") {
  RunConfig cfg;
  cfg.validate();  // defaults are valid

  RunConfig bad;
  bad.L = 4;
  bad.g = 1.5;
  bad.samples = 0;
  try {
    bad.validate();
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("odd") != std::string::npos);
    CHECK(msg.find("g must") != std::string::npos);
    CHECK(msg.find("samples") != std::string::npos);
  }

  RunConfig bad2;
  bad2.kappa_s = 1.0;  // == alpha at d = 2
  CHECK_THROWS_AS(bad2.validate(), PreconditionError);
}

TEST_CASE("config hash covers physics fields only") {
  RunConfig a;
  RunConfig b = a;
  b.output_dir = "elsewhere";
  b.threads = 7;
  CHECK(config_hash(a) == config_hash(b));
  b.g = 0.25;
  CHECK(config_hash(a) != config_hash(b));
  RunConfig c = a;
  c.seed = a.seed + 1;
  CHECK(config_hash(a) != config_hash(c));
}

TEST_CASE("config file loading and overrides") {
  const RunConfig defaults = load_config("");
  CHECK(defaults.L == 3);
  CHECK(defaults.samples == 1000);

  const fs::path p = fs::temp_directory_path() / "hrg_test_config.json";
  {
    std::ofstream out(p);
    out << "{\"g\": 0.25, \"Nmax\": 2, \"output_dir\": \"cfgout\"}\n";
  }
  const RunConfig loaded = load_config(p.string());
  CHECK(loaded.g == 0.25);
  CHECK(loaded.Nmax == 2);
  CHECK(loaded.output_dir == "cfgout");
  CHECK(loaded.L == 3);  // untouched keys keep defaults

  CHECK_THROWS_AS(load_config("/nonexistent/hrg.json"), PreconditionError);
  {
    std::ofstream out(p);
    out << "not json";
  }
  CHECK_THROWS_AS(load_config(p.string()), PreconditionError);
  fs::remove(p);
}

TEST_CASE("selftest command passes and unknown commands are usage errors") {
  RunConfig cfg;
  cfg.output_dir = temp_dir("selftest").string();
  CHECK(execute("selftest", cfg) == 0);
  CHECK(fs::exists(fs::path(cfg.output_dir) / "selftest.json"));
  CHECK(execute("no-such-command", cfg) == 2);

  RunConfig bad;
  bad.L = 4;
  bad.output_dir = temp_dir("badcfg").string();
  CHECK(execute("selftest", bad) == 2);
  fs::remove_all(cfg.output_dir);
}

TEST_CASE("reruns and thread counts produce byte-identical data files") {
  RunConfig cfg;
  cfg.Nmax = 3;
  cfg.samples = 25;
  cfg.g = 0.5;

  auto run = [&](const std::string& tag, int threads) {
    RunConfig c = cfg;
    c.threads = threads;
    c.output_dir = temp_dir(tag).string();
    REQUIRE(execute("ablate", c) == 0);
    return fs::path(c.output_dir);
  };
  const fs::path a = run("det_a", 1);
  const fs::path b = run("det_b", 1);
  const fs::path c = run("det_c", 3);
  for (const char* name : {"ablate.csv", "ablate_fit.json"}) {
    const std::string ref = slurp(a / name);
    CHECK(slurp(b / name) == ref);
    CHECK(slurp(c / name) == ref);
  }
  for (const auto& p : {a, b, c}) fs::remove_all(p);
}

TEST_CASE("flow with g = 0 reports an all-zero stochastic sector") {
  RunConfig cfg;
  cfg.g = 0.0;
  cfg.Nmax = 3;
  cfg.output_dir = temp_dir("flow0").string();
  REQUIRE(execute("flow", cfg) == 0);
  const std::string csv = slurp(fs::path(cfg.output_dir) / "flow_fields.csv");
  std::istringstream in(csv);
  std::string line;
  bool saw_data = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
    saw_data = true;
    // Columns after the level index hold the Psi/R statistics.
    const auto pos = line.find(',');
    REQUIRE(pos != std::string::npos);
    std::istringstream cells(line.substr(pos + 1));
    std::string cell;
    while (std::getline(cells, cell, ',')) CHECK(std::stod(cell) == 0.0);
  }
  CHECK(saw_data);
  fs::remove_all(cfg.output_dir);
}

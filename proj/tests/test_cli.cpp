#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "airylab/io.hpp"
#include "airylab/norms.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace airylab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("airylab_test_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

json load(const fs::path& p) {
  std::ifstream f(p);
  return json::parse(f);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"constants", "--bogus", "1"}).code == cli::kExitUsage);
  CHECK(run_cli({"constants", "--config", "/nonexistent/cfg.json"}).code == cli::kExitUsage);
  const Outcome help = run_cli({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("constants") != std::string::npos);
}

TEST_CASE("constants at p = 6") {
  const fs::path dir = scratch("constants");
  const Outcome o = run_cli({"constants", "--p", "6", "--out", dir.string()});
  REQUIRE(o.code == cli::kExitOk);
  const json j = load(dir / "constants.json");
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == "constants");
  CHECK(j.at("version").get<std::string>().rfind("0.1.0", 0) == 0);
  CHECK(j.at("config").at("p") == 6.0);
  CHECK(j.at("seeds").at("seed") == 1);
  CHECK(j.contains("tolerances"));
  const json& r = j.at("result");
  CHECK(std::abs(r.at("a_p_gamma").get<double>() - 2.5) <= 1e-10);
  CHECK(std::abs(r.at("a_p_quad").get<double>() - 2.5) <= 1e-10);
  CHECK(r.at("agreement") == true);
}

TEST_CASE("domain errors exit with 2") {
  const fs::path dir = scratch("domain");
  CHECK(run_cli({"constants", "--p", "3", "--out", dir.string()}).code == cli::kExitDomain);
  CHECK(run_cli({"quotient", "--profile", (dir / "missing.csv").string(), "--out", dir.string()}).code ==
        cli::kExitDomain);
}

TEST_CASE("config file, top-level values and flag precedence") {
  const fs::path dir = scratch("precedence");
  write_file(dir / "cfg.json", R"({"seed": 11, "constants": {"p": 8}})");
  REQUIRE(run_cli({"constants", "--config", (dir / "cfg.json").string(), "--out", dir.string()}).code == 0);
  json j = load(dir / "constants.json");
  CHECK(std::abs(j["result"]["a_p_gamma"].get<double>() - 2.25) <= 1e-10);
  CHECK(j["seeds"]["seed"] == 11);

  REQUIRE(run_cli({"constants", "--config", (dir / "cfg.json").string(), "--p", "6", "--seed", "5", "--out",
                   dir.string()})
              .code == 0);
  j = load(dir / "constants.json");
  CHECK(std::abs(j["result"]["a_p_gamma"].get<double>() - 2.5) <= 1e-10);
  CHECK(j["seeds"]["seed"] == 5);

  write_file(dir / "top.json", R"({"p": 8})");
  REQUIRE(run_cli({"constants", "--config", (dir / "top.json").string(), "--out", dir.string()}).code == 0);
  CHECK(load(dir / "constants.json")["config"]["p"] == 8.0);
}

TEST_CASE("quotient of a profile file") {
  const fs::path dir = scratch("quotient");
  const FreqProfile u = FreqProfile::sample(FreqGrid(-4.0, 4.0, 129), [](double xi) {
    return cplx{std::exp(-0.5 * xi * xi), 0.0};
  });
  {
    std::ofstream f(dir / "gaussian.csv");
    write_profile_csv(f, u);
  }
  const Outcome o = run_cli({"quotient", "--objective", "schrodinger", "--p", "6", "--profile",
                             (dir / "gaussian.csv").string(), "--t-half", "2", "--nt", "65", "--x-half", "15",
                             "--nx", "97", "--out", dir.string()});
  REQUIRE(o.code == 0);
  const json j = load(dir / "quotient.json");
  const double expect =
      schrodinger_quotient(u, critical_exponents(6.0), SpaceTimeGrid::centered(2.0, 65, 15.0, 97));
  CHECK(j["result"]["quotient"].get<double>() == doctest::Approx(expect).epsilon(1e-14));
  CHECK(j["result"]["objective"] == "schrodinger");
  CHECK(j["config"]["nt"] == 65);
}

TEST_CASE("maximize outputs are byte-identical across runs") {
  const fs::path a = scratch("det_a");
  const fs::path b = scratch("det_b");
  const std::string cfg =
      R"({"seed": 7, "maximize": {"max_iters": 5, "n": 49, "xi_half": 3.0, "airy_t_half": 1.0, "airy_nt": 33,)"
      R"( "schrodinger_t_half": 1.0, "schrodinger_nt": 33, "x_half": 10.0, "nx": 41}})";
  write_file(a / "cfg.json", cfg);
  for (const fs::path& d : {a, b}) {
    REQUIRE(run_cli({"maximize", "--config", (a / "cfg.json").string(), "--out", d.string()}).code == 0);
  }
  CHECK(slurp(a / "maximize.json") == slurp(b / "maximize.json"));
  CHECK(slurp(a / "maximize_history.csv") == slurp(b / "maximize_history.csv"));
  const json j = load(a / "maximize.json");
  CHECK(j["seeds"]["seed"] == 7);
  CHECK(j["result"]["verdict"] == "inconclusive");
  CHECK(slurp(a / "maximize_history.csv").rfind("run,objective,init,seed,iteration,quotient\n", 0) == 0);
}

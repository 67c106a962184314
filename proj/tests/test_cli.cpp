#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "randpoly/runconfig.hpp"

using namespace randpoly;
namespace fs = std::filesystem;

namespace {

const std::string kCli = RANDPOLY_CLI_PATH;

fs::path scratch() {
  fs::path dir = fs::path("cli_scratch");
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args, const fs::path& log) {
  std::string cmd = kCli + " " + args + " >" + log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

}  // namespace

TEST_CASE("run config serializes and parses back unchanged", "[cli]") {
  RunConfig c;
  c.measure = "drop";
  c.p = 0.125;
  c.ratio = 3.5;
  c.radius = 0.25;
  c.cap = 17;
  c.quantity = "f0";
  c.nmin = 3;
  c.nmax = 123456;
  c.points = 7;
  c.trials = 999;
  c.seed = 18446744073709551615ull;
  c.out = "weird name.csv";
  c.plot = true;
  CHECK(parse_config(serialize(c)) == c);
  CHECK(parse_config(serialize(RunConfig{})) == RunConfig{});

  CHECK_THROWS_AS(parse_config("bogus = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("trials = soon\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("no equals sign here\n"), std::invalid_argument);
  RunConfig commented = parse_config("# a comment\n\ntrials = 5 # inline\n");
  CHECK(commented.trials == 5);
}

TEST_CASE("measure factory and helpers", "[cli]") {
  CHECK(make_measure("circle", 0.1, 2.0, 1.0, 40).rotationally_symmetric());
  CHECK(make_measure("drop", 0.1, 2.0, 1.0, 40).rotationally_symmetric());
  CHECK_FALSE(
      make_measure("triangle-boundary", 0.1, 2.0, 1.0, 40).rotationally_symmetric());
  CHECK_THROWS_AS(make_measure("nope", 0.1, 2.0, 1.0, 40), std::invalid_argument);

  CHECK(quantity_from_name("f0") == Quantity::kF0);
  CHECK(quantity_from_name("missing_mass") == Quantity::kMissingMass);
  CHECK_THROWS_AS(quantity_from_name("entropy"), std::invalid_argument);

  auto grid = log_grid(10, 10000, 4);
  REQUIRE(grid.size() == 4);
  CHECK(grid.front() == 10);
  CHECK(grid.back() == 10000);
  CHECK(log_grid(5, 5, 3) == std::vector<std::int64_t>{5});
  CHECK_THROWS_AS(log_grid(10, 5, 3), std::invalid_argument);
}

TEST_CASE("wet subcommand: exact grid and the oracle fallback", "[cli]") {
  fs::path dir = scratch();
  fs::path out = dir / "wet.csv";
  REQUIRE(run("wet --measure circle --tmin 0.01 --tmax 1 --points 5 --out " +
                  out.string(),
              dir / "wet.log") == 0);
  CHECK(first_line(out) == "t,wet");
  // single circle: any positive halfplane cut wets the whole circle
  std::string body = slurp(out);
  CHECK(body.find("\n0.01,1") != std::string::npos);

  // non-symmetric measure: exact mode refuses and points at the oracle
  int code = run("wet --measure triangle-boundary --points 3 --out " +
                     (dir / "wet_tri.csv").string(),
                 dir / "wet_tri.log");
  CHECK(code == 2);
  CHECK(slurp(dir / "wet_tri.log").find("--oracle") != std::string::npos);

  REQUIRE(run("wet --measure triangle-boundary --tmin 0.2 --tmax 0.2 --points 1 "
              "--oracle --samples 500 --out " +
                  (dir / "wet_tri2.csv").string(),
              dir / "wet_tri2.log") == 0);
  CHECK(first_line(dir / "wet_tri2.csv") == "t,wet");
}

TEST_CASE("simulate subcommand: schema, determinism, env seed", "[cli]") {
  fs::path dir = scratch();
  fs::path out = dir / "sim.csv";
  std::string base = "simulate --measure circle --quantity f0 --nmin 100 --nmax 100 "
                     "--points 1 --trials 20 --seed 7 --out ";
  REQUIRE(run(base + out.string(), dir / "sim.log") == 0);
  CHECK(first_line(out) == "n,mean,stderr,trials,seed");
  // every point on one circle is a hull vertex, so f0 == n with zero spread
  CHECK(slurp(out).find("100,100,0,20,7") != std::string::npos);

  fs::path again = dir / "sim2.csv";
  REQUIRE(run(base + again.string(), dir / "sim2.log") == 0);
  CHECK(slurp(out) == slurp(again));

  setenv("RANDPOLY_SEED", "4242", 1);
  fs::path enved = dir / "sim3.csv";
  int code = run("simulate --measure circle --quantity f0 --nmin 10 --nmax 10 "
                 "--points 1 --trials 5 --out " +
                     enved.string(),
                 dir / "sim3.log");
  unsetenv("RANDPOLY_SEED");
  REQUIRE(code == 0);
  CHECK(slurp(enved).find("10,10,0,5,4242") != std::string::npos);

  fs::path cfg = dir / "run.cfg";
  {
    RunConfig c;
    c.measure = "circle";
    c.quantity = "f0";
    c.nmin = c.nmax = 12;
    c.points = 1;
    c.trials = 4;
    c.seed = 3;
    c.out = (dir / "sim4.csv").string();
    std::ofstream(cfg) << serialize(c);
  }
  REQUIRE(run("simulate --config " + cfg.string() + " --trials 6",
              dir / "sim4.log") == 0);
  // the flag overrides the file; everything else comes from the file
  CHECK(slurp(dir / "sim4.csv").find("12,12,0,6,3") != std::string::npos);

  std::ofstream(dir / "bad.cfg") << "no such key = 1\n";
  CHECK(run("simulate --config " + (dir / "bad.cfg").string(), dir / "bad.log") == 2);
}

TEST_CASE("figure1 subcommand writes csv and both panels", "[cli]") {
  fs::path dir = scratch();
  fs::path csv = dir / "fig.csv", top = dir / "top.svg", bottom = dir / "bottom.svg";
  REQUIRE(run("figure1 --nmin 10 --nmax 400 --points 4 --trials 30 --out " +
                  csv.string() + " --svg-top " + top.string() + " --svg-bottom " +
                  bottom.string(),
              dir / "fig.log") == 0);
  CHECK(first_line(csv) ==
        "n,wet,n_wet,missing_mean,missing_stderr,f0_mean,f0_stderr");
  CHECK(slurp(top).find("<svg") != std::string::npos);
  CHECK(slurp(bottom).find("<svg") != std::string::npos);

  CHECK(run("figure1 --points 0 --out " + (dir / "fig0.csv").string(),
            dir / "fig0.log") == 2);
}

TEST_CASE("check subcommands succeed on healthy inputs", "[cli]") {
  fs::path dir = scratch();
  CHECK(run("theorem3-check --out " + (dir / "t3.csv").string(), dir / "t3.log") ==
        0);
  CHECK(first_line(dir / "t3.csv") ==
        "i,log2_s,log2_p,log2_n,log2_ratio,log2_nu_exact,log2_nu_lower,bracket,"
        "chain_check,bracket_above_half,check");

  CHECK(run("epsnet --measure circle --n 100 --trials 300 --out " +
                (dir / "eps.csv").string(),
            dir / "eps.log") == 0);

  CHECK(run("efron-check --measure circle --n 1 --trials 50 --out " +
                (dir / "ef.csv").string(),
            dir / "ef.log") == 0);
  CHECK(run("efron-check --measure disk --n 20 --trials 2000 --interior --out " +
                (dir / "ef2.csv").string(),
            dir / "ef2.log") == 0);

  CHECK(run("theorem2-check --measure circle --nmin 2 --nmax 64 --points 4 "
            "--trials 300 --out " +
                (dir / "t2.csv").string(),
            dir / "t2.log") == 0);
  CHECK(first_line(dir / "t2.csv") ==
        "n,lower,mean,stderr,upper,check_lower,check_upper,pass_lower,pass_upper");

  CHECK(run("", dir / "nosub.log") != 0);  // a subcommand is required
}

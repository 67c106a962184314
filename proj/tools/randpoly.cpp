#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "randpoly/bounds.hpp"
#include "randpoly/csv.hpp"
#include "randpoly/montecarlo.hpp"
#include "randpoly/runconfig.hpp"
#include "randpoly/svg.hpp"
#include "randpoly/wetpart.hpp"

using namespace randpoly;

namespace {

constexpr const char* kBlue = "#1f77b4";
constexpr const char* kRed = "#d62728";

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RANDPOLY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::runtime_error("RANDPOLY_SEED must be an unsigned integer");
    }
  }
  return 12345;
}

struct MeasureFlags {
  std::string name = "two-circle";
  double p = 0.01;
  double ratio = 2.0;
  double radius = 1.0;
  int cap = DropSequence::kDefaultCap;

  MeasureHandle build() const { return make_measure(name, p, ratio, radius, cap); }
};

void add_measure_flags(CLI::App* cmd, MeasureFlags& mf) {
  cmd->add_option("--measure", mf.name,
                  "circle | two-circle | disk | drop | triangle-boundary | "
                  "square-boundary")
      ->capture_default_str();
  cmd->add_option("--p", mf.p, "outer-circle mass (two-circle)")->capture_default_str();
  cmd->add_option("--ratio", mf.ratio, "outer/inner radius ratio (two-circle)")
      ->capture_default_str();
  cmd->add_option("--radius", mf.radius, "circle/disk radius")->capture_default_str();
  cmd->add_option("--cap", mf.cap, "level cap (drop)")->capture_default_str();
}

std::string swap_extension(const std::string& path, const std::string& ext) {
  std::size_t slash = path.find_last_of('/');
  std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + ext;
  return path.substr(0, dot) + ext;
}

std::vector<double> log_t_grid(double tmin, double tmax, int points) {
  if (!(tmin > 0.0 && tmin <= tmax && tmax <= 1.0))
    throw std::invalid_argument("need 0 < tmin <= tmax <= 1");
  if (points < 1) throw std::invalid_argument("need at least one grid point");
  std::vector<double> grid;
  if (points == 1 || tmin == tmax) {
    grid.push_back(tmin);
    if (tmax != tmin) grid.push_back(tmax);
    return grid;
  }
  double lr = std::log(tmax / tmin);
  for (int k = 0; k < points; ++k)
    grid.push_back(tmin * std::exp(lr * double(k) / double(points - 1)));
  grid.back() = tmax;
  return grid;
}

// analytic w(1/n) (or n*w(1/n)) over n in [nmin, nmax]: geometric sampling plus
// the exact integers bracketing every step threshold so drops render sharply
std::vector<std::pair<double, double>> analytic_wet_curve(const MeasureHandle& m,
                                                          std::int64_t nmin,
                                                          std::int64_t nmax,
                                                          bool times_n) {
  std::set<double> xs;
  const int samples = 400;
  double lr = std::log(double(nmax) / double(nmin));
  for (int k = 0; k < samples; ++k)
    xs.insert(double(nmin) * std::exp(lr * double(k) / double(samples - 1)));
  xs.insert(double(nmax));
  WetProfile profile = wet_steps(m);
  for (const WetStep& s : profile.steps) {
    if (!(s.threshold > 0.0)) continue;
    auto nstar = std::int64_t(std::floor(1.0 / s.threshold));
    for (std::int64_t cand : {nstar, nstar + 1})
      if (cand >= nmin && cand <= nmax) xs.insert(double(cand));
  }
  std::vector<std::pair<double, double>> pts;
  pts.reserve(xs.size());
  for (double x : xs) {
    double w = wet_measure(m, std::min(1.0, 1.0 / x));
    pts.emplace_back(x, times_n ? x * w : w);
  }
  return pts;
}

int run_wet(const MeasureFlags& mf, double tmin, double tmax, int points,
            bool oracle, int directions, std::int64_t samples, std::uint64_t seed,
            const std::string& out) {
  MeasureHandle m = mf.build();
  std::vector<double> grid = log_t_grid(tmin, tmax, points);
  CsvTable csv({"t", "wet"});
  if (oracle) {
    if (samples < 1 || samples > (std::int64_t(1) << 31))
      throw std::invalid_argument("wet: bad --samples");
    TrialRng rng(seed, 0);
    for (double t : grid)
      csv.row({csv_double(t),
               csv_double(mc_wet_oracle(m, t, directions, int(samples), rng))});
  } else {
    try {
      for (double t : grid) csv.row({csv_double(t), csv_double(wet_measure(m, t))});
    } catch (const std::logic_error&) {
      std::fprintf(stderr,
                   "wet: exact mode supports rotationally symmetric measures only "
                   "(circle, two-circle, disk, drop); rerun with --oracle for a "
                   "Monte Carlo estimate\n");
      return 2;
    }
  }
  csv.write(out);
  std::printf("wet: wrote %s (%zu rows)\n", out.c_str(), grid.size());
  return 0;
}

int run_simulate(CLI::App* cmd, RunConfig cfg, const std::string& config_path) {
  if (!config_path.empty()) {
    RunConfig file = load_config(config_path);
    // command-line flags beat the file; anything not given falls back to it
    RunConfig merged = file;
    if (cmd->count("--measure")) merged.measure = cfg.measure;
    if (cmd->count("--p")) merged.p = cfg.p;
    if (cmd->count("--ratio")) merged.ratio = cfg.ratio;
    if (cmd->count("--radius")) merged.radius = cfg.radius;
    if (cmd->count("--cap")) merged.cap = cfg.cap;
    if (cmd->count("--quantity")) merged.quantity = cfg.quantity;
    if (cmd->count("--nmin")) merged.nmin = cfg.nmin;
    if (cmd->count("--nmax")) merged.nmax = cfg.nmax;
    if (cmd->count("--points")) merged.points = cfg.points;
    if (cmd->count("--trials")) merged.trials = cfg.trials;
    if (cmd->count("--seed")) merged.seed = cfg.seed;
    if (cmd->count("--out")) merged.out = cfg.out;
    if (cmd->count("--plot")) merged.plot = cfg.plot;
    cfg = merged;
  }
  MeasureHandle m = make_measure(cfg);
  Quantity q = quantity_from_name(cfg.quantity);
  std::vector<std::int64_t> grid = log_grid(cfg.nmin, cfg.nmax, cfg.points);

  CsvTable csv({"n", "mean", "stderr", "trials", "seed"});
  std::vector<ExperimentResult> results;
  results.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ExperimentResult est = estimate(m, grid[i], cfg.trials, cfg.seed, q);
    results.push_back(est);
    csv.row({csv_int(est.n), csv_double(est.mean), csv_double(est.std_error),
             csv_int(est.trials), csv_uint(est.seed)});
    std::fprintf(stderr, "simulate: %zu/%zu n=%lld mean=%.6g\n", i + 1, grid.size(),
                 static_cast<long long>(est.n), est.mean);
  }
  csv.write(cfg.out);
  std::printf("simulate: wrote %s (%zu rows)\n", cfg.out.c_str(), grid.size());

  if (cfg.plot) {
    double ymax = 0.0, ymin = std::numeric_limits<double>::infinity();
    for (const auto& r : results) {
      ymax = std::max(ymax, r.mean + r.std_error);
      ymin = std::min(ymin, r.mean - r.std_error);
    }
    double pad = std::max(0.05 * std::max(std::abs(ymax), 1e-12), 1e-12);
    SvgPlot plot(760, 520, true, false);
    plot.title(cfg.quantity + " for " + cfg.measure);
    plot.x_label("n");
    plot.y_label(cfg.quantity);
    plot.ranges(double(grid.front()) * 0.9, double(grid.back()) * 1.1,
                std::min(0.0, ymin - pad), ymax + pad);
    std::vector<std::pair<double, double>> means;
    std::vector<std::array<double, 3>> bars;
    for (const auto& r : results) {
      means.emplace_back(double(r.n), r.mean);
      bars.push_back({double(r.n), r.mean - r.std_error, r.mean + r.std_error});
    }
    plot.line(means, kBlue);
    plot.scatter(means, kBlue);
    plot.error_bars(bars, kBlue);
    plot.legend("mean +- stderr", kBlue);
    std::string svg_path = swap_extension(cfg.out, ".svg");
    plot.write(svg_path);
    std::printf("simulate: wrote %s\n", svg_path.c_str());
  }
  return 0;
}

int run_figure1(double p, double ratio, std::int64_t nmin, std::int64_t nmax,
                int points, std::int64_t trials, std::uint64_t seed,
                const std::string& out, const std::string& svg_top,
                const std::string& svg_bottom) {
  std::vector<std::int64_t> grid = log_grid(nmin, nmax, points);
  std::fprintf(stderr, "figure1: %zu grid points, %lld trials each\n", grid.size(),
               static_cast<long long>(trials));
  std::vector<Figure1Row> rows = figure1_curves(p, ratio, grid, trials, seed);

  CsvTable csv({"n", "wet", "n_wet", "missing_mean", "missing_stderr", "f0_mean",
                "f0_stderr"});
  for (const auto& r : rows)
    csv.row({csv_int(r.n), csv_double(r.wet), csv_double(r.n_wet),
             csv_double(r.missing_mean), csv_double(r.missing_se),
             csv_double(r.f0_mean), csv_double(r.f0_se)});
  csv.write(out);

  MeasureHandle m(two_circle_drop(p, 1.0, 1.0 * ratio));

  {  // top panel: w(1/n) and missing mass, log x
    SvgPlot plot(760, 520, true, false);
    plot.title("wet part and missing mass");
    plot.x_label("n");
    plot.y_label("measure");
    plot.ranges(double(nmin) * 0.9, double(nmax) * 1.1, 0.0, 1.06);
    plot.line(analytic_wet_curve(m, nmin, nmax, false), kBlue, 1.8);
    std::vector<std::pair<double, double>> mc;
    std::vector<std::array<double, 3>> bars;
    for (const auto& r : rows) {
      mc.emplace_back(double(r.n), r.missing_mean);
      bars.push_back({double(r.n), r.missing_mean - r.missing_se,
                      r.missing_mean + r.missing_se});
    }
    plot.scatter(mc, kRed);
    plot.error_bars(bars, kRed);
    plot.legend("w(1/n)", kBlue);
    plot.legend("E[1-mass] +- stderr", kRed);
    plot.write(svg_top);
  }

  {  // bottom panel: n*w(1/n) and f0, log-log
    auto curve = analytic_wet_curve(m, nmin, nmax, true);
    double ylo = std::numeric_limits<double>::infinity(), yhi = 0.0;
    for (const auto& [x, y] : curve) {
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
    for (const auto& r : rows) {
      ylo = std::min(ylo, std::max(r.f0_mean - r.f0_se, 1e-3));
      yhi = std::max(yhi, r.f0_mean + r.f0_se);
    }
    SvgPlot plot(760, 520, true, true);
    plot.title("expected vertex count against n w(1/n)");
    plot.x_label("n");
    plot.y_label("count");
    plot.ranges(double(nmin) * 0.9, double(nmax) * 1.1, ylo * 0.8, yhi * 1.25);
    plot.line(curve, kBlue, 1.8);
    std::vector<std::pair<double, double>> mc;
    std::vector<std::array<double, 3>> bars;
    for (const auto& r : rows) {
      mc.emplace_back(double(r.n), r.f0_mean);
      bars.push_back({double(r.n), std::max(r.f0_mean - r.f0_se, ylo * 0.8),
                      r.f0_mean + r.f0_se});
    }
    plot.scatter(mc, kRed);
    plot.error_bars(bars, kRed);
    plot.legend("n w(1/n)", kBlue);
    plot.legend("E[f0] +- stderr", kRed);
    plot.write(svg_bottom);
  }

  std::printf("figure1: wrote %s, %s, %s\n", out.c_str(), svg_top.c_str(),
              svg_bottom.c_str());
  return 0;
}

int run_theorem2(const MeasureFlags& mf, std::int64_t nmin, std::int64_t nmax,
                 int points, std::int64_t trials, std::uint64_t seed, int d,
                 const std::string& out) {
  MeasureHandle m = mf.build();
  std::vector<std::int64_t> grid = log_grid(nmin, nmax, points);
  BoundReport report = theorem2_envelopes(m, grid, d);
  std::int64_t n0 = theorem2_n0(d);

  CsvTable csv({"n", "lower", "mean", "stderr", "upper", "check_lower",
                "check_upper", "pass_lower", "pass_upper"});
  bool all_pass = true;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const Theorem2Row& row = report.rows[i];
    ExperimentResult est = estimate(m, row.n, trials, seed, Quantity::kMissingMass);
    bool pass_lower = est.mean >= row.lower - 3.0 * est.std_error;
    bool assert_upper = row.n >= n0;
    bool pass_upper = !assert_upper || est.mean <= row.upper + 3.0 * est.std_error;
    all_pass = all_pass && pass_lower && pass_upper;
    csv.row({csv_int(row.n), csv_double(row.lower), csv_double(est.mean),
             csv_double(est.std_error), csv_double(row.upper),
             "mean>=lower-3*stderr",
             assert_upper ? "mean<=upper+3*stderr" : "skipped(n<n0)",
             csv_int(pass_lower ? 1 : 0), csv_int(pass_upper ? 1 : 0)});
    if (!pass_lower || !pass_upper)
      std::printf("theorem2-check: FAIL n=%lld mean=%.17g lower=%.17g upper=%.17g\n",
                  static_cast<long long>(row.n), est.mean, row.lower, row.upper);
    std::fprintf(stderr, "theorem2-check: %zu/%zu n=%lld\n", i + 1,
                 report.rows.size(), static_cast<long long>(row.n));
  }
  csv.write(out);
  std::printf("theorem2-check: %s (%zu rows, n0=%lld, measure=%s) -> %s\n",
              all_pass ? "PASS" : "FAIL", report.rows.size(),
              static_cast<long long>(n0), mf.name.c_str(), out.c_str());
  return all_pass ? 0 : 1;
}

int run_theorem3(int imin, int imax, int level, std::int64_t trials,
                 std::uint64_t seed, const std::string& out) {
  if (imin < 1 || imax > 60 || imin > imax)
    throw std::invalid_argument("theorem3-check: need 1 <= imin <= imax <= 60");

  CsvTable csv({"i", "log2_s", "log2_p", "log2_n", "log2_ratio", "log2_nu_exact",
                "log2_nu_lower", "bracket", "chain_check", "bracket_above_half",
                "check"});
  bool all_pass = true;
  for (int i = imin; i <= imax; ++i) {
    Theorem3Row row = theorem3_ledger(i);
    bool asserted = i >= 4;
    if (asserted) all_pass = all_pass && row.chain_check && row.bracket_above_half;
    csv.row({csv_int(i), csv_double(row.s.log2()), csv_double(row.p.log2()),
             csv_double(row.n.log2()), csv_double(row.ratio.log2()),
             csv_double(row.nu_exact.log2()), csv_double(row.nu_lower.log2()),
             csv_double(row.bracket), csv_int(row.chain_check ? 1 : 0),
             csv_int(row.bracket_above_half ? 1 : 0),
             asserted ? "log2(n_i)/n_i<s_i*sqrt2/(pi*i)<=nu(h_{i-1});bracket>1/2"
                      : "reported-only"});
  }
  csv.write(out);

  // exact step identity on the drop sequence, w(log2(n_i)/n_i) == s_i
  DropSequence drop;
  bool identity_pass = true;
  for (int i = 4; i <= 20; ++i) {
    std::int64_t e = (std::int64_t(1) << i) + 2 * i;
    ExactLog2 t = ExactLog2::from_double(double(e)) / ExactLog2::from_pow2(e);
    if (!(wet_measure_exact(drop, t) == DropSequence::tail_mass_exact(i)))
      identity_pass = false;
  }
  std::printf("theorem3-check: identity w(log2(n_i)/n_i)==s_i for i=4..20: %s\n",
              identity_pass ? "PASS" : "FAIL");
  all_pass = all_pass && identity_pass;

  if (trials > 0) {
    if (level != 4)
      throw std::invalid_argument(
          "theorem3-check: only --i 4 is tractable (level 5 needs 2^42 samples)");
    std::int64_t n = (std::int64_t(1) << 24) + 1;
    double threshold = std::ldexp(double(n), -15);  // (n_4+1) s_4 / 2
    MeasureHandle m((DropSequence()));
    ExperimentResult est =
        estimate(m, n, trials, seed, Quantity::kF0,
                 [&](std::int64_t done, std::int64_t total) {
                   std::fprintf(stderr, "theorem3-check: trial %lld/%lld\n",
                                static_cast<long long>(done),
                                static_cast<long long>(total));
                 });
    double sigmas = est.std_error > 0.0
                        ? (est.mean - threshold) / est.std_error
                        : (est.mean > threshold ? std::numeric_limits<double>::infinity()
                                                : -std::numeric_limits<double>::infinity());
    bool mc_pass = est.mean - threshold >= 3.0 * est.std_error;
    std::printf("theorem3-check: mc i=4 n=%lld trials=%lld mean=%.17g stderr=%.17g "
                "threshold=%.17g sigmas=%.3f check=mean>threshold+3*stderr %s\n",
                static_cast<long long>(n), static_cast<long long>(trials), est.mean,
                est.std_error, threshold, sigmas, mc_pass ? "PASS" : "FAIL");
    all_pass = all_pass && mc_pass;
  }

  std::printf("theorem3-check: %s -> %s\n", all_pass ? "PASS" : "FAIL", out.c_str());
  return all_pass ? 0 : 1;
}

int run_epsnet(const MeasureFlags& mf, std::int64_t n, double eps,
               std::int64_t trials, std::uint64_t seed, int d,
               const std::string& out) {
  MeasureHandle m = mf.build();
  if (eps <= 0.0) {
    if (n < 2) throw std::invalid_argument("epsnet: n too small for default eps");
    eps = 4.0 * std::log(double(n)) / double(n);
    if (eps >= 1.0)
      throw std::invalid_argument("epsnet: default eps = 4 ln n / n >= 1; pass --eps");
  }
  ExperimentResult rate = epsnet_failure_rate(m, n, eps, trials, seed);
  auto big_n = std::int64_t(double(n) * std::ceil(std::log(double(n))));
  double bound = kpw_failure_bound(big_n, n, eps, d);
  bool pass = rate.mean <= bound;

  CsvTable csv({"n", "eps", "trials", "failures", "rate", "stderr", "big_n", "bound",
                "check", "pass"});
  csv.row({csv_int(n), csv_double(eps), csv_int(trials),
           csv_int(std::llround(rate.mean * double(trials))), csv_double(rate.mean),
           csv_double(rate.std_error), csv_int(big_n), csv_double(bound),
           "rate<=bound", csv_int(pass ? 1 : 0)});
  csv.write(out);
  std::printf("epsnet: %s n=%lld eps=%.17g rate=%.17g bound=%.17g -> %s\n",
              pass ? "PASS" : "FAIL", static_cast<long long>(n), eps, rate.mean,
              bound, out.c_str());
  return pass ? 0 : 1;
}

int run_efron(const MeasureFlags& mf, std::int64_t n, std::int64_t trials,
              std::uint64_t seed, bool interior, const std::string& out) {
  MeasureHandle m = mf.build();
  EfronReport r = efron_report(m, n, trials, seed, interior);
  bool pass = std::abs(r.z) <= 4.0;

  CsvTable csv({"measure", "n", "trials", "count_mean", "count_stderr", "mass_mean",
                "mass_stderr", "z", "check", "pass"});
  csv.row({mf.name, csv_int(n), csv_int(trials), csv_double(r.count_mean),
           csv_double(r.count_se), csv_double(r.mass_mean), csv_double(r.mass_se),
           csv_double(r.z), "abs(count_mean-n*mass_mean)<=4*combined_stderr",
           csv_int(pass ? 1 : 0)});
  csv.write(out);
  std::printf("efron-check: %s measure=%s n=%lld z=%.6g (%s) -> %s\n",
              pass ? "PASS" : "FAIL", mf.name.c_str(), static_cast<long long>(n),
              r.z, interior ? "interior variant" : "standard", out.c_str());
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random polytope and wet part toolbox"};
  app.require_subcommand(1);
  int rc = 0;

  try {
    std::uint64_t seed0 = default_seed();

    // wet
    auto* wet = app.add_subcommand("wet", "closed-form wet part w(t) on a t grid");
    static MeasureFlags wet_mf;
    add_measure_flags(wet, wet_mf);
    static double wet_tmin = 1e-6, wet_tmax = 1.0;
    static int wet_points = 200, wet_dirs = 720;
    static bool wet_oracle = false;
    static std::int64_t wet_samples = 20000;
    static std::string wet_out = "wet.csv";
    static std::uint64_t wet_seed;
    wet_seed = seed0;
    wet->add_option("--tmin", wet_tmin)->capture_default_str();
    wet->add_option("--tmax", wet_tmax)->capture_default_str();
    wet->add_option("--points", wet_points)->capture_default_str();
    wet->add_flag("--oracle", wet_oracle, "Monte Carlo estimate instead of exact");
    wet->add_option("--directions", wet_dirs)->capture_default_str();
    wet->add_option("--samples", wet_samples)->capture_default_str();
    wet->add_option("--seed", wet_seed, "defaults to RANDPOLY_SEED or 12345");
    wet->add_option("--out", wet_out)->capture_default_str();
    wet->callback([&]() {
      rc = run_wet(wet_mf, wet_tmin, wet_tmax, wet_points, wet_oracle, wet_dirs,
                   wet_samples, wet_seed, wet_out);
    });

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte Carlo sweep over an n grid");
    static RunConfig sim_cfg;
    sim_cfg = RunConfig{};
    sim_cfg.seed = seed0;
    static std::string sim_config_path;
    sim->add_option("--config", sim_config_path, "key = value config file");
    sim->add_option("--measure", sim_cfg.measure)->capture_default_str();
    sim->add_option("--p", sim_cfg.p)->capture_default_str();
    sim->add_option("--ratio", sim_cfg.ratio)->capture_default_str();
    sim->add_option("--radius", sim_cfg.radius)->capture_default_str();
    sim->add_option("--cap", sim_cfg.cap)->capture_default_str();
    sim->add_option("--quantity", sim_cfg.quantity,
                    "missing_mass | interior_missing_mass | f0 | f0_bar")
        ->capture_default_str();
    sim->add_option("--nmin", sim_cfg.nmin)->capture_default_str();
    sim->add_option("--nmax", sim_cfg.nmax)->capture_default_str();
    sim->add_option("--points", sim_cfg.points)->capture_default_str();
    sim->add_option("--trials", sim_cfg.trials)->capture_default_str();
    sim->add_option("--seed", sim_cfg.seed, "defaults to RANDPOLY_SEED or 12345");
    sim->add_option("--out", sim_cfg.out)->capture_default_str();
    sim->add_flag("--plot", sim_cfg.plot, "also write an SVG next to the CSV");
    sim->callback([&]() { rc = run_simulate(sim, sim_cfg, sim_config_path); });

    // figure1
    auto* fig = app.add_subcommand(
        "figure1", "two-circle drop: analytic curves plus Monte Carlo overlays");
    static double fig_p = 0.01, fig_ratio = 2.0;
    static std::int64_t fig_nmin = 10, fig_nmax = 10000, fig_trials = 1000;
    static int fig_points = 25;
    static std::uint64_t fig_seed;
    fig_seed = seed0;
    static std::string fig_out = "figure1.csv", fig_top = "figure1_top.svg",
                       fig_bottom = "figure1_bottom.svg";
    fig->add_option("--p", fig_p)->capture_default_str();
    fig->add_option("--ratio", fig_ratio)->capture_default_str();
    fig->add_option("--nmin", fig_nmin)->capture_default_str();
    fig->add_option("--nmax", fig_nmax)->capture_default_str();
    fig->add_option("--points", fig_points)->capture_default_str();
    fig->add_option("--trials", fig_trials)->capture_default_str();
    fig->add_option("--seed", fig_seed, "defaults to RANDPOLY_SEED or 12345");
    fig->add_option("--out", fig_out)->capture_default_str();
    fig->add_option("--svg-top", fig_top)->capture_default_str();
    fig->add_option("--svg-bottom", fig_bottom)->capture_default_str();
    fig->callback([&]() {
      rc = run_figure1(fig_p, fig_ratio, fig_nmin, fig_nmax, fig_points, fig_trials,
                       fig_seed, fig_out, fig_top, fig_bottom);
    });

    // theorem2-check
    auto* th2 = app.add_subcommand(
        "theorem2-check", "missing-mass envelopes: lower w(1/n)/4, upper with eps_d");
    static MeasureFlags th2_mf;
    add_measure_flags(th2, th2_mf);
    static std::int64_t th2_nmin = 2, th2_nmax = 10000, th2_trials = 10000;
    static int th2_points = 20, th2_d = 2;
    static std::uint64_t th2_seed;
    th2_seed = seed0;
    static std::string th2_out = "theorem2.csv";
    th2->add_option("--nmin", th2_nmin)->capture_default_str();
    th2->add_option("--nmax", th2_nmax)->capture_default_str();
    th2->add_option("--points", th2_points)->capture_default_str();
    th2->add_option("--trials", th2_trials)->capture_default_str();
    th2->add_option("--seed", th2_seed, "defaults to RANDPOLY_SEED or 12345");
    th2->add_option("--d", th2_d)->capture_default_str();
    th2->add_option("--out", th2_out)->capture_default_str();
    th2->callback([&]() {
      rc = run_theorem2(th2_mf, th2_nmin, th2_nmax, th2_points, th2_trials, th2_seed,
                        th2_d, th2_out);
    });

    // theorem3-check
    auto* th3 = app.add_subcommand(
        "theorem3-check", "drop-sequence ledger, inequality chain, optional MC");
    static int th3_imin = 1, th3_imax = 60, th3_level = 4;
    static std::int64_t th3_trials = 0;
    static std::uint64_t th3_seed;
    th3_seed = seed0;
    static std::string th3_out = "theorem3.csv";
    th3->add_option("--imin", th3_imin)->capture_default_str();
    th3->add_option("--imax", th3_imax)->capture_default_str();
    th3->add_option("--i", th3_level, "level for the MC run (only 4 is tractable)")
        ->capture_default_str();
    th3->add_option("--trials", th3_trials, "MC trials at n_4+1 points; 0 = skip")
        ->capture_default_str();
    th3->add_option("--seed", th3_seed, "defaults to RANDPOLY_SEED or 12345");
    th3->add_option("--out", th3_out)->capture_default_str();
    th3->callback([&]() {
      rc = run_theorem3(th3_imin, th3_imax, th3_level, th3_trials, th3_seed, th3_out);
    });

    // epsnet
    auto* eps = app.add_subcommand(
        "epsnet", "empirical eps-net failure rate against the sampling bound");
    static MeasureFlags eps_mf;
    add_measure_flags(eps, eps_mf);
    static std::int64_t eps_n = 100, eps_trials = 2000;
    static double eps_eps = 0.0;
    static int eps_d = 2;
    static std::uint64_t eps_seed;
    eps_seed = seed0;
    static std::string eps_out = "epsnet.csv";
    eps->add_option("--n", eps_n)->capture_default_str();
    eps->add_option("--eps", eps_eps, "net parameter; <=0 means 4 ln n / n");
    eps->add_option("--trials", eps_trials)->capture_default_str();
    eps->add_option("--seed", eps_seed, "defaults to RANDPOLY_SEED or 12345");
    eps->add_option("--d", eps_d)->capture_default_str();
    eps->add_option("--out", eps_out)->capture_default_str();
    eps->callback([&]() {
      rc = run_epsnet(eps_mf, eps_n, eps_eps, eps_trials, eps_seed, eps_d, eps_out);
    });

    // efron-check
    auto* efr = app.add_subcommand(
        "efron-check", "vertex count against n times the missing mass at n-1");
    static MeasureFlags efr_mf;
    add_measure_flags(efr, efr_mf);
    static std::int64_t efr_n = 50, efr_trials = 10000;
    static bool efr_interior = false;
    static std::uint64_t efr_seed;
    efr_seed = seed0;
    static std::string efr_out = "efron.csv";
    efr->add_option("--n", efr_n)->capture_default_str();
    efr->add_option("--trials", efr_trials)->capture_default_str();
    efr->add_option("--seed", efr_seed, "defaults to RANDPOLY_SEED or 12345");
    efr->add_flag("--interior", efr_interior,
                  "boundary-count variant with interior missing mass");
    efr->add_option("--out", efr_out)->capture_default_str();
    efr->callback([&]() {
      rc = run_efron(efr_mf, efr_n, efr_trials, efr_seed, efr_interior, efr_out);
    });

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}

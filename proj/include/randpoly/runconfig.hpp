#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "randpoly/csv.hpp"
#include "randpoly/measures.hpp"
#include "randpoly/montecarlo.hpp"

namespace randpoly {

// one simulation run: measure, quantity, log-spaced n grid, trial budget.
// Serializes to flat key = value text; parse(serialize(c)) == c.
struct RunConfig {
  std::string measure = "two-circle";
  double p = 0.01;       // outer-circle mass (two-circle)
  double ratio = 2.0;    // outer/inner radius (two-circle)
  double radius = 1.0;   // circle / disk radius
  int cap = DropSequence::kDefaultCap;
  std::string quantity = "missing_mass";
  std::int64_t nmin = 10;
  std::int64_t nmax = 10000;
  int points = 20;
  std::int64_t trials = 1000;
  std::uint64_t seed = 12345;
  std::string out = "simulate.csv";
  bool plot = false;

  bool operator==(const RunConfig&) const = default;
};

inline std::string serialize(const RunConfig& c) {
  std::string s;
  s += "measure = " + c.measure + "\n";
  s += "p = " + csv_double(c.p) + "\n";
  s += "ratio = " + csv_double(c.ratio) + "\n";
  s += "radius = " + csv_double(c.radius) + "\n";
  s += "cap = " + std::to_string(c.cap) + "\n";
  s += "quantity = " + c.quantity + "\n";
  s += "nmin = " + std::to_string(c.nmin) + "\n";
  s += "nmax = " + std::to_string(c.nmax) + "\n";
  s += "points = " + std::to_string(c.points) + "\n";
  s += "trials = " + std::to_string(c.trials) + "\n";
  s += "seed = " + std::to_string(c.seed) + "\n";
  s += "out = " + c.out + "\n";
  s += "plot = " + std::string(c.plot ? "1" : "0") + "\n";
  return s;
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  throw std::invalid_argument("config: bad boolean '" + v + "'");
}

}  // namespace detail

inline RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    line = detail::trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string val = detail::trim(line.substr(eq + 1));
    try {
      if (key == "measure") c.measure = val;
      else if (key == "p") c.p = std::stod(val);
      else if (key == "ratio") c.ratio = std::stod(val);
      else if (key == "radius") c.radius = std::stod(val);
      else if (key == "cap") c.cap = std::stoi(val);
      else if (key == "quantity") c.quantity = val;
      else if (key == "nmin") c.nmin = std::stoll(val);
      else if (key == "nmax") c.nmax = std::stoll(val);
      else if (key == "points") c.points = std::stoi(val);
      else if (key == "trials") c.trials = std::stoll(val);
      else if (key == "seed") c.seed = std::stoull(val);
      else if (key == "out") c.out = val;
      else if (key == "plot") c.plot = detail::parse_bool(val);
      else throw std::invalid_argument("config line " + std::to_string(lineno) +
                                       ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": bad value '" + val + "' for " + key);
    }
  }
  return c;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// measure factory shared by all subcommands
inline MeasureHandle make_measure(const std::string& name, double p, double ratio,
                                  double radius, int cap) {
  if (name == "circle") return MeasureHandle(ConcentricCircles({{radius, 1.0}}));
  if (name == "two-circle") return MeasureHandle(two_circle_drop(p, radius, radius * ratio));
  if (name == "disk") return MeasureHandle(UniformDisk(radius));
  if (name == "drop") return MeasureHandle(DropSequence(cap));
  if (name == "triangle-boundary") {
    std::vector<Point2> tri = {{-1.0, -1.0}, {1.0, -1.0}, {0.0, 1.0}};
    return MeasureHandle(PolygonBoundaryMeasure(convex_hull(tri)));
  }
  if (name == "square-boundary") {
    std::vector<Point2> sq = {{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}};
    return MeasureHandle(PolygonBoundaryMeasure(convex_hull(sq)));
  }
  throw std::invalid_argument(
      "unknown measure '" + name +
      "' (expected circle, two-circle, disk, drop, triangle-boundary, square-boundary)");
}

inline MeasureHandle make_measure(const RunConfig& c) {
  return make_measure(c.measure, c.p, c.ratio, c.radius, c.cap);
}

inline Quantity quantity_from_name(const std::string& name) {
  for (Quantity q : {Quantity::kMissingMass, Quantity::kInteriorMissingMass,
                     Quantity::kF0, Quantity::kF0Bar})
    if (name == quantity_name(q)) return q;
  throw std::invalid_argument(
      "unknown quantity '" + name +
      "' (expected missing_mass, interior_missing_mass, f0, f0_bar)");
}

// ascending, deduplicated, geometric from nmin to nmax inclusive
inline std::vector<std::int64_t> log_grid(std::int64_t nmin, std::int64_t nmax,
                                          int points) {
  if (nmin < 1 || nmax < nmin) throw std::invalid_argument("log_grid: bad range");
  if (points < 1) throw std::invalid_argument("log_grid: need at least one point");
  std::vector<std::int64_t> grid;
  if (points == 1 || nmin == nmax) {
    grid.push_back(nmin);
    if (nmax != nmin) grid.push_back(nmax);
    return grid;
  }
  double lr = std::log(double(nmax) / double(nmin));
  for (int k = 0; k < points; ++k) {
    double v = double(nmin) * std::exp(lr * double(k) / double(points - 1));
    auto n = std::int64_t(std::llround(v));
    n = std::max(nmin, std::min(nmax, n));
    if (grid.empty() || n != grid.back()) grid.push_back(n);
  }
  return grid;
}

}  // namespace randpoly

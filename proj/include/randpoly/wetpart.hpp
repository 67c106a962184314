#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "randpoly/exact_log2.hpp"
#include "randpoly/geom2d.hpp"
#include "randpoly/measures.hpp"
#include "randpoly/rng.hpp"

namespace randpoly {

// area of the circular segment of the disk of radius R cut at distance rho
// from the centre; rho beyond the disk gives 0
inline double disk_cap_area(double R, double rho) {
  if (!(R > 0.0)) throw std::invalid_argument("disk_cap_area: R <= 0");
  if (!(rho >= 0.0)) throw std::invalid_argument("disk_cap_area: rho < 0");
  return detail::disk_cap(R, rho);
}

// the 1-D closed form: w(t) = min(2t, 1)
inline double wet_measure_1d(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("wet_measure_1d: t");
  return std::min(2.0 * t, 1.0);
}

struct WetStep {
  double threshold;  // t at which this value starts (left-closed)
  double value;      // w on [threshold, next threshold)
  double rho;        // rho*(t) on the same interval
};

struct WetProfile {
  std::vector<WetStep> steps;  // ascending thresholds

  double value_at(double t) const {
    double v = 0.0;
    for (const auto& s : steps) {
      if (t < s.threshold) break;
      v = s.value;
    }
    return v;
  }

  double rho_at(double t) const {
    if (steps.empty() || t < steps.front().threshold) return 0.0;
    double r = 0.0;
    for (const auto& s : steps) {
      if (t < s.threshold) break;
      r = s.rho;
    }
    return r;
  }
};

namespace detail {

template <typename CircleMeasure>
double circle_wet(const CircleMeasure& m, double t) {
  double w = 0.0;
  for (const auto& l : m.layers())
    if (m.profile(l.radius) <= t) w += l.weight;
  return w;
}

template <typename CircleMeasure>
WetProfile circle_steps(const CircleMeasure& m) {
  const auto& layers = m.layers();
  WetProfile profile;
  double tail = 0.0;
  for (std::size_t k = layers.size(); k-- > 0;) {
    tail += layers[k].weight;
    profile.steps.push_back({m.profile(layers[k].radius), tail, layers[k].radius});
  }
  return profile;
}

// smallest rho with profile(rho) <= t; profile is continuous and strictly
// decreasing until it hits zero, so plain bisection is safe across kinks
template <typename SymmetricMeasure>
double profile_inverse(const SymmetricMeasure& m, double t) {
  if (m.profile(0.0) <= t) return 0.0;
  double lo = 0.0, hi = m.support_radius();
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (m.profile(mid) <= t ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace detail

// smallest halfplane-boundary distance at which the tangent halfplane measure
// drops to t; capped at the support radius
inline double rho_star(const MeasureHandle& m, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("rho_star: t");
  if (!m.rotationally_symmetric())
    throw std::logic_error("rho_star: measure is not rotationally symmetric");
  return std::visit(
      [&](const auto& mm) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(mm)>,
                                     PolygonBoundaryMeasure>)
          throw std::logic_error("rho_star: unreachable");
        else
          return detail::profile_inverse(mm, t);
      },
      m.value());
}

// w(t): mass of the union of all halfplanes of measure at most t
inline double wet_measure(const MeasureHandle& m, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("wet_measure: t");
  return std::visit(
      [&](const auto& mm) -> double {
        using M = std::decay_t<decltype(mm)>;
        if constexpr (std::is_same_v<M, ConcentricCircles> ||
                      std::is_same_v<M, DropSequence>) {
          return detail::circle_wet(mm, t);
        } else if constexpr (std::is_same_v<M, UniformDisk>) {
          double rho = detail::profile_inverse(mm, t);
          double R = mm.radius();
          return 1.0 - (rho * rho) / (R * R);
        } else {
          throw std::logic_error(
              "wet_measure: no closed form for this measure; use the MC oracle");
        }
      },
      m.value());
}

// step structure of w for circle-supported measures
inline WetProfile wet_steps(const MeasureHandle& m) {
  return std::visit(
      [&](const auto& mm) -> WetProfile {
        using M = std::decay_t<decltype(mm)>;
        if constexpr (std::is_same_v<M, ConcentricCircles> ||
                      std::is_same_v<M, DropSequence>)
          return detail::circle_steps(mm);
        else
          throw std::logic_error("wet_steps: measure is not circle-supported");
      },
      m.value());
}

// w(t) for the drop sequence with t given in log-space; the result is always
// one of the exact tail masses, so extreme exponents survive
inline ExactLog2 wet_measure_exact(const DropSequence& m, const ExactLog2& t) {
  for (int i = 1; i <= 60; ++i)
    if (DropSequence::profile_exact(i) <= t) return DropSequence::tail_mass_exact(i);
  return DropSequence::tail_mass_exact(61);
}

// Monte Carlo estimate of w(t): a sampled point is wet when some halfplane
// through it, over a uniform direction grid, has measure at most t
inline double mc_wet_oracle(const MeasureHandle& m, double t, int direction_count,
                            int sample_count, TrialRng& rng) {
  if (direction_count < 360)
    throw std::invalid_argument("mc_wet_oracle: need at least 360 directions");
  if (sample_count < 1) throw std::invalid_argument("mc_wet_oracle: samples");
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("mc_wet_oracle: t");
  std::vector<Point2> dirs;
  dirs.reserve(direction_count);
  for (int k = 0; k < direction_count; ++k) {
    double a = kTau * k / direction_count;
    dirs.emplace_back(std::cos(a), std::sin(a));
  }
  long long wet = 0;
  for (int s = 0; s < sample_count; ++s) {
    Point2 x = m.sample(rng);
    for (const auto& d : dirs) {
      Halfplane h = halfplane_through(x, d);
      if (m.halfplane_measure(h) <= t) {
        ++wet;
        break;
      }
    }
  }
  return double(wet) / double(sample_count);
}

}  // namespace randpoly

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "randpoly/exact_log2.hpp"
#include "randpoly/geom2d.hpp"
#include "randpoly/rng.hpp"

namespace randpoly {

inline constexpr double kPi = kTau / 2.0;

namespace detail {

inline constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// fraction of the circle of radius r lying in a halfplane whose boundary has
// signed distance c from the centre (negative c: centre strictly inside);
// computed in extended precision so layer sums round once at the end — this
// keeps knife-edge thresholds (e.g. 1/300) on the correctly rounded double
inline long double circle_halfplane_fraction(double c, double r) {
  long double q = std::clamp((long double)c / (long double)r, -1.0L, 1.0L);
  return std::acos(q) / kPiL;
}

// area of the circular segment {x in disk(R) : x1 >= rho}, rho >= 0
inline double disk_cap(double R, double rho) {
  if (rho >= R) return 0.0;
  return R * R * std::acos(rho / R) - rho * std::sqrt(R * R - rho * rho);
}

}  // namespace detail

struct CircleLayer {
  double radius;
  double weight;
};

// finitely many concentric circles, uniform on each, total mass 1
class ConcentricCircles {
 public:
  explicit ConcentricCircles(std::vector<CircleLayer> layers)
      : layers_(std::move(layers)) {
    if (layers_.empty())
      throw std::invalid_argument("ConcentricCircles: no layers");
    double total = 0.0;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      const auto& l = layers_[i];
      if (!(l.radius > 0.0) || !std::isfinite(l.radius) || !(l.weight > 0.0) ||
          !std::isfinite(l.weight))
        throw std::invalid_argument("ConcentricCircles: bad layer");
      if (i > 0 && !(l.radius > layers_[i - 1].radius))
        throw std::invalid_argument("ConcentricCircles: radii must increase");
      total += l.weight;
      cumulative_.push_back(total);
    }
    if (std::fabs(total - 1.0) > 1e-12)
      throw std::invalid_argument("ConcentricCircles: weights must sum to 1");
  }

  const std::vector<CircleLayer>& layers() const { return layers_; }
  double support_radius() const { return layers_.back().radius; }

  std::pair<double, double> sample_polar(TrialRng& rng) const {
    double u = rng.uniform01();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    std::size_t idx = std::min<std::size_t>(it - cumulative_.begin(),
                                            layers_.size() - 1);
    return {layers_[idx].radius, kTau * rng.uniform01()};
  }

  Point2 sample(TrialRng& rng) const {
    auto [r, a] = sample_polar(rng);
    return Point2(r * std::cos(a), r * std::sin(a));
  }

  double halfplane_measure(const Halfplane& h) const {
    long double acc = 0.0L;
    for (const auto& l : layers_)
      acc += l.weight * detail::circle_halfplane_fraction(h.offset, l.radius);
    return double(acc);
  }

  // measure of a halfplane tangent from distance rho (the minimum over all
  // halfplanes whose boundary passes at distance rho)
  double profile(double rho) const {
    if (!(rho >= 0.0)) throw std::invalid_argument("profile: rho < 0");
    long double acc = 0.0L;
    for (const auto& l : layers_)
      acc += l.weight * detail::circle_halfplane_fraction(rho, l.radius);
    return double(acc);
  }

 private:
  std::vector<CircleLayer> layers_;
  std::vector<double> cumulative_;
};

inline ConcentricCircles two_circle_drop(double p, double r_in, double r_out) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("two_circle_drop: p");
  if (!(0.0 < r_in && r_in < r_out))
    throw std::invalid_argument("two_circle_drop: need 0 < r_in < r_out");
  return ConcentricCircles({{r_in, 1.0 - p}, {r_out, p}});
}

// infinite family of circles with tail masses s_i = 2^(2-2^i) and radii
// 1 - 1/(i+1); indices capped, exact queries truncated where the tail falls
// below double resolution
class DropSequence {
 public:
  static constexpr int kDefaultCap = 40;

  explicit DropSequence(int cap = kDefaultCap) : cap_(cap) {
    if (cap < 2 || cap > 61)
      throw std::invalid_argument("DropSequence: cap out of range");
    for (int j = 1; j <= series_cap(); ++j)
      layers_.push_back({radius(j), weight_exact(j).to_double()});
  }

  int cap() const { return cap_; }

  // tail mass of circles i, i+1, ...: exactly 2^(2 - 2^i)
  static ExactLog2 tail_mass_exact(int i) {
    if (i < 1 || i > 62) throw std::invalid_argument("tail_mass_exact: index");
    return ExactLog2::from_pow2(2 - (std::int64_t(1) << i));
  }

  // weight of circle i: s_i - s_{i+1}
  static ExactLog2 weight_exact(int i) {
    return tail_mass_exact(i) - tail_mass_exact(i + 1);
  }

  static double radius(int i) {
    if (i < 0) throw std::invalid_argument("radius: index");
    return 1.0 - 1.0 / (i + 1);
  }

  // smallest index whose successor tail mass is below 1e-18
  static constexpr int series_cap() { return 5; }

  // smallest i >= 1 with u > s_{i+1}, compared in log2-space
  int index_from_uniform(double u) const {
    if (!(u > 0.0 && u <= 1.0))
      throw std::invalid_argument("index_from_uniform: u outside (0,1]");
    double lg = std::log2(u);
    for (int i = 1; i < cap_; ++i)
      if (lg > 2.0 - std::exp2(double(i + 1))) return i;
    return cap_;
  }

  std::pair<double, double> sample_polar(TrialRng& rng) const {
    int idx = index_from_uniform(rng.uniform_open01());
    return {radius(idx), kTau * rng.uniform01()};
  }

  Point2 sample(TrialRng& rng) const {
    auto [r, a] = sample_polar(rng);
    return Point2(r * std::cos(a), r * std::sin(a));
  }

  // truncated double view of the layers (absolute truncation error < 1e-18)
  const std::vector<CircleLayer>& layers() const { return layers_; }
  double support_radius() const { return 1.0; }

  double halfplane_measure(const Halfplane& h) const {
    long double acc = 0.0L;
    for (const auto& l : layers_)
      acc += l.weight * detail::circle_halfplane_fraction(h.offset, l.radius);
    return double(acc);
  }

  double profile(double rho) const {
    if (!(rho >= 0.0)) throw std::invalid_argument("profile: rho < 0");
    long double acc = 0.0L;
    for (const auto& l : layers_)
      acc += l.weight * detail::circle_halfplane_fraction(rho, l.radius);
    return double(acc);
  }

  // profile at radius(i) in log-space: sum over j > i of
  // weight(j) * arccos(radius(i)/radius(j)) / pi, truncated when a term
  // stops affecting the 53-bit fraction of the sum
  static ExactLog2 profile_exact(int i) {
    if (i < 0 || i > 60) throw std::invalid_argument("profile_exact: index");
    ExactLog2 acc = ExactLog2::zero();
    for (int j = i + 1; j <= 61; ++j) {
      double ratio = i == 0 ? 0.0
                            : (double(i) * (j + 1)) / (double(j) * (i + 1));
      double angle_frac = std::acos(std::clamp(ratio, 0.0, 1.0)) / kPi;
      ExactLog2 term = weight_exact(j) * ExactLog2::from_double(angle_frac);
      acc = acc + term;
      if (!acc.is_zero() && term.log2() < acc.log2() - 200.0) break;
    }
    return acc;
  }

 private:
  int cap_;
  std::vector<CircleLayer> layers_;
};

class UniformDisk {
 public:
  explicit UniformDisk(double R) : R_(R) {
    if (!(R > 0.0) || !std::isfinite(R))
      throw std::invalid_argument("UniformDisk: radius");
  }

  double radius() const { return R_; }
  double support_radius() const { return R_; }

  std::pair<double, double> sample_polar(TrialRng& rng) const {
    return {R_ * std::sqrt(rng.uniform01()), kTau * rng.uniform01()};
  }

  Point2 sample(TrialRng& rng) const {
    auto [r, a] = sample_polar(rng);
    return Point2(r * std::cos(a), r * std::sin(a));
  }

  double halfplane_measure(const Halfplane& h) const {
    double area = h.offset >= 0.0
                      ? detail::disk_cap(R_, h.offset)
                      : kPi * R_ * R_ - detail::disk_cap(R_, -h.offset);
    return area / (kPi * R_ * R_);
  }

  double profile(double rho) const {
    if (!(rho >= 0.0)) throw std::invalid_argument("profile: rho < 0");
    return detail::disk_cap(R_, rho) / (kPi * R_ * R_);
  }

 private:
  double R_;
};

// uniform with respect to arc length on the boundary of a convex polygon
class PolygonBoundaryMeasure {
 public:
  explicit PolygonBoundaryMeasure(ConvexPolygon poly) : poly_(std::move(poly)) {
    if (poly_.kind() != PolyKind::kPolygon)
      throw std::invalid_argument("PolygonBoundaryMeasure: need a full polygon");
    const auto& v = poly_.vertices();
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point2 &a = v[i], &b = v[(i + 1) % v.size()];
      total += std::hypot(b.x - a.x, b.y - a.y);
      cumulative_.push_back(total);
    }
    perimeter_ = total;
  }

  const ConvexPolygon& polygon() const { return poly_; }
  double perimeter() const { return perimeter_; }

  // edge by length, then a 51-bit dyadic offset along it: for small-integer
  // vertex coordinates the lerp is exact, so samples sit exactly on the edge
  // line and boundary counts need no tolerance
  Point2 sample(TrialRng& rng) const {
    double target = rng.uniform01() * perimeter_;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    std::size_t e = std::min<std::size_t>(it - cumulative_.begin(),
                                          cumulative_.size() - 1);
    const auto& v = poly_.vertices();
    const Point2 &a = v[e], &b = v[(e + 1) % v.size()];
    double t = double(rng.next_u64() >> 13) * 0x1p-51;
    return Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
  }

  double halfplane_measure(const Halfplane& h) const {
    const auto& v = poly_.vertices();
    double kept = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point2 &a = v[i], &b = v[(i + 1) % v.size()];
      double da = h.normal.x * a.x + h.normal.y * a.y - h.offset;
      double db = h.normal.x * b.x + h.normal.y * b.y - h.offset;
      double len = std::hypot(b.x - a.x, b.y - a.y);
      if (da >= 0.0 && db >= 0.0) {
        kept += len;
      } else if (da > 0.0 || db > 0.0) {
        double frac = (da > 0.0 ? da : db) / (da - db == 0.0 ? 1.0 : std::fabs(da - db));
        kept += len * std::clamp(frac, 0.0, 1.0);
      }
    }
    return kept / perimeter_;
  }

 private:
  ConvexPolygon poly_;
  std::vector<double> cumulative_;
  double perimeter_ = 0.0;
};

// tagged union over the concrete measures with a uniform query surface
class MeasureHandle {
 public:
  using Variant =
      std::variant<ConcentricCircles, DropSequence, UniformDisk, PolygonBoundaryMeasure>;

  MeasureHandle(ConcentricCircles m) : v_(std::move(m)) {}
  MeasureHandle(DropSequence m) : v_(std::move(m)) {}
  MeasureHandle(UniformDisk m) : v_(std::move(m)) {}
  MeasureHandle(PolygonBoundaryMeasure m) : v_(std::move(m)) {}

  const Variant& value() const { return v_; }

  bool rotationally_symmetric() const {
    return !std::holds_alternative<PolygonBoundaryMeasure>(v_);
  }

  std::string kind_name() const {
    switch (v_.index()) {
      case 0: return "circles";
      case 1: return "drop-sequence";
      case 2: return "disk";
      default: return "polygon-boundary";
    }
  }

  double total_mass() const { return 1.0; }

  Point2 sample(TrialRng& rng) const {
    return std::visit([&](const auto& m) { return m.sample(rng); }, v_);
  }

  // (radius, angle) decomposition; only for rotationally symmetric measures
  std::pair<double, double> sample_polar(TrialRng& rng) const {
    return std::visit(
        [&](const auto& m) -> std::pair<double, double> {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                       PolygonBoundaryMeasure>)
            throw std::logic_error("sample_polar: measure is not symmetric");
          else
            return m.sample_polar(rng);
        },
        v_);
  }

  double halfplane_measure(const Halfplane& h) const {
    return std::visit([&](const auto& m) { return m.halfplane_measure(h); }, v_);
  }

  double profile(double rho) const {
    return std::visit(
        [&](const auto& m) -> double {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                       PolygonBoundaryMeasure>)
            throw std::logic_error("profile: measure is not symmetric");
          else
            return m.profile(rho);
        },
        v_);
  }

  double support_radius() const {
    return std::visit(
        [&](const auto& m) -> double {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                       PolygonBoundaryMeasure>)
            throw std::logic_error("support_radius: measure is not symmetric");
          else
            return m.support_radius();
        },
        v_);
  }

 private:
  Variant v_;
};

}  // namespace randpoly

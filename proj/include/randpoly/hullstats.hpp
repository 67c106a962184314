#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "randpoly/geom2d.hpp"
#include "randpoly/measures.hpp"
#include "randpoly/wetpart.hpp"

namespace randpoly {

// per-sample hull summary: vertex counts and the exact measure of the hull
struct HullStats {
  std::int64_t f0 = 0;      // distinct extreme points
  std::int64_t f0_bar = 0;  // sample points on the hull boundary, with multiplicity
  double hull_mass = 0.0;
  double interior_mass = 0.0;
};

namespace detail {

// closed intersection of the segment a + s(b-a), s in [0,1], with poly,
// as a parameter interval; empty comes back inverted
inline std::pair<double, double> clip_param_interval(const ConvexPolygon& poly,
                                                     const Point2& a, const Point2& b) {
  double lo = 0.0, hi = 1.0;
  const auto& v = poly.vertices();
  for (std::size_t i = 0; i < v.size() && lo <= hi; ++i) {
    const Point2 &u = v[i], &w = v[(i + 1) % v.size()];
    double ex = w.x - u.x, ey = w.y - u.y;
    double d0 = ex * (a.y - u.y) - ey * (a.x - u.x);   // >= 0 keeps the left side
    double d1 = ex * (b.y - u.y) - ey * (b.x - u.x);
    double dd = d1 - d0;
    if (dd == 0.0) {
      if (d0 < 0.0) return {1.0, 0.0};
      continue;
    }
    double s = -d0 / dd;
    if (dd > 0.0)
      lo = std::max(lo, s);
    else
      hi = std::min(hi, s);
  }
  return {lo, hi};
}

// poly has an edge lying on the line through a and b (exact predicate)
inline bool edge_on_line(const ConvexPolygon& poly, const Point2& a, const Point2& b) {
  const auto& v = poly.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 &u = v[i], &w = v[(i + 1) % v.size()];
    if (orientation_sign(a, b, u) == 0 && orientation_sign(a, b, w) == 0)
      return true;
  }
  return false;
}

template <typename CircleMeasure>
double circle_hull_mass(const CircleMeasure& m, const ConvexPolygon& poly) {
  if (poly.kind() != PolyKind::kPolygon) return 0.0;
  double acc = 0.0;
  for (const auto& l : m.layers())
    acc += l.weight * arcset_measure(circle_inside_arcs(poly, l.radius)) / kTau;
  return acc;
}

inline double boundary_hull_mass(const PolygonBoundaryMeasure& m,
                                 const ConvexPolygon& poly) {
  const auto& sv = m.polygon().vertices();
  double kept = 0.0;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    const Point2 &a = sv[i], &b = sv[(i + 1) % sv.size()];
    double len = std::hypot(b.x - a.x, b.y - a.y);
    switch (poly.kind()) {
      case PolyKind::kPolygon: {
        auto [lo, hi] = clip_param_interval(poly, a, b);
        if (hi > lo) kept += (hi - lo) * len;
        break;
      }
      case PolyKind::kSegment: {
        // a degenerate hull contributes only through 1-D overlap with an edge
        const Point2 &p = poly.vertices()[0], &q = poly.vertices()[1];
        if (orientation_sign(a, b, p) != 0 || orientation_sign(a, b, q) != 0)
          break;
        double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        double tp = ((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / len2;
        double tq = ((q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y)) / len2;
        double lo = std::max(0.0, std::min(tp, tq));
        double hi = std::min(1.0, std::max(tp, tq));
        if (hi > lo) kept += (hi - lo) * len;
        break;
      }
      default:
        break;
    }
  }
  return kept / m.perimeter();
}

inline double boundary_interior_mass(const PolygonBoundaryMeasure& m,
                                     const ConvexPolygon& poly) {
  if (poly.kind() != PolyKind::kPolygon) return 0.0;
  const auto& sv = m.polygon().vertices();
  double kept = 0.0;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    const Point2 &a = sv[i], &b = sv[(i + 1) % sv.size()];
    // an edge of poly on this support line means the clipped portion is
    // carried on the hull boundary, not its interior
    if (edge_on_line(poly, a, b)) continue;
    auto [lo, hi] = clip_param_interval(poly, a, b);
    // isolated touch points survive the closed clip as slivers; drop them
    if (hi - lo <= 1e-12) continue;
    kept += (hi - lo) * std::hypot(b.x - a.x, b.y - a.y);
  }
  return kept / m.perimeter();
}

}  // namespace detail

// measure of the closed polygon under m, in closed form
inline double hull_mass(const MeasureHandle& m, const ConvexPolygon& poly) {
  return std::visit(
      [&](const auto& mm) -> double {
        using M = std::decay_t<decltype(mm)>;
        if constexpr (std::is_same_v<M, ConcentricCircles> ||
                      std::is_same_v<M, DropSequence>) {
          return detail::circle_hull_mass(mm, poly);
        } else if constexpr (std::is_same_v<M, UniformDisk>) {
          double R = mm.radius();
          return circle_polygon_area(poly, R) / (kPi * R * R);
        } else {
          return detail::boundary_hull_mass(mm, poly);
        }
      },
      m.value());
}

// measure of the open interior; differs from hull_mass only where m carries
// mass on the polygon's boundary itself
inline double interior_mass(const MeasureHandle& m, const ConvexPolygon& poly) {
  return std::visit(
      [&](const auto& mm) -> double {
        using M = std::decay_t<decltype(mm)>;
        if constexpr (std::is_same_v<M, PolygonBoundaryMeasure>) {
          return detail::boundary_interior_mass(mm, poly);
        } else {
          // circle layers and the disk put zero mass on any line segment, so
          // the closed and open hulls weigh the same; degenerate hulls have
          // empty interior
          if (poly.kind() != PolyKind::kPolygon) return 0.0;
          return hull_mass(m, poly);
        }
      },
      m.value());
}

inline std::int64_t f0(const ConvexPolygon& hull) {
  switch (hull.kind()) {
    case PolyKind::kEmpty: return 0;
    case PolyKind::kPoint: return 1;
    case PolyKind::kSegment: return 2;
    default: return std::int64_t(hull.vertices().size());
  }
}

inline std::int64_t f0(const std::vector<Point2>& points) {
  return f0(convex_hull(points));
}

// on a degenerate hull every sample point counts as a boundary point
inline std::int64_t f0_bar(const ConvexPolygon& hull, const std::vector<Point2>& points) {
  if (hull.kind() != PolyKind::kPolygon) return std::int64_t(points.size());
  std::int64_t count = 0;
  for (const auto& p : points)
    if (locate(hull, p) == Location::kBoundary) ++count;
  return count;
}

inline std::int64_t f0_bar(const std::vector<Point2>& points) {
  return f0_bar(convex_hull(points), points);
}

inline HullStats hull_stats(const MeasureHandle& m, const std::vector<Point2>& points) {
  ConvexPolygon hull = convex_hull(points);
  HullStats s;
  s.f0 = f0(hull);
  s.f0_bar = f0_bar(hull, points);
  s.hull_mass = hull_mass(m, hull);
  s.interior_mass = interior_mass(m, hull);
  return s;
}

}  // namespace randpoly

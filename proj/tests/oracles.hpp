#pragma once

// Slow, independent reference implementations used only by the test suite.
// Everything here favours obviousness over speed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "randpoly/geom2d.hpp"

namespace oracles {

using randpoly::ConvexPolygon;
using randpoly::Location;
using randpoly::Orientation;
using randpoly::Point2;
using randpoly::PolyKind;

// exact sign of (b-a) x (c-a) for points whose coordinates are integer-valued
// doubles (|coord| < 2^62)
inline int orientation_int128(const Point2& a, const Point2& b, const Point2& c) {
  auto as_int = [](double v) {
    auto r = static_cast<long long>(v);
    if (static_cast<double>(r) != v)
      throw std::invalid_argument("orientation_int128: non-integer coordinate");
    return static_cast<__int128>(r);
  };
  __int128 det = (as_int(b.x) - as_int(a.x)) * (as_int(c.y) - as_int(a.y)) -
                 (as_int(b.y) - as_int(a.y)) * (as_int(c.x) - as_int(a.x));
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

// closed non-degenerate triangle membership, integer coordinates; collinear
// triples are rejected here (segment checks cover them)
inline bool in_triangle_int(const Point2& p, const Point2& a, const Point2& b,
                            const Point2& c) {
  if (orientation_int128(a, b, c) == 0) return false;
  int s1 = orientation_int128(a, b, p);
  int s2 = orientation_int128(b, c, p);
  int s3 = orientation_int128(c, a, p);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

inline bool on_closed_segment_int(const Point2& a, const Point2& b, const Point2& p) {
  return orientation_int128(a, b, p) == 0 && randpoly::on_closed_segment(a, b, p);
}

// extreme points of a finite set by definition: p is extreme iff it is not in
// the convex hull of the others, tested against every triangle / segment /
// point they span (Caratheodory in the plane). Integer coordinates only.
inline std::vector<Point2> extreme_points(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), randpoly::lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point2> result;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point2> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(pts[j]);
    bool covered = false;
    for (std::size_t a = 0; a < others.size() && !covered; ++a) {
      if (others[a] == pts[i]) covered = true;
      for (std::size_t b = a + 1; b < others.size() && !covered; ++b) {
        if (on_closed_segment_int(others[a], others[b], pts[i])) covered = true;
        for (std::size_t c = b + 1; c < others.size() && !covered; ++c)
          if (in_triangle_int(pts[i], others[a], others[b], others[c]))
            covered = true;
      }
    }
    if (!covered) result.push_back(pts[i]);
  }
  return result;
}

// linear-scan point location, same predicate but no search structure
inline Location locate_linear(const ConvexPolygon& poly, const Point2& x) {
  const auto& v = poly.vertices();
  switch (poly.kind()) {
    case PolyKind::kEmpty:
      return Location::kOutside;
    case PolyKind::kPoint:
      return x == v[0] ? Location::kBoundary : Location::kOutside;
    case PolyKind::kSegment:
      return (randpoly::orientation(v[0], v[1], x) == Orientation::kCollinear &&
              randpoly::on_closed_segment(v[0], v[1], x))
                 ? Location::kBoundary
                 : Location::kOutside;
    case PolyKind::kPolygon:
      break;
  }
  bool boundary = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 &a = v[i], &b = v[(i + 1) % v.size()];
    int s = randpoly::orientation_sign(a, b, x);
    if (s < 0) return Location::kOutside;
    if (s == 0) {
      if (randpoly::on_closed_segment(a, b, x))
        boundary = true;
      else
        return Location::kOutside;  // collinear with an edge but beyond it
    }
  }
  return boundary ? Location::kBoundary : Location::kInside;
}

// composite Simpson on [a,b]
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels) {
  if (panels % 2 != 0) ++panels;
  double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// area of poly intersect disk(0, R) by polar midpoint integration; requires the
// origin strictly inside poly so the radial function is single-valued
inline double polar_area(const ConvexPolygon& poly, double R, int panels = 1 << 21) {
  const auto& v = poly.vertices();
  auto ray_len = [&](double theta) {
    double cx = std::cos(theta), cy = std::sin(theta);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point2 &a = v[i], &b = v[(i + 1) % v.size()];
      double nx = b.y - a.y, ny = -(b.x - a.x);  // outward normal, CCW polygon
      double denom = nx * cx + ny * cy;
      if (denom <= 0.0) continue;  // ray does not exit through this edge
      double t = (nx * a.x + ny * a.y) / denom;
      if (t >= 0.0) best = std::min(best, t);
    }
    return best;
  };
  double h = randpoly::kTau / panels;
  double acc = 0.0;
  for (int i = 0; i < panels; ++i) {
    double r = std::min(R, ray_len((i + 0.5) * h));
    acc += 0.5 * r * r * h;
  }
  return acc;
}

// Every subset of pts cut off by some closed halfplane, found the slow way:
// sweep the boundary line onto each ordered point pair, collect the strict
// left side, then walk prefixes/suffixes of the collinear bundle to emulate
// tilting the line around it. Integer coordinates, at most 32 points.
inline std::set<std::uint32_t> halfplane_dichotomies(const std::vector<Point2>& pts) {
  const int n = int(pts.size());
  std::set<std::uint32_t> out;
  std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1;
  out.insert(0);
  out.insert(full);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || pts[i] == pts[j]) continue;
      std::uint32_t left = 0;
      std::vector<int> line;
      for (int k = 0; k < n; ++k) {
        int s = orientation_int128(pts[i], pts[j], pts[k]);
        if (s > 0)
          left |= 1u << k;
        else if (s == 0)
          line.push_back(k);
      }
      double dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
      std::sort(line.begin(), line.end(), [&](int a, int b) {
        return dx * pts[a].x + dy * pts[a].y < dx * pts[b].x + dy * pts[b].y;
      });
      for (std::size_t len = 0; len <= line.size(); ++len) {
        std::uint32_t pre = 0, suf = 0;
        for (std::size_t t = 0; t < len; ++t) {
          pre |= 1u << line[t];
          suf |= 1u << line[line.size() - 1 - t];
        }
        out.insert(left | pre);
        out.insert(left | suf);
      }
    }
  }
  return out;
}

}  // namespace oracles

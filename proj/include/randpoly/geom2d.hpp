#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace randpoly {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double xx, double yy) : x(xx), y(yy) {
    if (!(std::isfinite(xx) && std::isfinite(yy)))
      throw std::invalid_argument("Point2: coordinates must be finite");
  }
  bool operator==(const Point2&) const = default;
};

inline bool lex_less(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

enum class Orientation { kCW = -1, kCollinear = 0, kCCW = 1 };

inline constexpr double kTau = 6.283185307179586476925286766559;

// ---------------------------------------------------------------------------
// Exact sign of (b-a) x (c-a), evaluated adaptively: a cheap filtered double
// computation first, then expansion arithmetic only when the filter cannot
// certify the sign. Follows the classic adaptive-precision scheme; requires
// round-to-nearest doubles and no FMA contraction (built with -ffp-contract=off).
namespace detail {

inline constexpr double kSplitter = 134217729.0;  // 2^27 + 1
inline constexpr double kEps = 0x1p-53;
inline constexpr double kResultErrBound = (3.0 + 8.0 * kEps) * kEps;
inline constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
inline constexpr double kCcwErrBoundB = (2.0 + 12.0 * kEps) * kEps;
inline constexpr double kCcwErrBoundC = (9.0 + 64.0 * kEps) * kEps * kEps;

inline void fast_two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bv = x - a;
  y = b - bv;
}

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bv = x - a;
  double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  double bv = a - x;
  double av = x + bv;
  y = (a - av) + (bv - b);
}

inline void two_diff_tail(double a, double b, double x, double& y) {
  double bv = a - x;
  double av = x + bv;
  y = (a - av) + (bv - b);
}

inline void split(double a, double& hi, double& lo) {
  double c = kSplitter * a;
  double big = c - a;
  hi = c - big;
  lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  double ahi, alo, bhi, blo;
  split(a, ahi, alo);
  split(b, bhi, blo);
  double e1 = x - (ahi * bhi);
  double e2 = e1 - (alo * bhi);
  double e3 = e2 - (ahi * blo);
  y = (alo * blo) - e3;
}

inline void two_one_diff(double a1, double a0, double b, double& x2, double& x1,
                         double& x0) {
  double i;
  two_diff(a0, b, i, x0);
  two_sum(a1, i, x2, x1);
}

inline void two_two_diff(double a1, double a0, double b1, double b0, double& x3,
                         double& x2, double& x1, double& x0) {
  double j, t;
  two_one_diff(a1, a0, b0, j, t, x0);
  two_one_diff(j, t, b1, x3, x2, x1);
}

inline int fast_expansion_sum_zeroelim(int elen, const double* e, int flen,
                                       const double* f, double* h) {
  auto eat = [](const double* v, int i, int len) { return i < len ? v[i] : 0.0; };
  double Q, Qnew, hh;
  int eindex = 0, findex = 0, hindex = 0;
  double enow = e[0], fnow = f[0];
  if ((fnow > enow) == (fnow > -enow)) {
    Q = enow;
    enow = eat(e, ++eindex, elen);
  } else {
    Q = fnow;
    fnow = eat(f, ++findex, flen);
  }
  if ((eindex < elen) && (findex < flen)) {
    if ((fnow > enow) == (fnow > -enow)) {
      fast_two_sum(enow, Q, Qnew, hh);
      enow = eat(e, ++eindex, elen);
    } else {
      fast_two_sum(fnow, Q, Qnew, hh);
      fnow = eat(f, ++findex, flen);
    }
    Q = Qnew;
    if (hh != 0.0) h[hindex++] = hh;
    while ((eindex < elen) && (findex < flen)) {
      if ((fnow > enow) == (fnow > -enow)) {
        two_sum(Q, enow, Qnew, hh);
        enow = eat(e, ++eindex, elen);
      } else {
        two_sum(Q, fnow, Qnew, hh);
        fnow = eat(f, ++findex, flen);
      }
      Q = Qnew;
      if (hh != 0.0) h[hindex++] = hh;
    }
  }
  while (eindex < elen) {
    two_sum(Q, enow, Qnew, hh);
    enow = eat(e, ++eindex, elen);
    Q = Qnew;
    if (hh != 0.0) h[hindex++] = hh;
  }
  while (findex < flen) {
    two_sum(Q, fnow, Qnew, hh);
    fnow = eat(f, ++findex, flen);
    Q = Qnew;
    if (hh != 0.0) h[hindex++] = hh;
  }
  if ((Q != 0.0) || (hindex == 0)) h[hindex++] = Q;
  return hindex;
}

inline double orient2d_adapt(const Point2& a, const Point2& b, const Point2& c,
                             double detsum) {
  double acx = a.x - c.x, bcx = b.x - c.x;
  double acy = a.y - c.y, bcy = b.y - c.y;

  double detleft, detlefttail, detright, detrighttail;
  two_product(acx, bcy, detleft, detlefttail);
  two_product(acy, bcx, detright, detrighttail);

  double B[4];
  two_two_diff(detleft, detlefttail, detright, detrighttail, B[3], B[2], B[1], B[0]);
  double det = B[0] + B[1] + B[2] + B[3];
  double errbound = kCcwErrBoundB * detsum;
  if (det >= errbound || -det >= errbound) return det;

  double acxtail, bcxtail, acytail, bcytail;
  two_diff_tail(a.x, c.x, acx, acxtail);
  two_diff_tail(b.x, c.x, bcx, bcxtail);
  two_diff_tail(a.y, c.y, acy, acytail);
  two_diff_tail(b.y, c.y, bcy, bcytail);
  if (acxtail == 0.0 && acytail == 0.0 && bcxtail == 0.0 && bcytail == 0.0)
    return det;

  errbound = kCcwErrBoundC * detsum + kResultErrBound * std::fabs(det);
  det += (acx * bcytail + bcy * acxtail) - (acy * bcxtail + bcx * acytail);
  if (det >= errbound || -det >= errbound) return det;

  double s1, s0, t1, t0, u[4];
  two_product(acxtail, bcy, s1, s0);
  two_product(acytail, bcx, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  double C1[8];
  int c1len = fast_expansion_sum_zeroelim(4, B, 4, u, C1);

  two_product(acx, bcytail, s1, s0);
  two_product(acy, bcxtail, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  double C2[12];
  int c2len = fast_expansion_sum_zeroelim(c1len, C1, 4, u, C2);

  two_product(acxtail, bcytail, s1, s0);
  two_product(acytail, bcxtail, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  double D[16];
  int dlen = fast_expansion_sum_zeroelim(c2len, C2, 4, u, D);
  return D[dlen - 1];
}

inline double orient2d_det(const Point2& a, const Point2& b, const Point2& c) {
  double detleft = (a.x - c.x) * (b.y - c.y);
  double detright = (a.y - c.y) * (b.x - c.x);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return det;
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return det;
    detsum = -detleft - detright;
  } else {
    return det;
  }
  double errbound = kCcwErrBoundA * detsum;
  if (det >= errbound || -det >= errbound) return det;
  return orient2d_adapt(a, b, c, detsum);
}

}  // namespace detail

inline int orientation_sign(const Point2& a, const Point2& b, const Point2& c) {
  double d = detail::orient2d_det(a, b, c);
  return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
}

inline Orientation orientation(const Point2& a, const Point2& b, const Point2& c) {
  return static_cast<Orientation>(orientation_sign(a, b, c));
}

// assumes orientation(a,b,x) == collinear
inline bool on_closed_segment(const Point2& a, const Point2& b, const Point2& x) {
  return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= x.y && x.y <= std::max(a.y, b.y);
}

// ---------------------------------------------------------------------------

enum class PolyKind { kEmpty, kPoint, kSegment, kPolygon };
enum class Location { kInside, kBoundary, kOutside };

class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  static ConvexPolygon empty() { return ConvexPolygon(); }

  static ConvexPolygon single(const Point2& p) {
    ConvexPolygon r;
    r.kind_ = PolyKind::kPoint;
    r.verts_ = {p};
    return r;
  }

  static ConvexPolygon segment(const Point2& a, const Point2& b) {
    if (a == b) throw std::invalid_argument("ConvexPolygon::segment: endpoints equal");
    ConvexPolygon r;
    r.kind_ = PolyKind::kSegment;
    r.verts_ = lex_less(a, b) ? std::vector<Point2>{a, b} : std::vector<Point2>{b, a};
    return r;
  }

  // vertices in strictly convex CCW order; rotated so the lex-min vertex leads
  static ConvexPolygon from_ccw_vertices(std::vector<Point2> v) {
    if (v.size() < 3)
      throw std::invalid_argument("from_ccw_vertices: need at least 3 vertices");
    std::size_t n = v.size();
    double turn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 &a = v[i], &b = v[(i + 1) % n], &c = v[(i + 2) % n];
      if (orientation(a, b, c) != Orientation::kCCW)
        throw std::invalid_argument("from_ccw_vertices: not strictly convex CCW");
      turn += std::atan2(detailed_cross(a, b, c), detailed_dot(a, b, c));
    }
    if (std::fabs(turn - kTau) > 1e-6)
      throw std::invalid_argument("from_ccw_vertices: winding != 1");
    std::size_t lead = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (lex_less(v[i], v[lead])) lead = i;
    std::rotate(v.begin(), v.begin() + std::ptrdiff_t(lead), v.end());
    ConvexPolygon r;
    r.kind_ = PolyKind::kPolygon;
    r.verts_ = std::move(v);
    return r;
  }

  PolyKind kind() const { return kind_; }
  const std::vector<Point2>& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }

  bool operator==(const ConvexPolygon&) const = default;

 private:
  static double detailed_cross(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
  }
  static double detailed_dot(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
  }
  static ConvexPolygon raw_polygon(std::vector<Point2> v) {
    ConvexPolygon r;
    r.kind_ = PolyKind::kPolygon;
    r.verts_ = std::move(v);
    return r;
  }

  std::vector<Point2> verts_;
  PolyKind kind_ = PolyKind::kEmpty;

  friend ConvexPolygon convex_hull(std::span<const Point2>);
};

// Andrew monotone chain; strictly convex output (collinear boundary points and
// duplicates are not vertices). Starts at the lex-min vertex, CCW.
inline ConvexPolygon convex_hull(std::span<const Point2> pts) {
  std::vector<Point2> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  std::size_t n = p.size();
  if (n == 0) return ConvexPolygon::empty();
  if (n == 1) return ConvexPolygon::single(p[0]);

  auto build = [&](auto begin, auto end) {
    std::vector<Point2> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 &&
             orientation(h[h.size() - 2], h[h.size() - 1], *it) != Orientation::kCCW)
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  std::vector<Point2> lower = build(p.begin(), p.end());
  std::vector<Point2> upper = build(p.rbegin(), p.rend());

  if (lower.size() == 2 && upper.size() == 2)  // all collinear
    return ConvexPolygon::segment(lower[0], lower[1]);

  std::vector<Point2> v;
  v.reserve(lower.size() + upper.size() - 2);
  v.insert(v.end(), lower.begin(), lower.end() - 1);
  v.insert(v.end(), upper.begin(), upper.end() - 1);
  return ConvexPolygon::raw_polygon(std::move(v));
}

// exact classification; O(log n) wedge search for full-dimensional polygons
inline Location locate(const ConvexPolygon& poly, const Point2& x) {
  const auto& v = poly.vertices();
  switch (poly.kind()) {
    case PolyKind::kEmpty:
      return Location::kOutside;
    case PolyKind::kPoint:
      return x == v[0] ? Location::kBoundary : Location::kOutside;
    case PolyKind::kSegment:
      return (orientation(v[0], v[1], x) == Orientation::kCollinear &&
              on_closed_segment(v[0], v[1], x))
                 ? Location::kBoundary
                 : Location::kOutside;
    case PolyKind::kPolygon:
      break;
  }
  std::size_t n = v.size();
  int a = orientation_sign(v[0], v[1], x);
  int b = orientation_sign(v[0], v[n - 1], x);
  if (a < 0 || b > 0) return Location::kOutside;
  if (a == 0)
    return on_closed_segment(v[0], v[1], x) ? Location::kBoundary : Location::kOutside;
  if (b == 0)
    return on_closed_segment(v[0], v[n - 1], x) ? Location::kBoundary
                                                : Location::kOutside;
  std::size_t lo = 1, hi = n - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    int s = orientation_sign(v[0], v[mid], x);
    if (s > 0) {
      lo = mid;
    } else if (s < 0) {
      hi = mid;
    } else {  // on the open diagonal ray from v[0] through v[mid]
      if (x == v[mid]) return Location::kBoundary;
      return on_closed_segment(v[0], v[mid], x) ? Location::kInside
                                                : Location::kOutside;
    }
  }
  int e = orientation_sign(v[lo], v[lo + 1], x);
  if (e > 0) return Location::kInside;
  if (e == 0) return Location::kBoundary;
  return Location::kOutside;
}

// closed disk of radius r about the origin contained in the closed polygon;
// with r == 0 this is origin membership
inline bool origin_disk_in_polygon(const ConvexPolygon& poly, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("origin_disk_in_polygon: r < 0");
  if (r == 0.0) return locate(poly, Point2(0.0, 0.0)) != Location::kOutside;
  if (poly.kind() != PolyKind::kPolygon) return false;
  const auto& v = poly.vertices();
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 &u = v[i], &w = v[(i + 1) % n];
    double c = u.x * w.y - u.y * w.x;  // |uw| * signed dist(origin, line uw)
    if (c <= 0.0) return false;
    double dx = w.x - u.x, dy = w.y - u.y;
    if (c * c < r * r * (dx * dx + dy * dy)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Angular subsets of the circle of a fixed radius: sorted disjoint half-open
// intervals within [0, 2pi], no interval crossing 0. Endpoints closer than
// kAngleEps are merged so roundoff slivers vanish.

inline constexpr double kAngleEps = 1e-12;

class ArcSet {
 public:
  static ArcSet empty_set(double radius) { return ArcSet(radius, {}); }

  static ArcSet full_circle(double radius) { return ArcSet(radius, {{0.0, kTau}}); }

  static ArcSet from_intervals(double radius,
                               std::vector<std::pair<double, double>> raw) {
    std::vector<std::pair<double, double>> pieces;
    for (auto [a, b] : raw) {
      if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::invalid_argument("ArcSet: non-finite endpoint");
      double width = b - a;
      if (width <= kAngleEps) continue;
      if (width >= kTau) return full_circle(radius);
      double a0 = std::fmod(a, kTau);
      if (a0 < 0.0) a0 += kTau;
      double end = a0 + width;
      if (end <= kTau) {
        pieces.emplace_back(a0, end);
      } else {
        pieces.emplace_back(a0, kTau);
        pieces.emplace_back(0.0, end - kTau);
      }
    }
    std::sort(pieces.begin(), pieces.end());
    std::vector<std::pair<double, double>> merged;
    for (auto& pc : pieces) {
      if (!merged.empty() && pc.first <= merged.back().second + kAngleEps)
        merged.back().second = std::max(merged.back().second, pc.second);
      else
        merged.push_back(pc);
    }
    std::erase_if(merged, [](auto& m) { return m.second - m.first <= kAngleEps; });
    return ArcSet(radius, std::move(merged));
  }

  double radius() const { return radius_; }
  const std::vector<std::pair<double, double>>& arcs() const { return arcs_; }

 private:
  ArcSet(double r, std::vector<std::pair<double, double>> a)
      : radius_(r), arcs_(std::move(a)) {
    if (!(r > 0.0)) throw std::invalid_argument("ArcSet: radius must be positive");
  }

  double radius_;
  std::vector<std::pair<double, double>> arcs_;

  friend ArcSet arcset_union(const ArcSet&, const ArcSet&);
  friend ArcSet arcset_complement(const ArcSet&);
};

inline double arcset_measure(const ArcSet& s) {
  double total = 0.0;
  for (auto& [a, b] : s.arcs()) total += b - a;
  return total;
}

inline ArcSet arcset_union(const ArcSet& s, const ArcSet& t) {
  if (s.radius() != t.radius())
    throw std::invalid_argument("arcset_union: radius mismatch");
  std::vector<std::pair<double, double>> all = s.arcs();
  all.insert(all.end(), t.arcs().begin(), t.arcs().end());
  return ArcSet::from_intervals(s.radius(), std::move(all));
}

inline ArcSet arcset_complement(const ArcSet& s) {
  std::vector<std::pair<double, double>> gaps;
  double cursor = 0.0;
  for (auto& [a, b] : s.arcs()) {
    if (a > cursor) gaps.emplace_back(cursor, a);
    cursor = b;
  }
  if (cursor < kTau) gaps.emplace_back(cursor, kTau);
  return ArcSet::from_intervals(s.radius(), std::move(gaps));
}

// angles t with r*(cos t, sin t) in the closed polygon
inline ArcSet circle_inside_arcs(const ConvexPolygon& poly, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("circle_inside_arcs: r <= 0");
  if (poly.kind() != PolyKind::kPolygon) return ArcSet::empty_set(r);
  const auto& v = poly.vertices();
  std::size_t n = v.size();
  std::vector<std::pair<double, double>> excluded;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 &u = v[i], &w = v[(i + 1) % n];
    double nx = -(w.y - u.y), ny = w.x - u.x;  // inward normal of a CCW edge
    double len = std::hypot(nx, ny);
    double q = (nx * u.x + ny * u.y) / (len * r);
    if (q >= 1.0) return ArcSet::empty_set(r);
    if (q <= -1.0) continue;
    double alpha = std::acos(q);  // feasible half-width about the normal
    double phi = std::atan2(ny, nx);
    excluded.emplace_back(phi + alpha, phi + kTau - alpha);
  }
  if (excluded.empty()) return ArcSet::full_circle(r);
  return arcset_complement(ArcSet::from_intervals(r, std::move(excluded)));
}

// ---------------------------------------------------------------------------

inline double polygon_area(const ConvexPolygon& poly) {
  if (poly.kind() != PolyKind::kPolygon) return 0.0;
  const auto& v = poly.vertices();
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 &a = v[i], &b = v[(i + 1) % v.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

// area of poly intersected with the closed disk |x| <= R (origin-centred):
// per edge, the triangle fan contribution where the chord is inside the disk
// and the circular-sector contribution where it is outside
inline double circle_polygon_area(const ConvexPolygon& poly, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("circle_polygon_area: R <= 0");
  if (poly.kind() != PolyKind::kPolygon) return 0.0;
  const auto& v = poly.vertices();
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 &a = v[i], &b = v[(i + 1) % v.size()];
    double dx = b.x - a.x, dy = b.y - a.y;
    double A = dx * dx + dy * dy;
    if (A == 0.0) continue;
    double Bq = 2.0 * (a.x * dx + a.y * dy);
    double C = a.x * a.x + a.y * a.y - R * R;
    double ts[4];
    int m = 0;
    ts[m++] = 0.0;
    double disc = Bq * Bq - 4.0 * A * C;
    if (disc > 0.0) {
      double sq = std::sqrt(disc);
      double t1 = (-Bq - sq) / (2.0 * A);
      double t2 = (-Bq + sq) / (2.0 * A);
      if (t1 > 0.0 && t1 < 1.0) ts[m++] = t1;
      if (t2 > 0.0 && t2 < 1.0) ts[m++] = t2;
    }
    ts[m++] = 1.0;
    for (int k = 0; k + 1 < m; ++k) {
      double px = a.x + ts[k] * dx, py = a.y + ts[k] * dy;
      double qx = a.x + ts[k + 1] * dx, qy = a.y + ts[k + 1] * dy;
      double mx = a.x + 0.5 * (ts[k] + ts[k + 1]) * dx;
      double my = a.y + 0.5 * (ts[k] + ts[k + 1]) * dy;
      double cr = px * qy - py * qx;
      if (mx * mx + my * my <= R * R)
        total += 0.5 * cr;
      else
        total += 0.5 * R * R * std::atan2(cr, px * qx + py * qy);
    }
  }
  return total;
}

// closed halfplane {x : normal . x >= offset}, unit normal
struct Halfplane {
  Point2 normal;
  double offset;

  Halfplane(const Point2& direction, double off) : normal(0.0, 0.0), offset(off) {
    double len = std::hypot(direction.x, direction.y);
    if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(off))
      throw std::invalid_argument("Halfplane: degenerate normal or offset");
    normal = Point2(direction.x / len, direction.y / len);
    offset = off;
  }

  bool contains(const Point2& p) const {
    return normal.x * p.x + normal.y * p.y >= offset;
  }
};

// halfplane through x with outward unit normal d: {y : d . y >= d . x}
inline Halfplane halfplane_through(const Point2& x, const Point2& direction) {
  double len = std::hypot(direction.x, direction.y);
  if (!(len > 0.0)) throw std::invalid_argument("halfplane_through: zero direction");
  Point2 d(direction.x / len, direction.y / len);
  return Halfplane(d, d.x * x.x + d.y * x.y);
}

}  // namespace randpoly

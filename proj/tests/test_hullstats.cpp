#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "randpoly/hullstats.hpp"

using namespace randpoly;

namespace {

ConvexPolygon square(double half) {
  return ConvexPolygon::from_ccw_vertices({Point2(-half, -half), Point2(half, -half),
                                           Point2(half, half), Point2(-half, half)});
}

MeasureHandle triangle_boundary() {
  return MeasureHandle(PolygonBoundaryMeasure(
      ConvexPolygon::from_ccw_vertices({Point2(-1, -1), Point2(1, -1), Point2(0, 1)})));
}

}  // namespace

TEST_CASE("vertex counts on hand-picked samples", "[hullstats]") {
  CHECK(f0(std::vector<Point2>{}) == 0);
  CHECK(f0_bar(std::vector<Point2>{}) == 0);

  std::vector<Point2> one{Point2(3, 4)};
  CHECK(f0(one) == 1);
  CHECK(f0_bar(one) == 1);

  std::vector<Point2> dup{Point2(3, 4), Point2(3, 4)};
  CHECK(f0(dup) == 1);
  CHECK(f0_bar(dup) == 2);

  std::vector<Point2> tri{Point2(0, 0), Point2(4, 0), Point2(0, 3)};
  CHECK(f0(tri) == 3);
  CHECK(f0_bar(tri) == 3);

  std::vector<Point2> line{Point2(0, 0), Point2(1, 1), Point2(2, 2), Point2(3, 3)};
  CHECK(f0(line) == 2);
  CHECK(f0_bar(line) == 4);

  std::vector<Point2> sq{Point2(0, 0), Point2(2, 0), Point2(2, 2), Point2(0, 2),
                         Point2(1, 1)};
  CHECK(f0(sq) == 4);
  CHECK(f0_bar(sq) == 4);  // the centre is interior

  sq.push_back(Point2(1, 0));  // edge midpoint: boundary but not a vertex
  CHECK(f0(sq) == 4);
  CHECK(f0_bar(sq) == 5);
}

TEST_CASE("f0 equals the brute-force extreme point count", "[hullstats]") {
  TrialRng rng(515, 0);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 1 + rng.next_u64() % 12;
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i)
      pts.emplace_back(double(rng.next_u64() % 8), double(rng.next_u64() % 8));
    REQUIRE(f0(pts) == std::int64_t(oracles::extreme_points(pts).size()));
  }
}

TEST_CASE("hull mass on circle measures", "[hullstats]") {
  MeasureHandle two(two_circle_drop(0.01, 1.0, 2.0));

  // square of inradius 1.2: swallows the inner circle, misses the outer one
  CHECK(hull_mass(two, square(1.2)) == Catch::Approx(0.99).margin(1e-12));
  CHECK(hull_mass(two, square(3.0)) == Catch::Approx(1.0).margin(1e-12));
  CHECK(hull_mass(two, square(0.5)) == 0.0);
  CHECK(hull_mass(two, ConvexPolygon::empty()) == 0.0);
  CHECK(hull_mass(two, ConvexPolygon::single(Point2(0, 0))) == 0.0);
  CHECK(hull_mass(two, ConvexPolygon::segment(Point2(-3, 0), Point2(3, 0))) == 0.0);

  // half-plane-like square catches half of each circle
  auto right = ConvexPolygon::from_ccw_vertices(
      {Point2(0, -3), Point2(3, -3), Point2(3, 3), Point2(0, 3)});
  CHECK(hull_mass(two, right) == Catch::Approx(0.5).margin(1e-12));

  // interior mass coincides for circle measures on proper polygons
  CHECK(interior_mass(two, square(1.2)) == hull_mass(two, square(1.2)));
  CHECK(interior_mass(two, ConvexPolygon::segment(Point2(-3, 0), Point2(3, 0))) == 0.0);

  MeasureHandle drop((DropSequence()));
  CHECK(hull_mass(drop, square(2.0)) == Catch::Approx(1.0).margin(1e-12));
  CHECK(hull_mass(drop, square(0.3)) == 0.0);  // inradius below the first circle
}

TEST_CASE("hull mass on the disk", "[hullstats]") {
  MeasureHandle disk(UniformDisk(1.0));
  CHECK(hull_mass(disk, square(0.5)) == Catch::Approx(1.0 / kPi).epsilon(1e-13));
  CHECK(hull_mass(disk, square(2.0)) == Catch::Approx(1.0).margin(1e-12));
  CHECK(hull_mass(disk, ConvexPolygon::segment(Point2(0, 0), Point2(1, 0))) == 0.0);
  CHECK(interior_mass(disk, square(0.5)) == hull_mass(disk, square(0.5)));
  CHECK(interior_mass(disk, ConvexPolygon::empty()) == 0.0);
}

TEST_CASE("hull mass on a boundary measure", "[hullstats]") {
  MeasureHandle sqb(PolygonBoundaryMeasure(square(1.0)));

  CHECK(hull_mass(sqb, square(1.0)) == 1.0);
  CHECK(interior_mass(sqb, square(1.0)) == 0.0);

  CHECK(hull_mass(sqb, square(2.0)) == 1.0);
  CHECK(interior_mass(sqb, square(2.0)) == 1.0);  // support strictly inside

  auto right_half = ConvexPolygon::from_ccw_vertices(
      {Point2(0, -1), Point2(1, -1), Point2(1, 1), Point2(0, 1)});
  CHECK(hull_mass(sqb, right_half) == 0.5);
  CHECK(interior_mass(sqb, right_half) == 0.0);

  // degenerate hulls: only 1-D overlap with a support edge carries mass
  CHECK(hull_mass(sqb, ConvexPolygon::segment(Point2(-0.5, -1), Point2(0.5, -1))) == 0.125);
  CHECK(hull_mass(sqb, ConvexPolygon::segment(Point2(0, -1), Point2(3, -1))) == 0.125);
  CHECK(hull_mass(sqb, ConvexPolygon::segment(Point2(0, 0), Point2(0, 2))) == 0.0);
  CHECK(hull_mass(sqb, ConvexPolygon::single(Point2(1, 1))) == 0.0);
  CHECK(interior_mass(sqb, ConvexPolygon::segment(Point2(-0.5, -1), Point2(0.5, -1))) == 0.0);
}

TEST_CASE("triangle boundary samples: exact per-trial identities", "[hullstats]") {
  MeasureHandle m = triangle_boundary();
  const auto& support = std::get<PolygonBoundaryMeasure>(m.value()).polygon();
  TrialRng rng(515, 1);

  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = trial < 5 ? trial + 1 : 100;
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(m.sample(rng));
    HullStats s = hull_stats(m, pts);

    REQUIRE(s.f0_bar == std::int64_t(n));  // every point stays on the hull boundary
    REQUIRE(s.f0 <= 6);                    // at most two vertices per support edge
    REQUIRE(s.interior_mass == 0.0);       // the support never enters the open hull
    REQUIRE(s.f0 <= s.f0_bar);
    REQUIRE(s.hull_mass >= 0.0);
    REQUIRE(s.hull_mass <= 1.0);

    ConvexPolygon hull = convex_hull(pts);
    for (const auto& p : pts) REQUIRE(locate(support, p) == Location::kBoundary);
    if (hull.kind() == PolyKind::kPolygon)
      for (const auto& p : pts) REQUIRE(locate(hull, p) != Location::kOutside);
  }
}

TEST_CASE("hull mass agrees with fresh-sample membership", "[hullstats]") {
  std::vector<MeasureHandle> measures;
  measures.emplace_back(two_circle_drop(0.3, 1.0, 2.0));
  measures.emplace_back(DropSequence());
  measures.emplace_back(UniformDisk(1.5));
  measures.push_back(triangle_boundary());

  TrialRng rng(515, 2);
  const long kFresh = 200000;
  for (const auto& m : measures) {
    std::vector<Point2> pts;
    for (int i = 0; i < 60; ++i) pts.push_back(m.sample(rng));
    ConvexPolygon hull = convex_hull(pts);
    double mass = hull_mass(m, hull);
    REQUIRE(mass >= 0.0);
    REQUIRE(mass <= 1.0);

    long inside = 0;
    for (long i = 0; i < kFresh; ++i)
      if (locate(hull, m.sample(rng)) != Location::kOutside) ++inside;
    double fraction = double(inside) / kFresh;
    double sigma = std::sqrt(std::max(mass * (1.0 - mass), 1e-9) / kFresh);
    REQUIRE(std::fabs(fraction - mass) <= 4.0 * sigma);
  }
}

TEST_CASE("hull mass grows with the sample", "[hullstats]") {
  std::vector<MeasureHandle> measures;
  measures.emplace_back(two_circle_drop(0.1, 1.0, 2.0));
  measures.emplace_back(UniformDisk(1.0));
  measures.push_back(triangle_boundary());

  TrialRng rng(515, 3);
  for (const auto& m : measures) {
    std::vector<Point2> pts;
    double prev_hull = 0.0, prev_interior = 0.0;
    for (int round = 0; round < 6; ++round) {
      for (int i = 0; i < 15; ++i) pts.push_back(m.sample(rng));
      HullStats s = hull_stats(m, pts);
      REQUIRE(s.hull_mass >= prev_hull - 1e-12);
      REQUIRE(s.interior_mass >= prev_interior - 1e-12);
      REQUIRE(s.interior_mass <= s.hull_mass + 1e-15);
      REQUIRE(s.f0 <= s.f0_bar);
      REQUIRE(s.f0_bar <= std::int64_t(pts.size()));
      prev_hull = s.hull_mass;
      prev_interior = s.interior_mass;
    }
  }
}

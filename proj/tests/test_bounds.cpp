#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "randpoly/bounds.hpp"
#include "randpoly/montecarlo.hpp"
#include "randpoly/rng.hpp"
#include "oracles.hpp"

using namespace randpoly;
using Catch::Approx;

using oracles::halfplane_dichotomies;

TEST_CASE("shatter count: closed forms and edge cases", "[bounds]") {
  CHECK((shatter_halfplanes(1, 2) == uint128(2)));
  CHECK((shatter_halfplanes(4, 2) == uint128(14)));
  CHECK((shatter_halfplanes(10, 2) == uint128(2 * (1 + 9 + 36))));
  CHECK((shatter_halfplanes(10, 3) == uint128(2 * (1 + 9 + 36 + 84))));
  CHECK((shatter_halfplanes(2, 1) == uint128(4)));
  // d at or above N-1 saturates at all 2^N subsets
  CHECK((shatter_halfplanes(5, 7) == uint128(32)));
  CHECK((binomial(52, 5) == uint128(2598960)));
  CHECK((binomial(3, 9) == uint128(0)));
  CHECK_THROWS_AS(shatter_halfplanes(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(shatter_halfplanes(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(shatter_halfplanes(4000000000000000000LL, 3), std::overflow_error);
}

TEST_CASE("shatter count dominates realized dichotomies", "[bounds]") {
  // convex position with no three collinear realizes the bound exactly
  std::vector<Point2> octagon = {{10, 0}, {7, 7},   {0, 10},  {-7, 7},
                                 {-10, 0}, {-7, -7}, {0, -10}, {7, -7}};
  for (int n = 2; n <= 8; ++n) {
    std::vector<Point2> pts(octagon.begin(), octagon.begin() + n);
    auto realized = halfplane_dichotomies(pts);
    CHECK((uint128(realized.size()) == shatter_halfplanes(n, 2)));
  }

  // arbitrary integer sets (collinear triples welcome) stay at or below it
  TrialRng rng(2024, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<std::pair<int, int>> seen;
    int want = 3 + int(rng.next_u64() % 6);
    while (int(seen.size()) < want) {
      int x = int(rng.next_u64() % 13) - 6;
      int y = int(rng.next_u64() % 13) - 6;
      seen.insert({x, y});
    }
    std::vector<Point2> pts;
    for (auto [x, y] : seen) pts.push_back({double(x), double(y)});
    auto realized = halfplane_dichotomies(pts);
    REQUIRE((uint128(realized.size()) <= shatter_halfplanes(want, 2)));
  }
}

TEST_CASE("net failure bound: shape and vacuous limit", "[bounds]") {
  CHECK_THROWS_AS(kpw_failure_bound(10, 10, 0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(kpw_failure_bound(10, 0, 0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(kpw_failure_bound(10, 5, 0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(kpw_failure_bound(10, 5, 1.0, 2), std::invalid_argument);

  // tiny eps drives the exponent to -1: bound ~ 2 pi(N) / (1 - s/N), vacuous
  CHECK(kpw_failure_bound(100, 10, 1e-9, 2) > 1.0);

  // strictly decreasing in eps (base below one, exponent grows)
  double prev = kpw_failure_bound(2000, 100, 0.01, 2);
  for (double eps = 0.05; eps < 0.95; eps += 0.05) {
    double cur = kpw_failure_bound(2000, 100, eps, 2);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("net failure bound vs its closed-form relaxation", "[bounds]") {
  // the relaxation needs a nonnegative exponent; that starts at n = 3
  CHECK(theorem2_n0(2) == 3);
  CHECK(theorem2_n0(3) == 3);
  CHECK(theorem2_n0(4) == 3);

  // eps = 4 ln n / n additionally needs eps < 1, so compare from n = 9 up
  const int d = 2;
  for (std::int64_t n : {9LL, 10LL, 16LL, 32LL, 100LL, 316LL, 1000LL, 3162LL,
                         10000LL, 31623LL, 100000LL}) {
    double ln_n = std::log(double(n));
    std::int64_t N = n * std::int64_t(std::ceil(ln_n));
    double eps = double(d + 2) * ln_n / double(n);
    REQUIRE(eps < 1.0);
    double direct = kpw_failure_bound(N, n, eps, d);
    double closed = theorem2_epsilon(n, d) / double(n);
    CHECK(direct <= closed);
  }

  double direct4 = kpw_failure_bound(100000, 10000, 4.0 * std::log(1e4) / 1e4, 2);
  CHECK(direct4 < 32.0 * std::exp(1.0) * 1e-8 * 100.0);
}

TEST_CASE("explicit epsilon term", "[bounds]") {
  CHECK(theorem2_epsilon(1000000, 2) ==
        (std::exp2(5.0) * std::exp(1.0) * 196.0) / 1.0e6);
  CHECK(theorem2_epsilon(1000000, 2) == Approx(0.017049063628095128).epsilon(1e-15));
  CHECK_THROWS_AS(theorem2_epsilon(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_epsilon(100, 1), std::invalid_argument);

  for (int d = 2; d <= 4; ++d) {
    double prev = theorem2_epsilon(std::int64_t(1) << 10, d);
    for (int k = 11; k <= 60; ++k) {
      double cur = theorem2_epsilon(std::int64_t(1) << k, d);
      CHECK(cur < prev);
      prev = cur;
    }
    CHECK(theorem2_epsilon(std::int64_t(1) << 60, d) < 1e-6);
  }
}

TEST_CASE("level ledger: small rows", "[bounds]") {
  CHECK_THROWS_AS(theorem3_ledger(0), std::out_of_range);
  CHECK_THROWS_AS(theorem3_ledger(61), std::out_of_range);

  Theorem3Row r1 = theorem3_ledger(1);
  CHECK(r1.s.to_double() == 1.0);
  CHECK(r1.p.to_double() == Approx(0.75).epsilon(1e-15));
  CHECK(r1.n.to_double() == 16.0);
  CHECK(r1.ratio.to_double() == 0.25);
  CHECK_FALSE(r1.chain_check);
  CHECK_FALSE(r1.bracket_above_half);
  CHECK(r1.bracket == Approx(std::pow(0.75, 18.0)).epsilon(1e-13));

  Theorem3Row r4 = theorem3_ledger(4);
  CHECK(r4.n.to_double() == 16777216.0);
  CHECK(r4.s.to_double() == std::exp2(-14.0));
  CHECK(r4.ratio.to_double() == 24.0 / 16777216.0);
  CHECK(r4.chain_check);
  CHECK(r4.bracket_above_half);

  long double bracket4 = (1.0L - std::exp2(-16.0L)) *
                         std::exp(16777217.0L * std::log1p(-std::exp2(-30.0L)));
  CHECK(r4.bracket == Approx(double(bracket4)).epsilon(1e-13));
  CHECK(r4.bracket == 0.98448141385791055);

  // tangent measure at level 4 against a direct long double series
  long double nu4 = 0.0L;
  for (int j = 5; j <= 12; ++j) {
    long double pj = std::exp2(2.0L - std::exp2((long double)j)) *
                     (1.0L - std::exp2(-std::exp2((long double)j)));
    long double frac = std::acos((long double)DropSequence::radius(4) /
                                 (long double)DropSequence::radius(j)) /
                       3.14159265358979323846264338327950288L;
    nu4 += pj * frac;
  }
  CHECK(r4.nu_exact.to_double() == Approx(double(nu4)).epsilon(1e-12));
  CHECK(r4.nu_exact.to_double() == 8.4130531743089794e-11);
}

TEST_CASE("level ledger: chain holds from level four on", "[bounds]") {
  for (int i = 1; i <= 3; ++i) {
    Theorem3Row row = theorem3_ledger(i);
    CHECK_FALSE(row.chain_check);
    CHECK(row.bracket < 0.5);
  }
  for (int i = 4; i <= 60; ++i) {
    Theorem3Row row = theorem3_ledger(i);
    REQUIRE(row.chain_check);
    REQUIRE(row.bracket_above_half);
    REQUIRE(row.bracket > 0.5);
    REQUIRE(row.bracket <= 1.0);
    REQUIRE(row.nu_lower < row.nu_exact);
    // the ratio column really is log2(n_i)/n_i
    std::int64_t e = (std::int64_t(1) << i) + 2 * i;
    CHECK(row.ratio.log2() == Approx(std::log2(double(e)) - double(e)).epsilon(1e-12));
  }
  // brackets march to one
  CHECK(theorem3_ledger(7).bracket == 1.0);
  CHECK(theorem3_ledger(20).bracket == 1.0);
  CHECK(theorem3_ledger(60).bracket == 1.0);
}

TEST_CASE("arccos inequality", "[bounds]") {
  CHECK(arccos_inequality_check({0.0}) == 0.0);
  CHECK(arccos_inequality_check({1.0}) == Approx(std::sqrt(2.0) - kPi / 2.0));
  CHECK_THROWS_AS(arccos_inequality_check({-0.1}), std::invalid_argument);
  CHECK_THROWS_AS(arccos_inequality_check({1.1}), std::invalid_argument);

  std::vector<double> grid;
  grid.reserve(1000001);
  for (int k = 0; k <= 1000000; ++k) grid.push_back(double(k) / 1e6);
  CHECK(arccos_inequality_check(grid) <= 1e-15);
}

TEST_CASE("envelope report", "[bounds]") {
  std::vector<std::int64_t> grid = {2, 3, 10, 100, 10000, 1000000};

  auto circle = MeasureHandle(ConcentricCircles({{1.0, 1.0}}));
  BoundReport rc = theorem2_envelopes(circle, grid);
  REQUIRE(rc.rows.size() == grid.size());
  for (const auto& row : rc.rows) {
    CHECK(row.lower == 0.25);
    CHECK(row.lower <= row.upper);
    CHECK(row.failure > 0.0);
  }

  auto two = MeasureHandle(two_circle_drop(0.01, 1.0, 2.0));
  BoundReport rt = theorem2_envelopes(two, {400});
  CHECK(rt.rows[0].lower == 0.0025);

  auto drop = MeasureHandle(DropSequence());
  BoundReport rd = theorem2_envelopes(drop, {16777216});
  CHECK(rd.rows[0].lower == Approx(std::exp2(-16.0)).epsilon(1e-12));
  CHECK(rd.rows[0].upper ==
        Approx(std::exp2(-14.0) + rd.rows[0].failure).epsilon(1e-12));

  std::vector<MeasureHandle> measures;
  measures.push_back(circle);
  measures.push_back(two);
  measures.emplace_back(UniformDisk(1.0));
  measures.push_back(drop);
  for (const auto& m : measures) {
    BoundReport r = theorem2_envelopes(m, grid);
    for (const auto& row : r.rows) {
      REQUIRE(std::isfinite(row.upper));
      REQUIRE(row.lower <= row.upper);
    }
  }

  CHECK_THROWS_AS(theorem2_envelopes(circle, {}), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_envelopes(circle, {1}), std::invalid_argument);

  // the estimated missing mass threads between the envelopes
  ExperimentResult mc = estimate(two, 50, 2000, 99, Quantity::kMissingMass);
  BoundReport rb = theorem2_envelopes(two, {50});
  CHECK(mc.mean + 4.0 * mc.std_error >= rb.rows[0].lower);
  CHECK(mc.mean - 4.0 * mc.std_error <= rb.rows[0].upper);
}

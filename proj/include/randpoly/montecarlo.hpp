#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "randpoly/geom2d.hpp"
#include "randpoly/hullstats.hpp"
#include "randpoly/measures.hpp"
#include "randpoly/rng.hpp"
#include "randpoly/wetpart.hpp"

namespace randpoly {

enum class Quantity {
  kMissingMass,          // 1 - mu(P_n)
  kInteriorMissingMass,  // 1 - mu(interior P_n)
  kF0,
  kF0Bar,
  kEpsnetFailure,
};

inline const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kMissingMass: return "missing_mass";
    case Quantity::kInteriorMissingMass: return "interior_missing_mass";
    case Quantity::kF0: return "f0";
    case Quantity::kF0Bar: return "f0_bar";
    default: return "epsnet_failure";
  }
}

// compensated first and second moments; merging is order-insensitive up to
// the compensation error, so trial-parallel reductions stay deterministic
class Accumulator {
 public:
  void add(double x) {
    ++count_;
    add_compensated(sum_, comp_, x);
    add_compensated(sumsq_, compsq_, x * x);
  }

  void merge(const Accumulator& o) {
    count_ += o.count_;
    add_compensated(sum_, comp_, o.sum_);
    add_compensated(sum_, comp_, o.comp_);
    add_compensated(sumsq_, compsq_, o.sumsq_);
    add_compensated(sumsq_, compsq_, o.compsq_);
  }

  std::int64_t count() const { return count_; }
  double total() const { return sum_ + comp_; }

  double mean() const {
    if (count_ == 0) throw std::logic_error("Accumulator: empty");
    return total() / double(count_);
  }

  // sample standard deviation of the mean; 0 for a single observation
  double std_error() const {
    if (count_ == 0) throw std::logic_error("Accumulator: empty");
    if (count_ == 1) return 0.0;
    double m = mean();
    double ss = (sumsq_ + compsq_) - double(count_) * m * m;
    double var = std::max(ss, 0.0) / double(count_ - 1);
    return std::sqrt(var / double(count_));
  }

 private:
  static void add_compensated(double& s, double& c, double x) {
    double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }

  double sum_ = 0.0, comp_ = 0.0;
  double sumsq_ = 0.0, compsq_ = 0.0;
  std::int64_t count_ = 0;
};

struct ExperimentResult {
  Quantity quantity = Quantity::kMissingMass;
  std::int64_t n = 0;
  std::int64_t trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

// incremental convex hull over two monotone chains; the upper chain reuses the
// lower-chain logic on negated points
class StreamingHull {
 public:
  void add(const Point2& p) {
    ++processed_;
    bool a = add_to_chain(lower_, p);
    bool b = add_to_chain(upper_, Point2(-p.x, -p.y));
    if (a || b) ++revision_;
  }

  std::int64_t processed() const { return processed_; }
  std::int64_t revision() const { return revision_; }
  std::size_t chain_points() const { return lower_.size() + upper_.size(); }

  ConvexPolygon polygon() const {
    std::vector<Point2> pts;
    pts.reserve(chain_points());
    for (const auto& p : lower_) pts.push_back(p);
    for (const auto& p : upper_) pts.emplace_back(-p.x, -p.y);
    return convex_hull(pts);
  }

 private:
  struct LexLess {
    bool operator()(const Point2& a, const Point2& b) const { return lex_less(a, b); }
  };
  using Chain = std::set<Point2, LexLess>;

  // keep the chain a lower hull: strictly counter-clockwise consecutive turns
  static bool add_to_chain(Chain& chain, const Point2& p) {
    auto it = chain.lower_bound(p);
    if (it != chain.end() && *it == p) return false;
    if (it != chain.begin() && it != chain.end()) {
      auto pred = std::prev(it);
      if (orientation(*pred, *it, p) != Orientation::kCW) return false;  // covered
    }
    it = chain.insert(it, p);
    while (it != chain.begin()) {
      auto pred = std::prev(it);
      if (pred == chain.begin()) break;
      auto pred2 = std::prev(pred);
      if (orientation(*pred2, *pred, *it) == Orientation::kCCW) break;
      chain.erase(pred);
    }
    while (true) {
      auto succ = std::next(it);
      if (succ == chain.end()) break;
      auto succ2 = std::next(succ);
      if (succ2 == chain.end()) break;
      if (orientation(*it, *succ, *succ2) == Orientation::kCCW) break;
      chain.erase(succ);
    }
    return true;
  }

  Chain lower_, upper_;
  std::int64_t processed_ = 0;
  std::int64_t revision_ = 0;
};

namespace detail {

// distance from the origin to the nearest edge line; 0 when the origin is not
// strictly inside
inline double origin_inradius(const ConvexPolygon& poly) {
  if (poly.kind() != PolyKind::kPolygon) return 0.0;
  const auto& v = poly.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 &u = v[i], &w = v[(i + 1) % v.size()];
    double c = u.x * w.y - u.y * w.x;  // cross(u, w) = dist * |w - u| for CCW
    if (c <= 0.0) return 0.0;
    best = std::min(best, c / std::hypot(w.x - u.x, w.y - u.y));
  }
  return best;
}

// feed one trial's points into a streaming hull; symmetric measures skip
// points whose layer radius is already strictly inside the hull, which never
// changes the hull and avoids the trig for the bulk of large samples
inline ConvexPolygon sample_hull(const MeasureHandle& m, std::int64_t n, TrialRng& rng) {
  StreamingHull hull;
  if (m.rotationally_symmetric()) {
    double skip_radius = 0.0;
    std::int64_t accepted_since = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      auto [r, a] = m.sample_polar(rng);
      if (r <= skip_radius) continue;
      hull.add(Point2(r * std::cos(a), r * std::sin(a)));
      if (++accepted_since >= 4096 &&
          accepted_since >= std::int64_t(hull.chain_points())) {
        skip_radius = (1.0 - 1e-9) * origin_inradius(hull.polygon());
        accepted_since = 0;
      }
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) hull.add(m.sample(rng));
  }
  return hull.polygon();
}

inline double evaluate_trial(const MeasureHandle& m, std::int64_t n, Quantity q,
                             std::uint64_t seed, std::uint64_t trial) {
  TrialRng rng(seed, trial);
  ConvexPolygon hull = sample_hull(m, n, rng);
  switch (q) {
    case Quantity::kMissingMass:
      return 1.0 - hull_mass(m, hull);
    case Quantity::kInteriorMissingMass:
      return 1.0 - interior_mass(m, hull);
    case Quantity::kF0:
      return double(f0(hull));
    case Quantity::kF0Bar: {
      // second pass over the same stream: counter-based draws regenerate the
      // identical points without materializing them
      if (hull.kind() != PolyKind::kPolygon) return double(n);
      TrialRng replay(seed, trial);
      std::int64_t count = 0;
      for (std::int64_t i = 0; i < n; ++i)
        if (locate(hull, m.sample(replay)) == Location::kBoundary) ++count;
      return double(count);
    }
    default:
      throw std::invalid_argument("evaluate_trial: unsupported quantity");
  }
}

}  // namespace detail

inline ExperimentResult estimate(
    const MeasureHandle& m, std::int64_t n, std::int64_t trials, std::uint64_t seed,
    Quantity q, const std::function<void(std::int64_t, std::int64_t)>& progress = {}) {
  if (n < 1) throw std::invalid_argument("estimate: n < 1");
  if (n > (std::int64_t(1) << 48)) throw std::invalid_argument("estimate: n too large");
  if (trials < 1) throw std::invalid_argument("estimate: trials < 1");
  if (q == Quantity::kEpsnetFailure)
    throw std::invalid_argument("estimate: epsnet failure needs epsnet_failure_rate");
  Accumulator acc;
  for (std::int64_t t = 0; t < trials; ++t) {
    acc.add(detail::evaluate_trial(m, n, q, seed, std::uint64_t(t)));
    if (progress) progress(t + 1, trials);
  }
  return {q, n, trials, acc.mean(), acc.std_error(), seed};
}

// containment test of the dry disk at level eps: failure means the hull does
// not cover the disk of radius rho*(eps)
inline ExperimentResult epsnet_failure_rate(const MeasureHandle& m, std::int64_t n,
                                            double eps, std::int64_t trials,
                                            std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsnet: eps");
  if (n < 1) throw std::invalid_argument("epsnet: n < 1");
  if (trials < 1) throw std::invalid_argument("epsnet: trials < 1");
  if (!m.rotationally_symmetric())
    throw std::logic_error("epsnet: needs a rotationally symmetric measure");
  double rho = rho_star(m, eps);
  Accumulator acc;
  for (std::int64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, std::uint64_t(t));
    ConvexPolygon hull = detail::sample_hull(m, n, rng);
    acc.add(origin_disk_in_polygon(hull, rho) ? 0.0 : 1.0);
  }
  return {Quantity::kEpsnetFailure, n, trials, acc.mean(), acc.std_error(), seed};
}

struct EfronReport {
  std::int64_t n = 0;
  std::int64_t trials = 0;
  double count_mean = 0.0;  // E[f0(P_n)] or E[f0_bar(X_n)]
  double count_se = 0.0;
  double mass_mean = 0.0;  // E[1 - mu(P_{n-1})], interior variant optional
  double mass_se = 0.0;
  double z = 0.0;          // (count_mean - n * mass_mean) / combined se
  bool interior = false;
};

// the identity E[f0(P_n)] = n E[1 - mu(P_{n-1})], or its boundary variant
// E[f0_bar(X_n)] = n E[1 - mu(interior P_{n-1})], on independent streams
inline EfronReport efron_report(const MeasureHandle& m, std::int64_t n,
                                std::int64_t trials, std::uint64_t seed,
                                bool interior_variant = false) {
  if (n < 1) throw std::invalid_argument("efron_check: n < 1");
  Quantity count_q = interior_variant ? Quantity::kF0Bar : Quantity::kF0;
  Quantity mass_q =
      interior_variant ? Quantity::kInteriorMissingMass : Quantity::kMissingMass;
  ExperimentResult counts = estimate(m, n, trials, derive_seed(seed, 1), count_q);

  EfronReport r;
  r.n = n;
  r.trials = trials;
  r.count_mean = counts.mean;
  r.count_se = counts.std_error;
  r.mass_mean = 1.0;  // the hull of zero points misses everything
  r.mass_se = 0.0;
  r.interior = interior_variant;
  if (n > 1) {
    ExperimentResult mass = estimate(m, n - 1, trials, derive_seed(seed, 2), mass_q);
    r.mass_mean = mass.mean;
    r.mass_se = mass.std_error;
  }
  double num = r.count_mean - double(n) * r.mass_mean;
  double den = std::sqrt(r.count_se * r.count_se +
                         double(n) * double(n) * r.mass_se * r.mass_se);
  if (den == 0.0)
    r.z = num == 0.0 ? 0.0
                     : std::numeric_limits<double>::infinity() * (num > 0 ? 1.0 : -1.0);
  else
    r.z = num / den;
  return r;
}

inline double efron_check(const MeasureHandle& m, std::int64_t n, std::int64_t trials,
                          std::uint64_t seed, bool interior_variant = false) {
  return efron_report(m, n, trials, seed, interior_variant).z;
}

struct Figure1Row {
  std::int64_t n = 0;
  double wet = 0.0;         // w(1/n)
  double n_wet = 0.0;       // n * w(1/n)
  double missing_mean = 0.0;
  double missing_se = 0.0;
  double f0_mean = 0.0;
  double f0_se = 0.0;
};

inline std::vector<Figure1Row> figure1_curves(double p, double radius_ratio,
                                              const std::vector<std::int64_t>& n_grid,
                                              std::int64_t trials, std::uint64_t seed) {
  if (n_grid.empty()) throw std::invalid_argument("figure1_curves: empty n grid");
  MeasureHandle m(two_circle_drop(p, 1.0, radius_ratio));
  std::vector<Figure1Row> rows;
  rows.reserve(n_grid.size());
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    std::int64_t n = n_grid[i];
    if (n < 1) throw std::invalid_argument("figure1_curves: n < 1");
    Figure1Row row;
    row.n = n;
    row.wet = wet_measure(m, 1.0 / double(n));
    row.n_wet = double(n) * row.wet;
    ExperimentResult missing =
        estimate(m, n, trials, derive_seed(seed, 2 * i + 1), Quantity::kMissingMass);
    ExperimentResult f0s =
        estimate(m, n, trials, derive_seed(seed, 2 * i + 2), Quantity::kF0);
    row.missing_mean = missing.mean;
    row.missing_se = missing.std_error;
    row.f0_mean = f0s.mean;
    row.f0_se = f0s.std_error;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace randpoly

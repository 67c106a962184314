#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "randpoly/exact_log2.hpp"
#include "randpoly/measures.hpp"
#include "randpoly/wetpart.hpp"

namespace randpoly {

using uint128 = unsigned __int128;

namespace detail {

inline uint128 checked_mul(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("binomial: 128-bit overflow");
  return r;
}

}  // namespace detail

// exact C(n, k); zero when k out of range
inline uint128 binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint128 r = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    // r * (n-k+j) is divisible by j because r holds C(n-k+j-1, j-1)
    r = detail::checked_mul(r, uint128(n - k + j)) / uint128(j);
  }
  return r;
}

// sharp upper bound on the number of halfspace dichotomies of N points
// in d dimensions: 2 * sum_{i<=d} C(N-1, i)
inline uint128 shatter_halfplanes(std::int64_t N, int d) {
  if (N < 1 || d < 1) throw std::invalid_argument("shatter_halfplanes: N >= 1, d >= 1");
  uint128 sum = 0;
  for (int i = 0; i <= d; ++i) sum += binomial(N - 1, i);
  return detail::checked_mul(2, sum);
}

// probability bound for an s-sample failing to be an eps-net for halfspaces:
// 2 * shatter(N) * (1 - s/N)^((N-s) eps - 1), evaluated in log-space.
// Deliberately unclamped; values above 1 are vacuous but reported as-is.
inline double kpw_failure_bound(std::int64_t N, std::int64_t s, double eps, int d) {
  if (!(N > s && s >= 1)) throw std::invalid_argument("kpw_failure_bound: need N > s >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("kpw_failure_bound: eps in (0,1)");
  double ln_shatter = std::log(static_cast<long double>(shatter_halfplanes(N, d)));
  double exponent = (double(N - s) * eps - 1.0) * std::log1p(-double(s) / double(N));
  return std::exp(ln_shatter + exponent);
}

// the explicit o(1) factor in the upper envelope: with the net parameter set
// to (d+2) ln n / n and the dichotomy count bounded by N^d at N = n*ceil(ln n),
// the failure probability collapses to eps_d(n)/n with
//   eps_d(n) = 2^(d+3) * e * ceil(ln n)^d / n
inline double theorem2_epsilon(std::int64_t n, int d) {
  if (n < 2) throw std::invalid_argument("theorem2_epsilon: n >= 2");
  if (d < 2) throw std::invalid_argument("theorem2_epsilon: d >= 2");
  double cl = std::ceil(std::log(double(n)));
  return std::exp2(d + 3) * std::exp(1.0) * std::pow(cl, d) / double(n);
}

// smallest n >= 2 at which the simplification above is in force, i.e. the
// exponent (N - n) eps - 1 is nonnegative for N = n*ceil(ln n), eps = (d+2) ln n / n
inline std::int64_t theorem2_n0(int d) {
  if (d < 2) throw std::invalid_argument("theorem2_n0: d >= 2");
  for (std::int64_t n = 2;; ++n) {
    double ln_n = std::log(double(n));
    if ((std::ceil(ln_n) - 1.0) * double(d + 2) * ln_n >= 1.0) return n;
  }
}

struct Theorem2Row {
  std::int64_t n = 0;
  double lower = 0.0;    // w(1/n) / 4
  double upper = 0.0;    // w((d+2) ln n / n) + eps_d(n)/n
  double failure = 0.0;  // eps_d(n)/n
};

struct BoundReport {
  int d = 2;
  std::vector<Theorem2Row> rows;
};

inline BoundReport theorem2_envelopes(const MeasureHandle& m,
                                      const std::vector<std::int64_t>& n_grid,
                                      int d = 2) {
  if (n_grid.empty()) throw std::invalid_argument("theorem2_envelopes: empty grid");
  BoundReport report;
  report.d = d;
  report.rows.reserve(n_grid.size());
  for (std::int64_t n : n_grid) {
    if (n < 2) throw std::invalid_argument("theorem2_envelopes: n >= 2");
    Theorem2Row row;
    row.n = n;
    row.lower = 0.25 * wet_measure(m, 1.0 / double(n));
    double t_up = std::min(double(d + 2) * std::log(double(n)) / double(n), 1.0);
    row.failure = theorem2_epsilon(n, d) / double(n);
    row.upper = wet_measure(m, t_up) + row.failure;
    report.rows.push_back(row);
  }
  return report;
}

// one ledger row for level i of the drop sequence.  nu_exact is the truncated
// tangent-halfplane series; nu_lower the closed-form sqrt(2) s_{i+1} / (pi (i+1)).
// chain_check records whether log2(n_i)/n_i < s_i sqrt(2)/(pi i) <= nu(h_{i-1}),
// equivalently the scalar test 2^-i (1 + 2^(1-i) i) < sqrt(2)/(pi i) plus the
// tangent-measure comparison at level i-1.
struct Theorem3Row {
  int i = 0;
  ExactLog2 s = ExactLog2::zero();         // tail mass from level i on
  ExactLog2 p = ExactLog2::zero();         // mass of circle i alone
  ExactLog2 n = ExactLog2::zero();         // sample size 2^(2^i + 2i)
  ExactLog2 ratio = ExactLog2::zero();     // log2(n_i) / n_i
  ExactLog2 nu_exact = ExactLog2::zero();  // tangent halfplane measure at level i
  ExactLog2 nu_lower = ExactLog2::zero();  // closed-form lower bound
  double bracket = 0.0;  // (p_i/s_i)(1 - s_{i+1})^(n_i + 1)
  bool chain_check = false;
  bool bracket_above_half = false;
};

namespace detail {

inline double theorem3_bracket(int i) {
  if (i <= 9) {
    long double si_quarter = std::exp2(-(long double)(std::int64_t(1) << i));
    long double s_next = std::exp2((long double)(2 - (std::int64_t(1) << (i + 1))));
    long double count = std::exp2((long double)((std::int64_t(1) << i) + 2 * i)) + 1.0L;
    return double((1.0L - si_quarter) * std::exp(count * std::log1p(-s_next)));
  }
  // beyond the representable range both factors sit at 1 - 2^(2i+2-2^i)-ish;
  // assemble the deficit in log2 space and fold it back
  double lg = 2.0 * i + 2.0 - std::exp2(double(i)) - std::log2(std::log(2.0));
  double deficit = std::exp2(lg) + std::exp2(-std::exp2(double(i)) - std::log2(std::log(2.0)));
  return std::exp2(-deficit);
}

}  // namespace detail

inline Theorem3Row theorem3_ledger(int i) {
  if (i < 1 || i > 60) throw std::out_of_range("theorem3_ledger: i in [1,60]");
  Theorem3Row row;
  row.i = i;
  row.s = DropSequence::tail_mass_exact(i);
  row.p = DropSequence::weight_exact(i);
  std::int64_t e = (std::int64_t(1) << i) + 2 * i;
  row.n = ExactLog2::from_pow2(e);
  row.ratio = ExactLog2::from_double(double(e)) / row.n;
  row.nu_exact = DropSequence::profile_exact(i);
  row.nu_lower = DropSequence::tail_mass_exact(i + 1) *
                 ExactLog2::from_double(std::sqrt(2.0) / (kPi * (i + 1)));
  bool scalar = std::exp2(-double(i)) * (1.0 + std::exp2(1.0 - double(i)) * i) <
                std::sqrt(2.0) / (kPi * i);
  ExactLog2 mid = row.s * ExactLog2::from_double(std::sqrt(2.0) / (kPi * i));
  row.chain_check = scalar && mid <= DropSequence::profile_exact(i - 1);
  row.bracket = detail::theorem3_bracket(i);
  row.bracket_above_half = row.bracket > 0.5;
  return row;
}

// largest value of sqrt(2y) - arccos(1-y) over the grid; nonpositive (up to
// rounding) because cos x >= 1 - x^2/2
inline double arccos_inequality_check(const std::vector<double>& grid) {
  double worst = -std::numeric_limits<double>::infinity();
  for (double y : grid) {
    if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("arccos_inequality_check: y in [0,1]");
    worst = std::max(worst, std::sqrt(2.0 * y) - std::acos(1.0 - y));
  }
  return worst;
}

}  // namespace randpoly

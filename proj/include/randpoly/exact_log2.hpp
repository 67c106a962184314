#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace randpoly {

// Nonnegative real carried as 2^(ip + fr) with an exact integer part ip and
// fr in [0,1). Exact for powers of two and under multiply/divide; add/sub are
// correct to double precision in the fraction. Survives exponents far beyond
// double range (2^(-2^60) is representable).
class ExactLog2 {
 public:
  static ExactLog2 zero() { return ExactLog2(); }
  static ExactLog2 one() { return from_pow2(0); }

  static ExactLog2 from_pow2(std::int64_t k) { return ExactLog2(k, 0.0); }

  // value 2^lg; exact when lg is integral
  static ExactLog2 from_log2(double lg) {
    if (!std::isfinite(lg)) throw std::invalid_argument("ExactLog2: non-finite log");
    double ip = std::floor(lg);
    return ExactLog2(static_cast<std::int64_t>(ip), lg - ip);
  }

  static ExactLog2 from_double(double v) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("ExactLog2: need a finite nonnegative value");
    if (v == 0.0) return zero();
    int e;
    double m = std::frexp(v, &e);  // v = m * 2^e, m in [0.5, 1)
    return ExactLog2(e - 1, std::log2(2.0 * m));
  }

  bool is_zero() const { return zero_; }

  // log2 of the value; fraction precision only, -inf for zero
  double log2() const {
    if (zero_) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(ip_) + fr_;
  }

  std::int64_t exponent_floor() const {
    if (zero_) throw std::domain_error("ExactLog2: zero has no exponent");
    return ip_;
  }
  double fraction() const { return zero_ ? 0.0 : fr_; }

  // underflows to 0 and overflows to +inf
  double to_double() const {
    if (zero_) return 0.0;
    if (ip_ < -1200) return 0.0;
    if (ip_ > 1200) return std::numeric_limits<double>::infinity();
    return std::ldexp(std::exp2(fr_), static_cast<int>(ip_));
  }

  ExactLog2 operator*(const ExactLog2& o) const {
    if (zero_ || o.zero_) return zero();
    return normalized(ip_ + o.ip_, fr_ + o.fr_);
  }

  ExactLog2 operator/(const ExactLog2& o) const {
    if (o.zero_) throw std::domain_error("ExactLog2: division by zero");
    if (zero_) return zero();
    return normalized(ip_ - o.ip_, fr_ - o.fr_);
  }

  ExactLog2 operator+(const ExactLog2& o) const {
    if (zero_) return o;
    if (o.zero_) return *this;
    const ExactLog2 &big = (*this < o) ? o : *this, &small = (*this < o) ? *this : o;
    double delta = static_cast<double>(small.ip_ - big.ip_) + (small.fr_ - big.fr_);
    double bump = std::log1p(std::exp2(delta)) * kInvLn2;  // log2(1 + 2^delta)
    return normalized(big.ip_, big.fr_ + bump);
  }

  // requires *this >= o
  ExactLog2 operator-(const ExactLog2& o) const {
    if (o.zero_) return *this;
    if (*this < o) throw std::domain_error("ExactLog2: negative difference");
    if (*this == o) return zero();
    double delta = static_cast<double>(o.ip_ - ip_) + (o.fr_ - fr_);
    double ratio = std::exp2(delta);  // in (0, 1]
    if (ratio >= 1.0) return zero();  // equal up to fraction roundoff
    double bump = std::log1p(-ratio) * kInvLn2;
    return normalized(ip_, fr_ + bump);
  }

  friend bool operator==(const ExactLog2& a, const ExactLog2& b) {
    if (a.zero_ || b.zero_) return a.zero_ && b.zero_;
    return a.ip_ == b.ip_ && a.fr_ == b.fr_;
  }

  friend std::strong_ordering operator<=>(const ExactLog2& a, const ExactLog2& b) {
    if (a.zero_ || b.zero_)
      return (a.zero_ ? 0 : 1) <=> (b.zero_ ? 0 : 1);
    if (a.ip_ != b.ip_) return a.ip_ <=> b.ip_;
    if (a.fr_ < b.fr_) return std::strong_ordering::less;
    if (a.fr_ > b.fr_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  ExactLog2() = default;
  ExactLog2(std::int64_t ip, double fr) : zero_(false), ip_(ip), fr_(fr) {}

  static ExactLog2 normalized(std::int64_t ip, double fr) {
    double carry = std::floor(fr);
    return ExactLog2(ip + static_cast<std::int64_t>(carry), fr - carry);
  }

  static constexpr double kInvLn2 = 1.4426950408889634073599246810019;

  bool zero_ = true;
  std::int64_t ip_ = 0;
  double fr_ = 0.0;
};

}  // namespace randpoly

#pragma once

#include <span>
#include <string>

#include "flagmet/numeric.hpp"

namespace flagmet {

/*
 * Closed interval [lo, hi] with exact rational endpoints. Arithmetic is
 * exact on the endpoints, so enclosures need no outward rounding; the only
 * irrational step (a d-th root) goes through MPFR with directed rounding.
 * A degenerate interval represents an exact rational value.
 */
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(const Rational& v) : lo_(v), hi_(v) {}  // NOLINT(implicit)
  Interval(const Integer& v) : lo_(v), hi_(v) {}   // NOLINT(implicit)
  Interval(long v) : lo_(v), hi_(v) {}             // NOLINT(implicit)
  Interval(int v) : lo_(v), hi_(v) {}              // NOLINT(implicit)
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool is_exact() const { return lo_ == hi_; }
  bool is_positive() const { return lo_ > 0; }
  bool is_negative() const { return hi_ < 0; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return contains(Rational(0)); }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  /// max |v| over the interval.
  Rational magnitude() const;

  /// Smallest interval containing both.
  Interval hull(const Interval& o) const;
  /// Outward rounding of both endpoints to multiples of 2^-bits, which keeps
  /// printed rationals short. Exact values are returned unchanged.
  Interval coarsened(unsigned bits) const;

  Interval operator-() const { return {-hi_, -lo_}; }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  /// Throws UncertifiedSign if the divisor contains zero.
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Rational lo_;
  Rational hi_;
};

Interval pow(const Interval& x, unsigned e);

/// Enclosure of (prod x_i^{w_i})^(1 / sum w_i) for positive x_i. Lower and
/// upper endpoints are computed with MPFR rounding toward -inf / +inf
/// respectively at `precision_bits`.
Interval weighted_geometric_mean(std::span<const Interval> x, std::span<const long> weights,
                                 unsigned precision_bits = 256);

/// Enclosure of sqrt(v) for a nonnegative rational.
Interval sqrt_enclosure(const Rational& v, unsigned precision_bits = 256);

std::string to_string(const Interval& x);

}  // namespace flagmet

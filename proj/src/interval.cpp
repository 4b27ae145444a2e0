#include "flagmet/interval.hpp"

#include <mpfr.h>

#include <algorithm>

#include "flagmet/error.hpp"

namespace flagmet {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw Error(ErrorKind::InvalidParams, "interval with lo > hi");
}

Rational Interval::magnitude() const { return std::max(abs(lo_), abs(hi_)); }

Interval Interval::hull(const Interval& o) const { return {std::min(lo_, o.lo_), std::max(hi_, o.hi_)}; }

Interval Interval::coarsened(unsigned bits) const {
  if (is_exact()) return *this;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rational s(scale);
  Integer l = floor_of(lo_ * s);
  Integer h = ceil_of(hi_ * s);
  return {make_rational(l, scale), make_rational(h, scale)};
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational l = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(l);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw Error(ErrorKind::UncertifiedSign, "interval divisor " + to_string(o) + " contains 0");
  Rational a = lo_ / o.lo_, b = lo_ / o.hi_, c = hi_ / o.lo_, d = hi_ / o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval pow(const Interval& x, unsigned e) {
  Interval r(1);
  for (unsigned i = 0; i < e; ++i) r *= x;
  if (e % 2 == 0 && x.contains_zero()) return {Rational(0), r.hi()};
  return r;
}

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(unsigned bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Directed d-th root of a positive rational, returned as an exact rational.
Rational directed_root(const Rational& v, unsigned long d, mpfr_rnd_t mode, unsigned bits) {
  MpfrValue x(bits);
  mpfr_set_q(x.get(), v.get_mpq_t(), mode);
  mpfr_rootn_ui(x.get(), x.get(), d, mode);
  Rational out;
  mpfr_get_q(out.get_mpq_t(), x.get());
  return out;
}

}  // namespace

Interval weighted_geometric_mean(std::span<const Interval> x, std::span<const long> weights, unsigned precision_bits) {
  if (x.size() != weights.size() || x.empty())
    throw Error(ErrorKind::DimensionMismatch, "geometric mean needs one weight per value");
  Rational lo(1), hi(1);
  long total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_positive()) throw Error(ErrorKind::UncertifiedSign, "geometric mean of a non-positive value");
    if (weights[i] < 0) throw Error(ErrorKind::InvalidParams, "negative weight");
    Interval p = pow(x[i], static_cast<unsigned>(weights[i]));
    lo *= p.lo();
    hi *= p.hi();
    total += weights[i];
  }
  if (total == 0) throw Error(ErrorKind::InvalidParams, "weights sum to zero");
  auto d = static_cast<unsigned long>(total);
  return {directed_root(lo, d, MPFR_RNDD, precision_bits), directed_root(hi, d, MPFR_RNDU, precision_bits)};
}

Interval sqrt_enclosure(const Rational& v, unsigned precision_bits) {
  if (v < 0) throw Error(ErrorKind::InvalidParams, "square root of a negative value");
  if (v == 0) return Interval(0);
  return {directed_root(v, 2, MPFR_RNDD, precision_bits), directed_root(v, 2, MPFR_RNDU, precision_bits)};
}

std::string to_string(const Interval& x) {
  return "[" + to_fraction_string(x.lo()) + ", " + to_fraction_string(x.hi()) + "]";
}

}  // namespace flagmet

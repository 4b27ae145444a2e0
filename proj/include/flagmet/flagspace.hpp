#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "flagmet/interval.hpp"
#include "flagmet/numeric.hpp"

namespace flagmet {

/// The pair (n, p) for SO(2n)/U(p)xU(n-p); requires n >= 4, 2 <= p <= n-2.
class FlagParams {
 public:
  FlagParams(long n, long p);

  long n() const { return n_; }
  long p() const { return p_; }
  /// (n, n - p)
  FlagParams dual() const { return {n_, n_ - p_}; }

  friend bool operator==(const FlagParams&, const FlagParams&) = default;
  friend auto operator<=>(const FlagParams&, const FlagParams&) = default;

 private:
  long n_;
  long p_;
};

struct IsotropyData {
  std::array<long, 4> d{};
  Rational c123;
  Rational c134;
  long total = 0;
};

IsotropyData isotropy_data(const FlagParams& fp);

/// Invariant metric (x1, x2, x3, x4); every component is certified positive.
class Metric {
 public:
  explicit Metric(std::array<Interval, 4> x);
  static Metric exact(const Rational& x1, const Rational& x2, const Rational& x3, const Rational& x4);

  const std::array<Interval, 4>& x() const { return x_; }
  const Interval& operator[](std::size_t i) const { return x_[i]; }
  bool is_exact() const;
  /// Component values; only meaningful when is_exact().
  std::array<Rational, 4> exact_values() const;

  Metric scaled(const Rational& t) const;

 private:
  std::array<Interval, 4> x_;
};

using RicciComponents = std::array<Interval, 4>;

RicciComponents ricci_components(const IsotropyData& data, const Metric& g);

/// Fully symmetric table [ijk], indexed from 0.
class TripleTable {
 public:
  explicit TripleTable(std::size_t s);

  std::size_t size() const { return s_; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return v_[(i * s_ + j) * s_ + k]; }
  /// Sets all six permutations of (i, j, k).
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

 private:
  std::size_t s_;
  std::vector<Rational> v_;
};

/// The s-summand Ricci formula for arbitrary dims and triples.
std::vector<Interval> general_ricci(const std::vector<long>& dims, const TripleTable& triples,
                                    const std::vector<Interval>& x);

/// The 4-summand table of this family: [123] and [134] plus symmetries.
TripleTable flag_triples(const IsotropyData& data);

Interval scalar_curvature(const IsotropyData& data, const Metric& g);

/// H_g = (prod x_i^{d_i})^{1/d} * S_g.
Interval scale_invariant(const IsotropyData& data, const Metric& g, unsigned precision_bits = 256);

struct LabeledMetric {
  Metric metric;
  std::string label;
};

/// g1, g2 for n != 2p; the single metric labeled "unique" for n = 2p.
std::vector<LabeledMetric> kahler_einstein_metrics(const FlagParams& fp);

/// ((n, n-p), (x1, x4, x3, x2)).
std::pair<FlagParams, Metric> dual_map(const FlagParams& fp, const Metric& g);

}  // namespace flagmet

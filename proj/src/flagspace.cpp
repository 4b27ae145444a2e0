#include "flagmet/flagspace.hpp"

#include "flagmet/error.hpp"

namespace flagmet {

FlagParams::FlagParams(long n, long p) : n_(n), p_(p) {
  if (n < 4) throw Error(ErrorKind::InvalidParams, "n must be >= 4, got n = " + std::to_string(n));
  if (p < 2 || p > n - 2)
    throw Error(ErrorKind::InvalidParams,
                "p must satisfy 2 <= p <= n-2, got (n, p) = (" + std::to_string(n) + ", " + std::to_string(p) + ")");
}

IsotropyData isotropy_data(const FlagParams& fp) {
  const long n = fp.n(), p = fp.p();
  IsotropyData data;
  data.d = {2 * p * (n - p), (n - p) * (n - p - 1), 2 * p * (n - p), p * (p - 1)};
  data.c123 = make_rational(Integer(p) * (n - p) * (n - p - 1), Integer(2) * (n - 1));
  data.c134 = make_rational(Integer(p) * (p - 1) * (n - p), Integer(2) * (n - 1));
  data.total = data.d[0] + data.d[1] + data.d[2] + data.d[3];
  return data;
}

Metric::Metric(std::array<Interval, 4> x) : x_(std::move(x)) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!x_[i].is_positive())
      throw Error(ErrorKind::UncertifiedSign,
                  "metric component x" + std::to_string(i + 1) + " = " + to_string(x_[i]) + " is not certified positive");
  }
}

Metric Metric::exact(const Rational& x1, const Rational& x2, const Rational& x3, const Rational& x4) {
  return Metric({Interval(x1), Interval(x2), Interval(x3), Interval(x4)});
}

bool Metric::is_exact() const {
  for (const auto& c : x_)
    if (!c.is_exact()) return false;
  return true;
}

std::array<Rational, 4> Metric::exact_values() const { return {x_[0].lo(), x_[1].lo(), x_[2].lo(), x_[3].lo()}; }

Metric Metric::scaled(const Rational& t) const {
  std::array<Interval, 4> y;
  for (std::size_t i = 0; i < 4; ++i) y[i] = x_[i] * Interval(t);
  return Metric(y);
}

RicciComponents ricci_components(const IsotropyData& data, const Metric& g) {
  const Interval& x1 = g[0];
  const Interval& x2 = g[1];
  const Interval& x3 = g[2];
  const Interval& x4 = g[3];
  const Interval half(Rational(1, 2));
  auto coef = [](const Rational& c, long d) { return Interval(c / (2 * d)); };
  Interval r1 = half / x1 + coef(data.c123, data.d[0]) * (x1 / (x2 * x3) - x2 / (x1 * x3) - x3 / (x1 * x2)) +
                coef(data.c134, data.d[0]) * (x1 / (x3 * x4) - x4 / (x1 * x3) - x3 / (x1 * x4));
  Interval r2 = half / x2 + coef(data.c123, data.d[1]) * (x2 / (x1 * x3) - x1 / (x2 * x3) - x3 / (x1 * x2));
  Interval r3 = half / x3 + coef(data.c123, data.d[2]) * (x3 / (x1 * x2) - x2 / (x1 * x3) - x1 / (x2 * x3)) +
                coef(data.c134, data.d[2]) * (x3 / (x1 * x4) - x4 / (x1 * x3) - x1 / (x3 * x4));
  Interval r4 = half / x4 + coef(data.c134, data.d[3]) * (x4 / (x1 * x3) - x3 / (x1 * x4) - x1 / (x3 * x4));
  return {r1, r2, r3, r4};
}

TripleTable::TripleTable(std::size_t s) : s_(s), v_(s * s * s, Rational(0)) {}

void TripleTable::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= s_ || j >= s_ || k >= s_) throw Error(ErrorKind::DimensionMismatch, "triple index out of range");
  if (value < 0) throw Error(ErrorKind::InvalidParams, "triples must be nonnegative");
  const std::size_t idx[3] = {i, j, k};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& pm : perms) v_[(idx[pm[0]] * s_ + idx[pm[1]]) * s_ + idx[pm[2]]] = value;
}

std::vector<Interval> general_ricci(const std::vector<long>& dims, const TripleTable& triples,
                                    const std::vector<Interval>& x) {
  const std::size_t s = dims.size();
  if (x.size() != s || triples.size() != s)
    throw Error(ErrorKind::DimensionMismatch, "dims, triples and metric must have the same size");
  for (std::size_t k = 0; k < s; ++k) {
    if (dims[k] <= 0) throw Error(ErrorKind::InvalidParams, "dimensions must be positive");
    if (!x[k].is_positive()) throw Error(ErrorKind::UncertifiedSign, "metric components must be positive");
  }
  std::vector<Interval> r;
  r.reserve(s);
  for (std::size_t k = 0; k < s; ++k) {
    Interval plus(0), minus(0);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        const Rational& t = triples.at(i, j, k);
        if (t == 0) continue;
        plus += Interval(t) * x[k] / (x[i] * x[j]);
        // [kij] == [ijk] by symmetry.
        minus += Interval(t) * x[j] / (x[k] * x[i]);
      }
    }
    r.push_back(Interval(Rational(1, 2)) / x[k] + Interval(make_rational(1, Integer(4) * dims[k])) * plus -
                Interval(make_rational(1, Integer(2) * dims[k])) * minus);
  }
  return r;
}

TripleTable flag_triples(const IsotropyData& data) {
  TripleTable t(4);
  t.set(0, 1, 2, data.c123);
  t.set(0, 2, 3, data.c134);
  return t;
}

Interval scalar_curvature(const IsotropyData& data, const Metric& g) {
  const Interval& x1 = g[0];
  const Interval& x2 = g[1];
  const Interval& x3 = g[2];
  const Interval& x4 = g[3];
  Interval sum(0);
  for (std::size_t i = 0; i < 4; ++i) sum += Interval(data.d[i]) / g[i];
  Interval half(Rational(1, 2));
  return half * sum - Interval(data.c123 / 2) * (x1 / (x2 * x3) + x2 / (x1 * x3) + x3 / (x1 * x2)) -
         Interval(data.c134 / 2) * (x1 / (x3 * x4) + x3 / (x1 * x4) + x4 / (x1 * x3));
}

Interval scale_invariant(const IsotropyData& data, const Metric& g, unsigned precision_bits) {
  std::array<long, 4> w = data.d;
  Interval volume_root = weighted_geometric_mean(g.x(), w, precision_bits);
  return volume_root * scalar_curvature(data, g);
}

std::vector<LabeledMetric> kahler_einstein_metrics(const FlagParams& fp) {
  const Rational n(fp.n()), p(fp.p());
  if (fp.n() == 2 * fp.p()) return {{Metric::exact(p, p - 1, 2 * p - 1, 3 * p - 1), "unique"}};
  Rational half_n = n / 2;
  return {
      {Metric::exact(half_n, n + p - 1, half_n + p - 1, p - 1), "g1"},
      {Metric::exact(half_n, n - p - 1, 3 * half_n - p - 1, 2 * n - p - 1), "g2"},
  };
}

std::pair<FlagParams, Metric> dual_map(const FlagParams& fp, const Metric& g) {
  return {fp.dual(), Metric({g[0], g[3], g[2], g[1]})};
}

}  // namespace flagmet

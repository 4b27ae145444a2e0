#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagmet/error.hpp"
#include "flagmet/flagspace.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace flagmet;
using flagmet::testing::ratio;

namespace {

// Oracle: the specialized Ricci components written out again, exact rationals.
std::array<Rational, 4> ricci_oracle(long n, long p, const std::array<Rational, 4>& x) {
  const Rational d1(2 * p * (n - p)), d2((n - p) * (n - p - 1)), d3 = d1, d4(p * (p - 1));
  const Rational a = ratio(p * (n - p) * (n - p - 1), 2 * (n - 1)), b = ratio(p * (p - 1) * (n - p), 2 * (n - 1));
  const auto& [x1, x2, x3, x4] = x;
  std::array<Rational, 4> r;
  r[0] = 1 / (2 * x1) + a / (2 * d1) * (x1 / (x2 * x3) - x2 / (x1 * x3) - x3 / (x1 * x2)) +
         b / (2 * d1) * (x1 / (x3 * x4) - x4 / (x1 * x3) - x3 / (x1 * x4));
  r[1] = 1 / (2 * x2) + a / (2 * d2) * (x2 / (x1 * x3) - x1 / (x2 * x3) - x3 / (x1 * x2));
  r[2] = 1 / (2 * x3) + a / (2 * d3) * (x3 / (x1 * x2) - x2 / (x1 * x3) - x1 / (x2 * x3)) +
         b / (2 * d3) * (x3 / (x1 * x4) - x4 / (x1 * x3) - x1 / (x3 * x4));
  r[3] = 1 / (2 * x4) + b / (2 * d4) * (x4 / (x1 * x3) - x1 / (x3 * x4) - x3 / (x1 * x4));
  for (auto& v : r) v.canonicalize();
  return r;
}

Rational scalar_oracle(long n, long p, const std::array<Rational, 4>& x) {
  const long d[4] = {2 * p * (n - p), (n - p) * (n - p - 1), 2 * p * (n - p), p * (p - 1)};
  const Rational a = ratio(p * (n - p) * (n - p - 1), 2 * (n - 1)), b = ratio(p * (p - 1) * (n - p), 2 * (n - 1));
  const auto& [x1, x2, x3, x4] = x;
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += Rational(d[i]) / (2 * x[i]);
  s -= a / 2 * (x1 / (x2 * x3) + x2 / (x1 * x3) + x3 / (x1 * x2));
  s -= b / 2 * (x1 / (x3 * x4) + x3 / (x1 * x4) + x4 / (x1 * x3));
  return s;
}

Metric from(const std::array<Rational, 4>& x) { return Metric::exact(x[0], x[1], x[2], x[3]); }

}  // namespace

TEST_CASE("FlagParams validation") {
  CHECK_THROWS_AS(FlagParams(3, 2), Error);
  CHECK_THROWS_AS(FlagParams(7, 1), Error);
  CHECK_THROWS_AS(FlagParams(7, 6), Error);
  try {
    FlagParams(3, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParams);
  }
  CHECK(FlagParams(7, 3).dual() == FlagParams(7, 4));
}

TEST_CASE("isotropy data") {
  IsotropyData a = isotropy_data(FlagParams(7, 3));
  CHECK(a.d == std::array<long, 4>{24, 12, 24, 6});
  CHECK(a.c123 == 3);
  CHECK(a.c134 == 2);
  CHECK(a.total == 66);
  IsotropyData b = isotropy_data(FlagParams(7, 4));
  CHECK(b.d == std::array<long, 4>{24, 6, 24, 12});
  CHECK(b.c123 == 2);
  CHECK(b.c134 == 3);
  IsotropyData c = isotropy_data(FlagParams(4, 2));
  CHECK(c.d == std::array<long, 4>{8, 2, 8, 2});
  CHECK(c.c123 == Rational(2, 3));
  CHECK(c.c134 == Rational(2, 3));
}

TEST_CASE("dimension identity up to n = 60 and duality of isotropy data") {
  for (long n = 4; n <= 60; ++n) {
    for (long p = 2; p <= n - 2; ++p) {
      IsotropyData a = isotropy_data(FlagParams(n, p));
      CHECK(a.d[0] + a.d[1] + a.d[2] + a.d[3] == n * (2 * n - 1) - p * p - (n - p) * (n - p));
      CHECK(a.total == n * (2 * n - 1) - p * p - (n - p) * (n - p));
      IsotropyData b = isotropy_data(FlagParams(n, n - p));
      CHECK(a.d[1] == b.d[3]);
      CHECK(a.d[3] == b.d[1]);
      CHECK(a.c123 == b.c134);
      CHECK(a.c134 == b.c123);
    }
  }
}

TEST_CASE("metrics must be positive") {
  CHECK_THROWS_AS(Metric::exact(1, 0, 1, 1), Error);
  CHECK_THROWS_AS(Metric({Interval(1), Interval(Rational(-1), Rational(1)), Interval(1), Interval(1)}), Error);
}

TEST_CASE("Ricci components") {
  const IsotropyData data = isotropy_data(FlagParams(7, 3));
  SUBCASE("g1 at (7,3) is Einstein with constant 1/12") {
    RicciComponents r = ricci_components(data, Metric::exact(Rational(7, 2), 9, Rational(11, 2), 2));
    for (const auto& c : r) CHECK(c == Interval(Rational(1, 12)));
    CHECK(ricci_oracle(7, 3, {Rational(7, 2), 9, Rational(11, 2), 2})[1] == Rational(1, 12));
  }
  SUBCASE("unit metric") {
    RicciComponents r = ricci_components(data, Metric::exact(1, 1, 1, 1));
    CHECK(r[1] == Interval(Rational(3, 8)));
    auto oracle = ricci_oracle(7, 3, {1, 1, 1, 1});
    for (int i = 0; i < 4; ++i) CHECK(r[i] == Interval(oracle[i]));
  }
  SUBCASE("random metrics against the oracle") {
    flagmet::testing::Rng rng(5);
    for (int k = 0; k < 100; ++k) {
      long n = flagmet::testing::uniform(rng, 4, 25), p = flagmet::testing::uniform(rng, 2, n - 2);
      std::array<Rational, 4> x;
      for (auto& v : x) v = flagmet::testing::random_positive_rational(rng, 50, 9);
      RicciComponents r = ricci_components(isotropy_data(FlagParams(n, p)), from(x));
      auto oracle = ricci_oracle(n, p, x);
      for (int i = 0; i < 4; ++i) CHECK(r[i] == Interval(oracle[i]));
    }
  }
}

TEST_CASE("general Ricci formula") {
  SUBCASE("single summand, no triples") {
    TripleTable t(1);
    auto r = general_ricci({10}, t, {Interval(1)});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == Interval(Rational(1, 2)));
  }
  SUBCASE("reproduces the specialized components") {
    flagmet::testing::Rng rng(11);
    for (int k = 0; k < 60; ++k) {
      long n = flagmet::testing::uniform(rng, 4, 25), p = flagmet::testing::uniform(rng, 2, n - 2);
      IsotropyData data = isotropy_data(FlagParams(n, p));
      std::array<Rational, 4> x;
      for (auto& v : x) v = flagmet::testing::random_positive_rational(rng, 50, 9);
      Metric g = from(x);
      auto general = general_ricci({data.d.begin(), data.d.end()}, flag_triples(data), {g.x().begin(), g.x().end()});
      RicciComponents special = ricci_components(data, g);
      for (int i = 0; i < 4; ++i) CHECK(general[i] == special[i]);
    }
  }
  SUBCASE("errors") {
    TripleTable t(2);
    CHECK_THROWS_AS(general_ricci({1, 2}, t, {Interval(1)}), Error);
    CHECK_THROWS_AS(t.set(0, 1, 1, Rational(-1)), Error);
    t.set(0, 1, 1, Rational(3));
    CHECK(t.at(1, 1, 0) == 3);
    CHECK(t.at(1, 0, 1) == 3);
  }
}

TEST_CASE("scalar curvature") {
  const IsotropyData data = isotropy_data(FlagParams(7, 3));
  CHECK(scalar_curvature(data, Metric::exact(Rational(7, 2), 9, Rational(11, 2), 2)) == Interval(Rational(11, 2)));
  CHECK(scalar_oracle(7, 3, {1, 1, 1, 1}) == Rational(51, 2));
  CHECK(scalar_curvature(data, Metric::exact(1, 1, 1, 1)) == Interval(Rational(51, 2)));
  flagmet::testing::Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    long n = flagmet::testing::uniform(rng, 4, 25), p = flagmet::testing::uniform(rng, 2, n - 2);
    IsotropyData d = isotropy_data(FlagParams(n, p));
    std::array<Rational, 4> x;
    for (auto& v : x) v = flagmet::testing::random_positive_rational(rng, 50, 9);
    Interval s = scalar_curvature(d, from(x));
    CHECK(s == Interval(scalar_oracle(n, p, x)));
    RicciComponents r = ricci_components(d, from(x));
    Interval sum(0);
    for (int i = 0; i < 4; ++i) sum += Interval(Rational(d.d[i])) * r[i];
    CHECK(sum == s);
  }
}

TEST_CASE("scale invariant") {
  SUBCASE("Kahler-Einstein metric: H = e d V^(1/d)") {
    const IsotropyData data = isotropy_data(FlagParams(7, 3));
    Interval h = scale_invariant(data, Metric::exact(Rational(7, 2), 9, Rational(11, 2), 2));
    CHECK(h.width() < Rational(1, 1000000000));
    CHECK(round_half_even(h.midpoint(), 4) == "25.6032");
  }
  SUBCASE("homogeneity of r, S and H") {
    auto r = flagmet::testing::homogeneity(31337, 100);
    INFO(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("Kahler-Einstein metrics") {
  auto ke = kahler_einstein_metrics(FlagParams(7, 3));
  REQUIRE(ke.size() == 2);
  CHECK(ke[0].metric.exact_values() == std::array<Rational, 4>{Rational(7, 2), 9, Rational(11, 2), 2});
  CHECK(ke[1].metric.exact_values() == std::array<Rational, 4>{Rational(7, 2), 3, Rational(13, 2), 10});
  auto single = kahler_einstein_metrics(FlagParams(8, 4));
  REQUIRE(single.size() == 1);
  CHECK(single[0].metric.exact_values() == std::array<Rational, 4>{4, 3, 7, 11});
  for (long n = 4; n <= 30; ++n) {
    for (long p = 2; p <= n - 2; ++p) {
      FlagParams fp(n, p);
      for (const auto& m : kahler_einstein_metrics(fp)) {
        auto r = ricci_oracle(n, p, m.metric.exact_values());
        CHECK(r[0] == r[1]);
        CHECK(r[1] == r[2]);
        CHECK(r[2] == r[3]);
      }
    }
  }
}

TEST_CASE("duality map") {
  const FlagParams fp(7, 3);
  Metric g = Metric::exact(1, ratio(7256, 10000), 1, ratio(4661, 10000));
  auto [dfp, dg] = dual_map(fp, g);
  CHECK(dfp == FlagParams(7, 4));
  CHECK(dg.exact_values() == std::array<Rational, 4>{1, ratio(4661, 10000), 1, ratio(7256, 10000)});
  auto [back_fp, back] = dual_map(dfp, dg);
  CHECK(back_fp == fp);
  CHECK(back.exact_values() == g.exact_values());
  // Ricci components commute with the duality up to the r2 <-> r4 swap.
  RicciComponents r = ricci_components(isotropy_data(fp), g);
  RicciComponents rd = ricci_components(isotropy_data(dfp), dg);
  CHECK(r[0] == rd[0]);
  CHECK(r[1] == rd[3]);
  CHECK(r[2] == rd[2]);
  CHECK(r[3] == rd[1]);
  CHECK(scale_invariant(isotropy_data(fp), g).overlaps(scale_invariant(isotropy_data(dfp), dg)));
}

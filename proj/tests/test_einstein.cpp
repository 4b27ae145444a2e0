#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "flagmet/einstein.hpp"
#include "flagmet/error.hpp"
#include "flagmet/reports.hpp"
#include "support.hpp"

using namespace flagmet;
using flagmet::testing::ratio;

namespace {

const Rational kWidth(1, 1000000);

bool near(const Rational& a, const std::string& printed, const Rational& tol = Rational(1, 10000)) {
  return abs(Rational(a - parse_rational(printed))) < tol;
}

std::array<Rational, 4> ricci_exact(const FlagParams& fp, const std::array<Rational, 4>& x) {
  RicciComponents r = ricci_components(isotropy_data(fp), Metric::exact(x[0], x[1], x[2], x[3]));
  return {r[0].lo(), r[1].lo(), r[2].lo(), r[3].lo()};
}

}  // namespace

TEST_SUITE("polynomials of the system") {
  TEST_CASE("closed-form values of H at the window ends") {
    for (long n = 4; n <= 25; ++n) {
      for (long p = 2; p <= n - 2; ++p) {
        const FlagParams fp(n, p);
        const IntPolynomial H = build_H(fp);
        CHECK(H.degree() == 4);
        CHECK(eval(H, Rational(2)) == 8 * (p - 1) * (p - 1) * (p - 1));
        Rational left = ratio(2 * (n - p - 1), n + p - 1);
        Rational expected = Rational(8 * (p - 1) * (p - 1) * (p - 1) * (n - p - 1) * (n - p - 1)) /
                            Rational((n + p - 1) * (n + p - 1));
        CHECK(eval(H, left) == expected);
        CHECK(eval(build_G(fp), Rational(2)) == 8 * (n - p - 1) * (n - p - 1) * (n - p - 1));
      }
    }
    CHECK(eval(build_H(FlagParams(7, 3)), Rational(2, 3)) == Rational(64, 9));
  }

  TEST_CASE("G(n,p) = H(n,n-p)") {
    for (long n = 4; n <= 20; ++n)
      for (long p = 2; p <= n - 2; ++p) CHECK(build_G(FlagParams(n, p)) == build_H(FlagParams(n, n - p)));
  }

  TEST_CASE("H(2p,p) factors into the two quadratics") {
    for (long p = 2; p <= 12; ++p) {
      std::vector<Integer> a = {2 * (p - 1), -2 * (2 * p - 1), 2 * p - 1};
      std::vector<Integer> b = {2 * (p - 1) * (3 * p - 1), -4 * p * (2 * p - 1), p * (3 * p - 1)};
      IntPolynomial expected = 2 * IntPolynomial(a, "x2") * IntPolynomial(b, "x2");
      CHECK(build_H(FlagParams(2 * p, p)) == expected);
    }
  }

  TEST_CASE("second derivative of H is positive for n >= 2p + 5, p >= 4") {
    flagmet::testing::Rng rng(2718);
    for (int k = 0; k < 100; ++k) {
      long p = flagmet::testing::uniform(rng, 4, 15);
      long n = 2 * p + 5 + flagmet::testing::uniform(rng, 0, 20);
      Rational x = flagmet::testing::random_positive_rational(rng, 400, 97);
      CHECK(eval(build_H(FlagParams(n, p)).derivative().derivative(), x) > 0);
    }
  }

  TEST_CASE("x4 and x2 maps") {
    const FlagParams fp(7, 3);
    CHECK(x4_from_x2(fp, Interval(2)) == Interval(0));
    CHECK(x4_from_x2(fp, Interval(Rational(2, 3))) == Interval(0));
    CHECK(x2_from_x4(fp, Interval(2)) == Interval(0));
    CHECK(x2_from_x4(fp, Interval(ratio(2 * 2, 2 * 7 - 3 - 1))) == Interval(0));
    CHECK(x2_window(fp) == std::pair<Rational, Rational>(Rational(2, 3), Rational(2)));
    CHECK(x4_window(fp) == std::pair<Rational, Rational>(Rational(2, 5), Rational(2)));
    CHECK(x4_from_x2(fp, Interval(1)).is_positive());
    CHECK(x4_from_x2(fp, Interval(Rational(1, 2))).is_negative());
  }
}

TEST_SUITE("case A") {
  TEST_CASE("(7,3) has four solutions near the printed values") {
    auto sols = solve_case_A(FlagParams(7, 3), kWidth);
    REQUIRE(sols.size() == 4);
    const char* x2[] = {"0.7256", "1.0631", "1.3999", "1.7636"};
    const char* x4[] = {"0.4661", "1.5722", "1.4144", "0.6614"};
    for (int i = 0; i < 4; ++i) {
      CHECK(near(sols[i].x2.midpoint(), x2[i]));
      CHECK(near(sols[i].x4.midpoint(), x4[i]));
      CHECK(sols[i].x2.width() <= kWidth);
      CHECK(sols[i].x4.width() <= kWidth);
    }
  }

  TEST_CASE("round trip x2 -> x4 -> x2 re-encloses x2") {
    for (const auto& fp : table_pairs()) {
      for (const auto& s : solve_case_A(fp, kWidth)) {
        Interval x2(s.x2.lo, s.x2.hi);
        Interval x4 = x4_from_x2(fp, x2);
        CHECK(x4.overlaps(Interval(s.x4.lo, s.x4.hi)));
        CHECK(x2_from_x4(fp, x4).overlaps(x2));
      }
    }
  }

  TEST_CASE("solution counts") {
    CHECK(solve_case_A(FlagParams(8, 3), kWidth).size() == 2);
    CHECK(solve_case_A(FlagParams(9, 4), kWidth).size() == 2);
    auto s84 = solve_case_A(FlagParams(8, 4), default_width());
    REQUIRE(s84.size() == 4);
    auto forms = closed_form_n2p(4);
    REQUIRE(forms.size() == 4);
    for (const auto& f : forms) {
      Interval e = f.enclosure();
      bool hit = std::any_of(s84.begin(), s84.end(), [&](const CaseASolution& s) {
        return e.overlaps(Interval(s.x2.lo, s.x2.hi));
      });
      CHECK(hit);
    }
  }

  TEST_CASE("duality at solution level") {
    for (long n = 5; n <= 12; ++n) {
      for (long p = 2; 2 * p < n; ++p) {
        auto a = solve_case_A(FlagParams(n, p), kWidth);
        auto b = solve_case_A(FlagParams(n, n - p), kWidth);
        REQUIRE(a.size() == b.size());
        for (const auto& s : a) {
          bool found = std::any_of(b.begin(), b.end(), [&](const CaseASolution& t) {
            return Interval(s.x2.lo, s.x2.hi).overlaps(Interval(t.x4.lo, t.x4.hi)) &&
                   Interval(s.x4.lo, s.x4.hi).overlaps(Interval(t.x2.lo, t.x2.hi));
          });
          CHECK(found);
        }
      }
    }
  }
}

TEST_SUITE("closed forms for n = 2p") {
  TEST_CASE("families") {
    auto f7 = closed_form_n2p(7);
    CHECK(f7.size() == 2);
    for (const auto& f : f7) CHECK(f.family == "a");
    auto f4 = closed_form_n2p(4);
    CHECK(f4.size() == 4);
    // (8 - 1 -+ sqrt 7) / 7
    CHECK(f4[0].a == 1);
    CHECK(f4[0].b == Rational(-1, 7));
    CHECK(f4[0].r == 7);
    CHECK(f4[1].b == Rational(1, 7));
    for (long p = 2; p <= 10; ++p) {
      const IntPolynomial H = build_H(FlagParams(2 * p, p));
      auto forms = closed_form_n2p(p);
      CHECK(forms.size() == (p <= 6 ? 4u : 2u));
      for (const auto& f : forms) CHECK(f.sign_of_poly(H) == 0);
    }
  }

  TEST_CASE("sign in Q(sqrt r)") {
    QuadraticSurd s{Rational(0), Rational(1), Rational(2), "a"};  // sqrt 2
    std::vector<Integer> c = {-2, 0, 1};
    CHECK(s.sign_of_poly(IntPolynomial(c)) == 0);
    std::vector<Integer> d = {-1, 1};
    CHECK(s.sign_of_poly(IntPolynomial(d)) == 1);
    std::vector<Integer> e = {-3, 2};
    CHECK(s.sign_of_poly(IntPolynomial(e)) == -1);
  }
}

TEST_SUITE("case B") {
  TEST_CASE("Kahler-Einstein branch point annihilates F and G") {
    for (long n = 4; n <= 15; ++n) {
      for (long p = 2; p <= n - 2; ++p) {
        const FlagParams fp(n, p);
        CaseBSystem sys = build_case_B(fp);
        Rational x2 = ratio(2 * (n + p - 1), n), x4 = ratio(2 * (p - 1), n);
        CHECK(sys.F.evaluate(x2, x4) == 0);
        CHECK(sys.G.evaluate(x2, x4) == 0);
        CHECK(sys.x3_num.evaluate(x2, x4) / sys.x3_den.evaluate(x2, x4) == ratio(n + 2 * p - 2, n));
      }
    }
  }

  TEST_CASE("T(0) closed form and positive-root counts") {
    for (long n = 4; n <= 30; ++n) {
      for (long p = 2; p <= n - 2; ++p) {
        const FlagParams fp(n, p);
        const IntPolynomial T = build_T(fp), S = build_S(fp);
        CHECK(T.coeff(0) == 8 * (p - 1) * (p - 1) * (n - 2 * p) * (n - 2 * p) * (n + p - 1));
        if (2 * p < n) CHECK(sturm_count(T, positive_window(T)) == 0);
        if (2 * p > n) CHECK(sturm_count(S, positive_window(S)) == 0);
        CHECK(S == build_T(fp.dual()));
      }
    }
  }

  TEST_CASE("resultant report for (7,3) and (7,4)") {
    CaseBReport a = case_B_resultants(FlagParams(7, 3));
    CHECK(a.positive_root_count_T == 0);
    CHECK(a.resultant_sign_Q == 1);
    CHECK(a.resultant_sign_R == -1);
    CHECK(a.s_is_dual_of_t);
    CaseBReport b = case_B_resultants(FlagParams(7, 4));
    CHECK(b.positive_root_count_S == 0);
  }

  TEST_CASE("branches recover only Kahler-Einstein metrics") {
    auto branches = verify_case_B_branches(FlagParams(7, 3));
    REQUIRE(branches.size() == 8);
    auto find = [&](const std::string& var, const Rational& v) -> const BranchResult* {
      for (const auto& b : branches)
        if (b.fixed_var == var && b.value == v) return &b;
      return nullptr;
    };
    const BranchResult* b1 = find("x4", Rational(4, 7));
    REQUIRE(b1 != nullptr);
    bool g1 = false;
    for (const auto& s : b1->solutions)
      g1 = g1 || (s.metric == std::array<Rational, 4>{1, Rational(18, 7), Rational(11, 7), Rational(4, 7)} &&
                  s.matches == "g1");
    CHECK(g1);
    const BranchResult* b2 = find("x4", Rational(20, 7));
    REQUIRE(b2 != nullptr);
    CHECK_FALSE(b2->solutions.empty());
    for (const auto& s : b2->solutions) CHECK(s.matches.rfind("g2", 0) == 0);
    // g2 with x1 and x3 exchanged, rescaled to x1 = 1.
    const BranchResult* b3 = find("x4", Rational(20, 13));
    REQUIRE(b3 != nullptr);
    bool third = false;
    for (const auto& s : b3->solutions)
      third = third || s.metric == std::array<Rational, 4>{1, Rational(6, 13), Rational(7, 13), Rational(20, 13)};
    CHECK(third);
    for (const auto& b : branches)
      for (const auto& s : b.solutions) {
        auto r = ricci_exact(FlagParams(7, 3), s.metric);
        CHECK(r[0] == r[1]);
        CHECK(r[1] == r[2]);
        CHECK(r[2] == r[3]);
      }
  }
}

TEST_SUITE("classification") {
  TEST_CASE("(7,3)") {
    SolutionSet s = classify(FlagParams(7, 3), kWidth);
    CHECK(s.kahler.size() == 2);
    CHECK(s.non_kahler.size() == 4);
    CHECK(s.syst5_ok);
    CHECK(s.duality_ok);
    CHECK(s.kahler[0].einstein_constant == Rational(1, 12));
    for (const auto& nk : s.non_kahler) {
      CHECK(nk.metric[0] == Interval(1));
      CHECK(nk.metric[2] == Interval(1));
      CHECK(nk.metric[3].is_positive());
    }
  }

  TEST_CASE("(9,4) has two non-Kahler metrics") {
    SolutionSet s = classify(FlagParams(9, 4), kWidth);
    CHECK(s.kahler.size() == 2);
    CHECK(s.non_kahler.size() == 2);
  }

  TEST_CASE("(8,4): one Kahler metric and a swapped pair with equal invariants") {
    SolutionSet s = classify(FlagParams(8, 4), kWidth);
    CHECK(s.kahler.size() == 1);
    CHECK(s.non_kahler.size() == 4);
    REQUIRE(s.swap_pairs.size() == 1);
    auto [i, j] = s.swap_pairs[0];
    CHECK(s.non_kahler[i].scale_invariant.overlaps(s.non_kahler[j].scale_invariant));
  }

  TEST_CASE("residual at width 1e-10") {
    SolutionSet s = classify(FlagParams(5, 2), default_width());
    CHECK(s.residual_bound < Rational(1, 100000000));
    for (const auto& nk : s.non_kahler) {
      Rational res = einstein_residual(isotropy_data(s.params), nk.metric);
      CHECK(res < Rational(1, 100000000));
    }
  }

  TEST_CASE("einstein residual") {
    const FlagParams fp(7, 3);
    CHECK(einstein_residual(isotropy_data(fp), Metric::exact(Rational(7, 2), 9, Rational(11, 2), 2)) == 0);
    CHECK(einstein_residual(isotropy_data(fp), Metric::exact(1, 1, 1, 1)) > 0);
  }

  TEST_CASE("polynomial form of the system") {
    const FlagParams fp(7, 3);
    auto syst = build_syst5(fp);
    // First equation vanishes on x1 = x3.
    flagmet::testing::Rng rng(8);
    for (int k = 0; k < 20; ++k) {
      Rational a = flagmet::testing::random_positive_rational(rng, 30, 7);
      std::array<Rational, 4> x = {a, flagmet::testing::random_positive_rational(rng, 30, 7), a,
                                   flagmet::testing::random_positive_rational(rng, 30, 7)};
      CHECK(syst[0](x) == 0);
    }
    const std::array<Rational, 4> g1 = {Rational(7, 2), 9, Rational(11, 2), 2};
    for (const auto& eq : syst) CHECK(eq(g1) == 0);
    // Equivalence with the Ricci form: random metrics (not Einstein) and
    // rescaled Kahler-Einstein metrics (Einstein).
    for (int k = 0; k < 50; ++k) {
      long n = flagmet::testing::uniform(rng, 4, 20), p = flagmet::testing::uniform(rng, 2, n - 2);
      const FlagParams q(n, p);
      auto eqs = build_syst5(q);
      std::array<Rational, 4> x;
      if (k % 2 == 0) {
        for (auto& v : x) v = flagmet::testing::random_positive_rational(rng, 40, 9);
      } else {
        auto ke = kahler_einstein_metrics(q);
        x = ke[flagmet::testing::uniform(rng, 0, static_cast<long>(ke.size()) - 1)].metric.exact_values();
        Rational t = flagmet::testing::random_positive_rational(rng, 20, 9);
        for (auto& v : x) v *= t;
      }
      auto r = ricci_exact(q, x);
      bool einstein = r[0] == r[1] && r[1] == r[2] && r[2] == r[3];
      bool poly = eqs[0](x) == 0 && eqs[1](x) == 0 && eqs[2](x) == 0;
      CHECK(einstein == poly);
    }
  }
}

TEST_SUITE("main theorem") {
  TEST_CASE("n <= 12 finds exactly the exceptional pairs") {
    auto rep = verify_main_theorem(12, 1);
    CHECK(rep.passed());
    int four = 0;
    for (const auto& r : rep.rows) four += r.non_kahler == 4 ? 1 : 0;
    CHECK(four == 11);
    CHECK(exceptional_pairs().size() == 11);
  }

  TEST_CASE("n = 4 is the single pair (4,2)") {
    auto rep = verify_main_theorem(4, 1);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].n == 4);
    CHECK(rep.rows[0].p == 2);
    CHECK(rep.rows[0].non_kahler == 4);
  }

  TEST_CASE("mismatch detection") {
    SweepRow row = sweep_row(FlagParams(9, 4), kWidth);
    CHECK(row.matches);
    CHECK_FALSE(row.exceptional);
    CHECK(pairs_in_range(13, 13).size() == 10);
  }
}

TEST_SUITE("certificates") {
  TEST_CASE("M") {
    MReport rep = check_M();
    CHECK(rep.passed());
    CHECK(rep.certificate.positivity.verdict);
    for (const auto& p : rep.y_coefficients) CHECK_MESSAGE(p.matches(), p.name);
    for (const auto& p : rep.shifted) CHECK_MESSAGE(p.matches(), p.name);
    CHECK(rep.m2.matches());
    CHECK(rep.m3_half.matches());
  }

  TEST_CASE("G = H under p -> n - p, and the closed forms for n = 2p") {
    CHECK(check_dual_identity(12).passed());
    for (long p = 2; p <= 7; ++p) CHECK(check_half_rank(p, default_width()).passed);
  }

  TEST_CASE("table ordering") {
    auto entries = table_entries(kWidth);
    REQUIRE(entries.size() == 24);
    CHECK(entries[0].params == FlagParams(7, 4));
    CHECK(entries[0].label == "g1");
    CHECK(round_half_even(entries[0].scale_invariant.midpoint(), 4) == "25.2814");
  }
}

#include "flagmet/einstein.hpp"

#include <algorithm>

#include "flagmet/error.hpp"
#include "flagmet/parallel.hpp"

namespace flagmet {

Rational default_width() { return ten_to_minus(10); }

namespace {

struct NP {
  Integer n;
  Integer p;
  explicit NP(const FlagParams& fp) : n(fp.n()), p(fp.p()) {}
};

Integer sq(const Integer& v) { return v * v; }

std::string pair_name(const FlagParams& fp) {
  return "(" + std::to_string(fp.n()) + ", " + std::to_string(fp.p()) + ")";
}

}  // namespace

// Case A ---------------------------------------------------------------------

IntPolynomial build_H(const FlagParams& fp) {
  NP v(fp);
  const Integer& n = v.n;
  const Integer& p = v.p;
  Integer c4 = (n - 1) * n * (n + p - 1);
  Integer c3 = -4 * (n - 1) * (2 * n * n - 2 * n - p * p + p);
  Integer c2 = 2 * (12 * n * n * n - 11 * n * n * p - 25 * n * n - 2 * n * p * p + 20 * n * p + 14 * n +
                    2 * p * p * p - 2 * p * p - 6 * p - 2);
  Integer c1 = -8 * (n - 1) * (4 * n - 3 * p - 1) * (n - p - 1);
  Integer c0 = 8 * sq(n - p - 1) * (2 * n - p - 1);
  return IntPolynomial({c0, c1, c2, c3, c4}, "x2");
}

IntPolynomial build_G(const FlagParams& fp) {
  NP v(fp);
  const Integer& n = v.n;
  const Integer& p = v.p;
  Integer c4 = (n - 1) * n * (2 * n - p - 1);
  Integer c3 = -4 * (n - 1) * (n * n + 2 * n * p - n - p * p - p);
  Integer c2 = 2 * (n * n * n + 9 * n * n * p - 7 * n * n + 4 * n * p * p - 16 * n * p + 8 * n - 2 * p * p * p -
                    2 * p * p + 6 * p - 2);
  Integer c1 = -8 * (n - 1) * (p - 1) * (n + 3 * p - 1);
  Integer c0 = 8 * sq(p - 1) * (n + p - 1);
  return IntPolynomial({c0, c1, c2, c3, c4}, "x4");
}

Interval x4_from_x2(const FlagParams& fp, const Interval& x2) {
  const long n = fp.n(), p = fp.p();
  Interval num = (x2 - Interval(2)) * (Interval(n + p - 1) * x2 - Interval(2 * (n - p - 1)));
  return -num / (Interval(p - 1) * x2);
}

Interval x2_from_x4(const FlagParams& fp, const Interval& x4) {
  const long n = fp.n(), p = fp.p();
  Interval num = (x4 - Interval(2)) * (Interval(2 * n - p - 1) * x4 - Interval(2 * (p - 1)));
  return -num / (Interval(n - p - 1) * x4);
}

std::pair<Rational, Rational> x2_window(const FlagParams& fp) {
  const long n = fp.n(), p = fp.p();
  return {make_rational(2 * (n - p - 1), n + p - 1), Rational(2)};
}

std::pair<Rational, Rational> x4_window(const FlagParams& fp) {
  const long n = fp.n(), p = fp.p();
  return {make_rational(2 * (p - 1), 2 * n - p - 1), Rational(2)};
}

std::vector<CaseASolution> solve_case_A(const FlagParams& fp, const Rational& width) {
  if (width <= 0) throw Error(ErrorKind::InvalidParams, "width must be positive");
  const IntPolynomial H = build_H(fp);
  const IntPolynomial G = build_G(fp);
  auto [g_lo, g_hi] = x4_window(fp);
  std::vector<RationalInterval> g_roots;
  for (const auto& iv : isolate_roots(G, RationalInterval(g_lo, g_hi))) g_roots.push_back(refine_root(G, iv, width));
  std::vector<bool> used(g_roots.size(), false);

  std::vector<CaseASolution> out;
  for (const auto& iso : isolate_positive_roots(H)) {
    RationalInterval x2 = refine_root(H, iso, width);
    std::optional<std::size_t> match;
    bool negative = false;
    for (int attempt = 0; attempt < 24 && !match && !negative; ++attempt) {
      Interval enc = x4_from_x2(fp, Interval(x2.lo, x2.hi));
      if (enc.hi() <= 0) {
        negative = true;
      } else if (enc.lo() > 0) {
        std::size_t hits = 0;
        for (std::size_t k = 0; k < g_roots.size(); ++k) {
          if (enc.overlaps(Interval(g_roots[k].lo, g_roots[k].hi))) {
            ++hits;
            match = k;
          }
        }
        if (hits == 0)
          throw Error(ErrorKind::CertificateFailure,
                      "x4 enclosure " + to_string(enc) + " meets no root of G for " + pair_name(fp));
        if (hits > 1) match.reset();
      }
      if (!match && !negative) x2 = refine_root(H, x2, x2.width() / 256);
    }
    if (negative) continue;
    if (!match)
      throw Error(ErrorKind::UncertifiedSign, "could not certify x4 for the root of H in (" +
                                                  to_fraction_string(x2.lo) + ", " + to_fraction_string(x2.hi) +
                                                  "] for " + pair_name(fp));
    if (used[*match])
      throw Error(ErrorKind::CertificateFailure, "two roots of H map onto one root of G for " + pair_name(fp));
    used[*match] = true;
    out.push_back({x2, g_roots[*match]});
  }
  return out;
}

Interval QuadraticSurd::enclosure(unsigned precision_bits) const {
  return Interval(a) + Interval(b) * sqrt_enclosure(r, precision_bits);
}

int QuadraticSurd::sign_of_poly(const IntPolynomial& f) const {
  // Horner in Q(sqrt r): value = u + v sqrt(r).
  Rational u(0), v(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    Rational nu = u * a + v * b * r + Rational(*it);
    Rational nv = u * b + v * a;
    u = std::move(nu);
    v = std::move(nv);
  }
  int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  Rational lhs = u * u, rhs = v * v * r;
  if (lhs > rhs) return su;
  if (lhs < rhs) return sv;
  return 0;
}

std::vector<QuadraticSurd> closed_form_n2p(long p) {
  if (p < 2) throw Error(ErrorKind::InvalidParams, "p must be >= 2");
  const Integer P(p);
  std::vector<QuadraticSurd> out;
  Rational ra(2 * P - 1);
  out.push_back({Rational(1), make_rational(-1, 2 * P - 1), ra, "a"});
  out.push_back({Rational(1), make_rational(1, 2 * P - 1), ra, "a"});
  Integer cubic = P * P * P - 7 * P * P + 5 * P - 1;
  if (cubic < 0) {
    Rational center = make_rational(2 * (2 * P - 1), 3 * P - 1);
    Rational rb(-2 * P * cubic);
    Integer den = P * (3 * P - 1);
    out.push_back({center, make_rational(-1, den), rb, "b"});
    out.push_back({center, make_rational(1, den), rb, "b"});
  }
  return out;
}

// Case B ---------------------------------------------------------------------

namespace {

BiPolynomial bi_term(const Integer& c, int i, int j) {
  BiPolynomial f("x2", "x4");
  f.add_term(i, j, c);
  return f;
}

}  // namespace

CaseBSystem build_case_B(const FlagParams& fp) {
  NP v(fp);
  const Integer& n = v.n;
  const Integer& p = v.p;
  CaseBSystem s;
  s.F = bi_term(-(p - 1) * (2 * n * n - 4 * n + p * p + 2 * p + 1), 3, 1) +
        bi_term(-(3 * n * n * n + 5 * n * n * p - 9 * n * n - n * p * p - 6 * n * p + 7 * n + p * p * p -
                  3 * p * p + 3 * p - 1),
                2, 2) +
        bi_term(sq(p - 1) * (n + p - 1), 4, 0) + bi_term(8 * (n - 1) * (p - 1) * (n + p - 1), 2, 1) +
        bi_term(-4 * sq(p - 1) * (n + p - 1), 2, 0) + bi_term((p - 1) * sq(n - p - 1), 1, 3) +
        bi_term(8 * (n - 1) * (n - p - 1) * (n + p - 1), 1, 2) +
        bi_term(-8 * (p - 1) * (n - p - 1) * (n + p - 1), 1, 1) + bi_term(-4 * sq(n - p - 1) * (n + p - 1), 0, 2);
  s.G = bi_term((n - p - 1) * (3 * n * n - 2 * n * p - 2 * n + p * p - 2 * p + 1), 1, 3) +
        bi_term(8 * n * n * n - 6 * n * n * p - 18 * n * n + 2 * n * p * p + 12 * n * p + 10 * n - p * p * p -
                    3 * p * p - 3 * p - 1,
                2, 2) +
        bi_term(-sq(p - 1) * (n - p - 1), 3, 1) + bi_term(-8 * (n - 1) * (p - 1) * (2 * n - p - 1), 2, 1) +
        bi_term(4 * sq(p - 1) * (2 * n - p - 1), 2, 0) +
        bi_term(-8 * (n - 1) * (n - p - 1) * (2 * n - p - 1), 1, 2) +
        bi_term(8 * (p - 1) * (n - p - 1) * (2 * n - p - 1), 1, 1) +
        bi_term(-sq(n - p - 1) * (2 * n - p - 1), 0, 4) + bi_term(4 * sq(n - p - 1) * (2 * n - p - 1), 0, 2);
  s.x3_num = bi_term(2 * (n - 1), 1, 1) + bi_term(-(n - p - 1), 0, 1) + bi_term(-(p - 1), 1, 0);
  s.x3_den = bi_term(n - p - 1, 0, 1) + bi_term(p - 1, 1, 0);
  return s;
}

IntPolynomial build_T(const FlagParams& fp) {
  NP v(fp);
  const Integer& n = v.n;
  const Integer& p = v.p;
  Integer n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  Integer p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  Integer c4 = (n - 1) * n2 * (3 * n - 4) * (2 * n - p - 1);
  Integer c3 = 4 * (n - 1) * n * (2 * n - p - 1) * (n2 - 4 * n * p - 2 * p2 + 8 * p - 2);
  Integer c2 = 2 * (n5 - 19 * n4 * p + 11 * n4 + 36 * n3 * p2 + 18 * n3 * p - 30 * n3 + 22 * n2 * p3 -
                    130 * n2 * p2 + 54 * n2 * p + 22 * n2 - 16 * n * p4 - 4 * n * p3 + 108 * n * p2 - 68 * n * p -
                    4 * n + 16 * p4 - 16 * p3 - 16 * p2 + 16 * p);
  Integer c1 = -8 * (p - 1) * (n - 2 * p) * (n + p - 1) * (n2 - 6 * n * p + 2 * n + 2 * p2 + 4 * p - 2);
  Integer c0 = 8 * sq(p - 1) * sq(n - 2 * p) * (n + p - 1);
  return IntPolynomial({c0, c1, c2, c3, c4}, "x4");
}

IntPolynomial build_S(const FlagParams& fp) {
  NP v(fp);
  const Integer& n = v.n;
  const Integer& p = v.p;
  Integer n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  Integer p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  Integer c4 = (n - 1) * n2 * (3 * n - 4) * (n + p - 1);
  Integer c3 = -4 * (n - 1) * n * (n + p - 1) * (5 * n2 - 8 * n * p - 8 * n + 2 * p2 + 8 * p + 2);
  Integer c2 = 2 * (24 * n5 - 55 * n4 * p - 89 * n4 + 6 * n3 * p2 + 190 * n3 * p + 116 * n3 + 42 * n2 * p3 -
                    46 * n2 * p2 - 222 * n2 * p - 62 * n2 - 16 * n * p4 - 60 * n * p3 + 60 * n * p2 + 100 * n * p +
                    12 * n + 16 * p4 + 16 * p3 - 16 * p2 - 16 * p);
  Integer c1 = -8 * (n - 2 * p) * (n - p - 1) * (2 * n - p - 1) * (3 * n2 - 2 * n * p - 6 * n - 2 * p2 + 4 * p + 2);
  Integer c0 = 8 * sq(n - 2 * p) * sq(n - p - 1) * (2 * n - p - 1);
  return IntPolynomial({c0, c1, c2, c3, c4}, "x2");
}

std::vector<IntPolynomial> linear_factors_Q(const FlagParams& fp) {
  const Integer n(fp.n()), p(fp.p());
  return {
      IntPolynomial::linear(n, -2 * p + 2, "x4"),
      IntPolynomial::linear(n, -4 * n + 2 * p + 2, "x4"),
      IntPolynomial::linear(3 * n - 2 * p - 2, -4 * n + 2 * p + 2, "x4"),
      IntPolynomial::linear(n + 2 * p - 2, -2 * p + 2, "x4"),
  };
}

std::vector<IntPolynomial> linear_factors_R(const FlagParams& fp) {
  const Integer n(fp.n()), p(fp.p());
  return {
      IntPolynomial::linear(n, -2 * n - 2 * p + 2, "x2"),
      IntPolynomial::linear(n, -2 * n + 2 * p + 2, "x2"),
      IntPolynomial::linear(3 * n - 2 * p - 2, -2 * n + 2 * p + 2, "x2"),
      IntPolynomial::linear(n + 2 * p - 2, -2 * n - 2 * p + 2, "x2"),
  };
}

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Integer constant_Q(const FlagParams& fp) {
  const Integer n(fp.n()), p(fp.p());
  return 128 * ipow(n - 1, 6) * ipow(p - 1, 2) * ipow(n - p - 1, 4);
}

Integer constant_R(const FlagParams& fp) {
  const Integer n(fp.n()), p(fp.p());
  return 128 * ipow(n - 1, 6) * ipow(p - 1, 4) * ipow(n - p - 1, 2);
}

namespace {

// Sign s with f == s * c * x^8 * prod(linear) * quartic; throws otherwise.
int factor_sign(const IntPolynomial& f, const Integer& c, const std::vector<IntPolynomial>& linear,
                const IntPolynomial& quartic, const std::string& what) {
  const std::string& var = quartic.var();
  IntPolynomial divisor = IntPolynomial::monomial(c, 8, var);
  for (const auto& l : linear) divisor *= l;
  divisor *= quartic;
  IntPolynomial q = exact_divide(f, divisor);
  if (q.degree() != 0 || abs(q.leading()) != 1)
    throw Error(ErrorKind::InexactDivision, what + " leaves the cofactor " + to_string(q));
  return sgn(q.leading());
}

Interval eval_interval(const BiPolynomial& f, const Interval& a, const Interval& b) {
  Interval acc(0);
  for (const auto& [e, c] : f.terms())
    acc += Interval(c) * pow(a, static_cast<unsigned>(e.first)) * pow(b, static_cast<unsigned>(e.second));
  return acc;
}

struct KECandidate {
  std::array<Rational, 4> x;
  std::string label;
};

std::vector<KECandidate> ke_candidates(const FlagParams& fp) {
  std::vector<KECandidate> out;
  std::vector<std::pair<std::array<Rational, 4>, std::string>> base;
  for (const auto& km : kahler_einstein_metrics(fp)) {
    auto v = km.metric.exact_values();
    base.emplace_back(v, km.label);
    // For n = 2p the duality maps the space to itself.
    if (fp.n() == 2 * fp.p()) base.emplace_back(std::array<Rational, 4>{v[0], v[3], v[2], v[1]}, km.label + " (x2<->x4)");
  }
  for (const auto& [v, label] : base) {
    out.push_back({{Rational(1), v[1] / v[0], v[2] / v[0], v[3] / v[0]}, label});
    out.push_back({{Rational(1), v[1] / v[2], v[0] / v[2], v[3] / v[2]}, label + " (x1<->x3)"});
  }
  return out;
}

// Branch with variable `fixed_index` (0 = x2, 1 = x4) pinned to `value`.
BranchResult solve_branch(const FlagParams& fp, const CaseBSystem& sys, int fixed_index, const Rational& value,
                          const std::vector<KECandidate>& cands) {
  BranchResult result;
  result.fixed_var = fixed_index == 0 ? "x2" : "x4";
  result.value = value;
  const std::string where = result.fixed_var + " = " + to_fraction_string(value) + " for " + pair_name(fp);
  RatPolynomial fs = sys.F.specialize(fixed_index, value);
  RatPolynomial gs = sys.G.specialize(fixed_index, value);
  IntPolynomial h;
  if (fs.is_zero() && gs.is_zero())
    throw Error(ErrorKind::NonKahlerBranchSolution, "the system vanishes identically on " + where);
  if (fs.is_zero()) {
    h = clear_denominators(gs);
  } else if (gs.is_zero()) {
    h = clear_denominators(fs);
  } else {
    h = gcd(clear_denominators(fs), clear_denominators(gs));
  }
  if (h.degree() <= 0) return result;
  const int other_index = 1 - fixed_index;
  auto point = [&](const Rational& other) {
    return fixed_index == 0 ? std::pair<Rational, Rational>{value, other} : std::pair<Rational, Rational>{other, value};
  };
  for (const auto& iv : isolate_positive_roots(h)) {
    bool handled = false;
    for (const auto& c : cands) {
      const Rational& fixed_c = fixed_index == 0 ? c.x[1] : c.x[3];
      const Rational& other_c = other_index == 0 ? c.x[1] : c.x[3];
      if (fixed_c != value || !iv.contains(other_c) || sign_at(h, other_c) != 0) continue;
      auto [x2, x4] = point(other_c);
      Rational x3 = sys.x3_num.evaluate(x2, x4) / sys.x3_den.evaluate(x2, x4);
      handled = true;
      if (x3 <= 0) break;
      if (x3 != c.x[2])
        throw Error(ErrorKind::NonKahlerBranchSolution, "positive solution with x3 = " + to_fraction_string(x3) +
                                                            " on " + where + " differs from " + c.label);
      result.solutions.push_back({{Rational(1), x2, x3, x4}, c.label});
      break;
    }
    if (handled) continue;
    // Not a Kahler-Einstein point: it must fail to give a positive x3.
    RationalInterval r = iv;
    for (int attempt = 0; attempt < 40 && !handled; ++attempt) {
      r = refine_root(h, r, r.width() / 256);
      Interval other(r.lo, r.hi);
      Interval fixed(value);
      Interval x2 = fixed_index == 0 ? fixed : other;
      Interval x4 = fixed_index == 0 ? other : fixed;
      Interval x3 = eval_interval(sys.x3_num, x2, x4) / eval_interval(sys.x3_den, x2, x4);
      if (x3.hi() <= 0) {
        handled = true;
      } else if (x3.lo() > 0) {
        throw Error(ErrorKind::NonKahlerBranchSolution,
                    "positive solution near " + to_fraction_string(r.midpoint()) + " on " + where);
      }
    }
    if (!handled) throw Error(ErrorKind::UncertifiedSign, "could not decide the sign of x3 on " + where);
  }
  return result;
}

Rational linear_root(const IntPolynomial& l) { return make_rational(-l.coeff(0), l.coeff(1)); }

}  // namespace

std::vector<BranchResult> verify_case_B_branches(const FlagParams& fp) {
  const CaseBSystem sys = build_case_B(fp);
  const auto cands = ke_candidates(fp);
  std::vector<BranchResult> out;
  for (const auto& l : linear_factors_Q(fp)) out.push_back(solve_branch(fp, sys, 1, linear_root(l), cands));
  for (const auto& l : linear_factors_R(fp)) out.push_back(solve_branch(fp, sys, 0, linear_root(l), cands));
  return out;
}

CaseBReport case_B_resultants(const FlagParams& fp) {
  const CaseBSystem sys = build_case_B(fp);
  CaseBReport rep(fp);
  rep.Q = resultant(sys.F, sys.G, "x2");
  rep.R = resultant(sys.F, sys.G, "x4");
  rep.quartic_T = build_T(fp);
  rep.quartic_S = build_S(fp);
  rep.resultant_sign_Q =
      factor_sign(rep.Q, constant_Q(fp), linear_factors_Q(fp), rep.quartic_T, "resultant in x4 for " + pair_name(fp));
  rep.resultant_sign_R =
      factor_sign(rep.R, constant_R(fp), linear_factors_R(fp), rep.quartic_S, "resultant in x2 for " + pair_name(fp));
  rep.positive_root_count_T = sturm_count(rep.quartic_T, positive_window(rep.quartic_T));
  rep.positive_root_count_S = sturm_count(rep.quartic_S, positive_window(rep.quartic_S));
  rep.s_is_dual_of_t = rep.quartic_S == build_T(fp.dual());
  const long n = fp.n(), p = fp.p();
  if (2 * p <= n && rep.positive_root_count_T != 0)
    throw Error(ErrorKind::UnexpectedPositiveRoot,
                "T has " + std::to_string(rep.positive_root_count_T) + " positive roots for " + pair_name(fp));
  if (2 * p >= n && rep.positive_root_count_S != 0)
    throw Error(ErrorKind::UnexpectedPositiveRoot,
                "S has " + std::to_string(rep.positive_root_count_S) + " positive roots for " + pair_name(fp));
  rep.linear_branches = verify_case_B_branches(fp);
  return rep;
}

// Classification --------------------------------------------------------------

namespace {

Rational spread_of(const RicciComponents& r) {
  Rational lo = r[0].lo(), hi = r[0].hi();
  for (const auto& c : r) {
    lo = std::min(lo, c.lo());
    hi = std::max(hi, c.hi());
  }
  return hi - lo;
}

bool pairwise_overlap(const RicciComponents& r) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!r[i].overlaps(r[j])) return false;
  return true;
}

}  // namespace

Rational einstein_residual(const IsotropyData& data, const Metric& g) {
  RicciComponents r = ricci_components(data, g);
  Rational worst(0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) worst = std::max(worst, (r[i] - r[j]).magnitude());
  return worst;
}

SolutionSet classify(const FlagParams& fp, const Rational& width) {
  const IsotropyData data = isotropy_data(fp);
  const auto syst = build_syst5(fp);
  SolutionSet set(fp, width);
  set.syst5_ok = true;

  for (const auto& km : kahler_einstein_metrics(fp)) {
    RicciComponents r = ricci_components(data, km.metric);
    if (!(r[0] == r[1] && r[1] == r[2] && r[2] == r[3]))
      throw Error(ErrorKind::CertificateFailure, "Kahler-Einstein metric " + km.label + " is not Einstein for " +
                                                     pair_name(fp));
    for (const auto& eq : syst)
      if (eq(km.metric.exact_values()) != 0) set.syst5_ok = false;
    set.kahler.push_back({km.metric, km.label, r[0].lo(), scale_invariant(data, km.metric)});
  }

  const auto solutions = solve_case_A(fp, width);
  set.residual_bound = 0;
  for (const auto& s : solutions) {
    Metric g({Interval(1), Interval(s.x2.lo, s.x2.hi), Interval(1), Interval(s.x4.lo, s.x4.hi)});
    RicciComponents r = ricci_components(data, g);
    if (!pairwise_overlap(r))
      throw Error(ErrorKind::CertificateFailure, "Ricci enclosures do not intersect for " + pair_name(fp));
    Rational spread = spread_of(r);
    set.residual_bound = std::max(set.residual_bound, spread);
    for (const auto& eq : syst)
      if (!eq(g.x()).contains_zero()) set.syst5_ok = false;
    set.non_kahler.push_back({g, s.x2, s.x4, r[0], scale_invariant(data, g), spread});
  }

  // Every root of G in its window must be hit exactly once.
  auto [g_lo, g_hi] = x4_window(fp);
  int g_count = sturm_count(build_G(fp), RationalInterval(g_lo, g_hi));
  set.duality_ok = g_count == static_cast<int>(solutions.size());
  for (const auto& s : set.non_kahler) {
    Interval back = x2_from_x4(fp, s.metric[3]);
    if (!back.overlaps(s.metric[1])) set.duality_ok = false;
  }

  for (std::size_t i = 0; i < set.non_kahler.size(); ++i) {
    for (std::size_t j = i + 1; j < set.non_kahler.size(); ++j) {
      const auto& a = set.non_kahler[i];
      const auto& b = set.non_kahler[j];
      if (a.metric[1].overlaps(b.metric[3]) && a.metric[3].overlaps(b.metric[1]) &&
          a.scale_invariant.overlaps(b.scale_invariant))
        set.swap_pairs.emplace_back(i, j);
    }
  }

  set.case_b = case_B_resultants(fp);
  return set;
}

const std::vector<FlagParams>& exceptional_pairs() {
  static const std::vector<FlagParams> pairs = {
      {4, 2}, {5, 2}, {5, 3}, {6, 2}, {6, 3}, {6, 4}, {7, 3}, {7, 4}, {8, 4}, {10, 5}, {12, 6},
  };
  return pairs;
}

bool is_exceptional(const FlagParams& fp) {
  const auto& e = exceptional_pairs();
  return std::find(e.begin(), e.end(), fp) != e.end();
}

SweepRow sweep_row(const FlagParams& fp, const Rational& width) {
  SweepRow row;
  row.n = fp.n();
  row.p = fp.p();
  row.exceptional = is_exceptional(fp);
  try {
    SolutionSet s = classify(fp, width);
    row.kahler = static_cast<int>(s.kahler.size());
    row.non_kahler = static_cast<int>(s.non_kahler.size());
    row.matches = row.non_kahler == expected_non_kahler_count(fp) && s.syst5_ok && s.duality_ok;
    if (!s.syst5_ok) row.error = "polynomial system check failed";
    if (!s.duality_ok) row.error = "duality check failed";
  } catch (const Error& e) {
    row.error = e.what();
    row.matches = false;
  }
  return row;
}

std::vector<FlagParams> pairs_in_range(long n_min, long n_max) {
  if (n_min < 4 || n_max < n_min) throw Error(ErrorKind::InvalidParams, "need 4 <= n_min <= n_max");
  std::vector<FlagParams> out;
  for (long n = n_min; n <= n_max; ++n)
    for (long p = 2; p <= n - 2; ++p) out.emplace_back(n, p);
  return out;
}

MainTheoremReport verify_main_theorem(long n_max, int jobs, bool throw_on_mismatch, long n_min,
                                      const Rational& width) {
  MainTheoremReport rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  auto pairs = pairs_in_range(n_min, n_max);
  rep.rows = jobs == 1 ? sweep_serial(pairs, width) : sweep_parallel(pairs, width, jobs);
  for (const auto& row : rep.rows)
    if (!row.matches) rep.mismatches.emplace_back(row.n, row.p);
  if (throw_on_mismatch && !rep.passed()) {
    const auto& bad = rep.mismatches.front();
    const auto& row = *std::find_if(rep.rows.begin(), rep.rows.end(),
                                    [&](const SweepRow& r) { return r.n == bad.n() && r.p == bad.p(); });
    throw Error(ErrorKind::TheoremMismatch, "pair " + pair_name(bad) + " has " + std::to_string(row.non_kahler) +
                                                " non-Kahler metrics, expected " +
                                                std::to_string(expected_non_kahler_count(bad)) +
                                                (row.error.empty() ? "" : " (" + row.error + ")"));
  }
  return rep;
}

// Polynomial form ----------------------------------------------------------------

void MultiPolynomial::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPolynomial MultiPolynomial::constant(const Integer& c) {
  MultiPolynomial m;
  m.add_term({0, 0, 0, 0}, c);
  return m;
}

MultiPolynomial MultiPolynomial::var(int index) {
  MultiPolynomial m;
  Exponents e{0, 0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  m.add_term(e, 1);
  return m;
}

MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPolynomial operator-(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPolynomial::Exponents e;
      for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Interval MultiPolynomial::operator()(const std::array<Interval, 4>& x) const {
  Interval acc(0);
  for (const auto& [e, c] : terms_) {
    Interval t(c);
    for (std::size_t i = 0; i < 4; ++i) t *= pow(x[i], static_cast<unsigned>(e[i]));
    acc += t;
  }
  return acc;
}

Rational MultiPolynomial::operator()(const std::array<Rational, 4>& x) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t(c);
    for (std::size_t i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

std::array<MultiPolynomial, 3> build_syst5(const FlagParams& fp) {
  using MP = MultiPolynomial;
  const Integer n(fp.n()), p(fp.p());
  const MP x1 = MP::var(0), x2 = MP::var(1), x3 = MP::var(2), x4 = MP::var(3);
  auto C = [](const Integer& c) { return MP::constant(c); };
  MP second = C(-1) * x1 * x2 + C(p) * x1 * x2 - x2 * x3 + C(p) * x2 * x3 - x1 * x4 + C(n) * x1 * x4 -
              C(p) * x1 * x4 + C(2) * x2 * x4 - C(2 * n) * x2 * x4 - x3 * x4 + C(n) * x3 * x4 - C(p) * x3 * x4;
  MP e1 = (x1 - x3) * second;
  MP e2 = C(4 * (n - 1)) * x3 * x4 * (x2 - x1) + C(n + p - 1) * x4 * (x1 * x1 - x2 * x2) -
          C(n - 3 * p - 1) * x3 * x3 * x4 + C(p - 1) * x2 * (x1 * x1 - x3 * x3 - x4 * x4);
  MP e3 = C(4 * (n - 1)) * x1 * x2 * (x4 - x3) + C(2 * n - p - 1) * x2 * (x3 * x3 - x4 * x4) +
          C(2 * n - 3 * p + 1) * x1 * x1 * x2 + C(n - p - 1) * x4 * (x3 * x3 - x1 * x1 - x2 * x2);
  return {e1, e2, e3};
}

BiPolynomial build_M() {
  BiPolynomial m("n", "p");
  // (exponent of n, exponent of p, coefficient)
  const int terms[][3] = {{4, 1, 1},  {4, 0, -1}, {3, 2, -1}, {3, 1, -6}, {3, 0, 3},  {2, 2, -4},
                          {2, 1, 12}, {2, 0, -4}, {1, 4, -1}, {1, 3, 2},  {1, 2, 5},  {1, 1, -8},
                          {1, 0, 2},  {0, 4, 3},  {0, 3, -6}, {0, 2, 3}};
  for (const auto& t : terms) m.add_term(t[0], t[1], t[2]);
  return m;
}

MCertificate certify_M() {
  MCertificate cert;
  const BiPolynomial m = build_M();
  BiPolynomial shift_n = BiPolynomial::variable("y", "y", "p") + 2 * BiPolynomial::variable("p", "y", "p") +
                         BiPolynomial::constant(5, "y", "p");
  BiPolynomial in_y = substitute(m, "n", shift_n);
  cert.y_coefficients = in_y.collect(0);
  cert.centers = {4, 3, 2, 2};
  for (std::size_t k = 0; k < cert.centers.size() && k < cert.y_coefficients.size(); ++k)
    cert.shifted_coefficients.push_back(taylor_shift(cert.y_coefficients[k], Rational(cert.centers[k])));
  BiPolynomial shift_p = BiPolynomial::variable("q", "y", "q") + BiPolynomial::constant(4, "y", "q");
  cert.positivity = certify_positive(m, {{"n", shift_n}, {"p", shift_p}});
  cert.m2_at_13 = taylor_shift(m.specialize(1, Rational(2)), Rational(13));
  RatPolynomial m3 = m.specialize(1, Rational(3));
  m3 *= Rational(1, 2);
  cert.m3_half_at_13 = taylor_shift(m3, Rational(13));
  return cert;
}

}  // namespace flagmet

#include "flagmet/reports.hpp"

#include <algorithm>
#include <numeric>

#include "flagmet/error.hpp"

namespace flagmet {

const std::vector<FlagParams>& table_pairs() {
  static const std::vector<FlagParams> pairs = {{7, 4}, {7, 3}, {6, 4}, {6, 2}, {5, 3}, {5, 2}};
  return pairs;
}

std::vector<std::size_t> table_order(const SolutionSet& set) {
  std::vector<std::size_t> idx(set.non_kahler.size());
  std::iota(idx.begin(), idx.end(), 0);
  const bool by_x2 = 2 * set.params.p() >= set.params.n();
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& sa = set.non_kahler[a];
    const auto& sb = set.non_kahler[b];
    return by_x2 ? sa.x2.hi <= sb.x2.lo : sa.x4.hi <= sb.x4.lo;
  });
  return idx;
}

std::vector<TableEntry> table_entries(const Rational& width) {
  std::vector<TableEntry> out;
  for (const auto& fp : table_pairs()) {
    SolutionSet set = classify(fp, width);
    auto order = table_order(set);
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& s = set.non_kahler[order[k]];
      out.push_back({fp, "g" + std::to_string(k + 1), s.x2, s.x4, s.scale_invariant});
    }
  }
  return out;
}

DualIdentityReport check_dual_identity(long n_max) {
  DualIdentityReport rep;
  rep.n_max = n_max;
  for (const auto& fp : pairs_in_range(4, n_max)) {
    ++rep.pairs_checked;
    if (!(build_G(fp) == build_H(fp.dual()))) rep.failures.push_back(fp);
  }
  return rep;
}

HalfRankReport check_half_rank(long p, const Rational& tol) {
  HalfRankReport rep;
  rep.p = p;
  const FlagParams fp(2 * p, p);
  const IntPolynomial H = build_H(fp);
  std::vector<RationalInterval> roots;
  for (const auto& iv : isolate_positive_roots(H)) roots.push_back(refine_root(H, iv, tol / 4));
  rep.positive_roots = static_cast<int>(roots.size());
  rep.family_b_expected = p <= 6;
  std::vector<bool> used(roots.size(), false);
  bool all_ok = true;
  for (const auto& q : closed_form_n2p(p)) {
    HalfRankForm form;
    form.value = q;
    if (q.family == "b") rep.family_b_present = true;
    form.exact_root = q.sign_of_poly(H) == 0;
    Interval enc = q.enclosure();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      Interval root(roots[k].lo, roots[k].hi);
      if (!enc.overlaps(root)) continue;
      Rational m = roots[k].midpoint();
      form.distance = std::max(abs(enc.hi() - m), abs(enc.lo() - m));
      form.matched = !used[k] && form.distance <= tol;
      used[k] = true;
      break;
    }
    all_ok = all_ok && form.exact_root && form.matched;
    rep.forms.push_back(form);
  }
  rep.passed = all_ok && rep.family_b_expected == rep.family_b_present &&
               rep.positive_roots == static_cast<int>(rep.forms.size());
  return rep;
}

namespace {

RatPolynomial rat(std::initializer_list<long> ascending, const std::string& var) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RatPolynomial(std::move(c), var);
}

}  // namespace

bool MReport::passed() const {
  auto all = [](const std::vector<PrintedPolynomial>& v) {
    return std::all_of(v.begin(), v.end(), [](const PrintedPolynomial& p) { return p.matches(); });
  };
  return certificate.positivity.verdict && all(y_coefficients) && all(shifted) && m2.matches() && m3_half.matches();
}

MReport check_M() {
  MReport rep;
  rep.certificate = certify_M();
  const auto& yc = rep.certificate.y_coefficients;
  auto coeff = [&](std::size_t k) { return k < yc.size() ? to_rational(yc[k]) : RatPolynomial("p"); };
  rep.y_coefficients = {
      {"p-1", rat({-1, 1}, "p"), coeff(4)},
      {"a3", rat({-17, 6, 7}, "p"), coeff(3)},
      {"a2", rat({-109, -30, 41, 18}, "p"), coeff(2)},
      {"a1", rat({-313, -274, -26, 62, 19}, "p"), coeff(1)},
      {"a0", rat({-340, -491, -309, -64, 22, 6}, "p"), coeff(0)},
  };
  const auto& sc = rep.certificate.shifted_coefficients;
  auto shifted = [&](std::size_t k) { return k < sc.size() ? sc[k] : RatPolynomial("p"); };
  rep.shifted = {
      {"a0 at p = 4", rat({432, 7277, 4875, 1248, 142, 6}, "p"), shifted(0)},
      {"a1 at p = 3", rat({1844, 3296, 1558, 290, 19}, "p"), shifted(1)},
      {"a2 at p = 2", rat({139, 350, 149, 18}, "p"), shifted(2)},
      {"a3 at p = 2", rat({23, 34, 7}, "p"), shifted(3)},
  };
  rep.m2 = {"M(n,2) at n = 13", rat({766, 2307, 511, 39, 1}, "n"), rep.certificate.m2_at_13};
  rep.m3_half = {"M(n,3)/2 at n = 13", rat({1887, 2650, 544, 40, 1}, "n"), rep.certificate.m3_half_at_13};
  return rep;
}

CaseBSummary check_case_B(const FlagParams& fp) {
  CaseBSummary s(fp);
  try {
    CaseBReport rep = case_B_resultants(fp);
    s.resultant_sign_Q = rep.resultant_sign_Q;
    s.resultant_sign_R = rep.resultant_sign_R;
    s.positive_roots_T = rep.positive_root_count_T;
    s.positive_roots_S = rep.positive_root_count_S;
    s.s_is_dual_of_t = rep.s_is_dual_of_t;
    for (const auto& b : rep.linear_branches) s.branch_solutions += static_cast<int>(b.solutions.size());
  } catch (const Error& e) {
    s.error = e.what();
  }
  return s;
}

}  // namespace flagmet

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagmet/bipolynomial.hpp"
#include "flagmet/flagspace.hpp"
#include "flagmet/interval.hpp"
#include "flagmet/polynomial.hpp"
#include "flagmet/realroots.hpp"

namespace flagmet {

/// Default refinement width for root intervals, 10^-10.
Rational default_width();

// Case A (x1 = x3 = 1) -------------------------------------------------------

IntPolynomial build_H(const FlagParams& fp);
IntPolynomial build_G(const FlagParams& fp);

/// -(x2 - 2)((n+p-1)x2 - 2(n-p-1)) / ((p-1)x2)
Interval x4_from_x2(const FlagParams& fp, const Interval& x2);
/// -(x4 - 2)((2n-p-1)x4 - 2(p-1)) / ((n-p-1)x4)
Interval x2_from_x4(const FlagParams& fp, const Interval& x4);

/// Open window of x2 values giving x4 > 0, and its counterpart for x4.
std::pair<Rational, Rational> x2_window(const FlagParams& fp);
std::pair<Rational, Rational> x4_window(const FlagParams& fp);

struct CaseASolution {
  /// Isolating interval of the root of H, width <= the requested width.
  RationalInterval x2;
  /// Isolating interval of the matching root of G, width <= the requested width.
  RationalInterval x4;
};

/// All positive solutions of the x1 = x3 = 1 system, ascending in x2.
std::vector<CaseASolution> solve_case_A(const FlagParams& fp, const Rational& width);

/// a + b * sqrt(r), with r > 0 not necessarily a perfect square.
struct QuadraticSurd {
  Rational a;
  Rational b;
  Rational r;
  std::string family;

  Interval enclosure(unsigned precision_bits = 256) const;
  /// Exact sign of f at this value, decided in Q(sqrt r).
  int sign_of_poly(const IntPolynomial& f) const;
};

/// Closed-form roots of H_{2p,p}; family "a" always, family "b" when
/// p^3 - 7p^2 + 5p - 1 < 0. Ascending within each family.
std::vector<QuadraticSurd> closed_form_n2p(long p);

// Case B (x1 = 1, x1 != x3) --------------------------------------------------

struct CaseBSystem {
  BiPolynomial F{"x2", "x4"};
  BiPolynomial G{"x2", "x4"};
  /// x3 = x3_num / x3_den.
  BiPolynomial x3_num{"x2", "x4"};
  BiPolynomial x3_den{"x2", "x4"};
};

CaseBSystem build_case_B(const FlagParams& fp);

/// Degree-4 factor of resultant(F, G, x2) in x4.
IntPolynomial build_T(const FlagParams& fp);
/// Degree-4 factor of resultant(F, G, x4) in x2.
IntPolynomial build_S(const FlagParams& fp);

/// The four linear factors of resultant(F, G, x2), in x4.
std::vector<IntPolynomial> linear_factors_Q(const FlagParams& fp);
/// The four linear factors of resultant(F, G, x4), in x2.
std::vector<IntPolynomial> linear_factors_R(const FlagParams& fp);

/// 128(n-1)^6 (p-1)^2 (n-p-1)^4, the constant of resultant(F, G, x2).
Integer constant_Q(const FlagParams& fp);
/// 128(n-1)^6 (p-1)^4 (n-p-1)^2, the constant of resultant(F, G, x4).
Integer constant_R(const FlagParams& fp);

struct BranchSolution {
  /// (1, x2, x3, x4)
  std::array<Rational, 4> metric;
  /// Kahler-Einstein metric it coincides with up to scale, e.g. "g1" or
  /// "g2 (x1<->x3)".
  std::string matches;
};

struct BranchResult {
  /// "x4" for a root of a linear factor of Q, "x2" for R.
  std::string fixed_var;
  Rational value;
  std::vector<BranchSolution> solutions;
};

struct CaseBReport {
  explicit CaseBReport(const FlagParams& fp) : params(fp) {}

  FlagParams params;
  int resultant_sign_Q = 0;
  int resultant_sign_R = 0;
  IntPolynomial Q;
  IntPolynomial R;
  IntPolynomial quartic_T;
  IntPolynomial quartic_S;
  int positive_root_count_T = 0;
  int positive_root_count_S = 0;
  /// build_S(n, p) == build_T(n, n-p).
  bool s_is_dual_of_t = false;
  std::vector<BranchResult> linear_branches;
};

/*
 * Computes both resultants, divides out constant * x^8 * linear factors *
 * quartic exactly (InexactDivision when the leftover is not +-1), counts
 * positive roots of T and S, and runs verify_case_B_branches. Throws
 * UnexpectedPositiveRoot when T has a positive root with 2p <= n or S has
 * one with 2p >= n.
 */
CaseBReport case_B_resultants(const FlagParams& fp);

/// Throws NonKahlerBranchSolution for a positive branch solution that is
/// not a Kahler-Einstein metric up to scale.
std::vector<BranchResult> verify_case_B_branches(const FlagParams& fp);

// Classification --------------------------------------------------------------

struct KahlerSolution {
  Metric metric;
  std::string label;
  Rational einstein_constant;
  Interval scale_invariant;
};

struct NonKahlerSolution {
  Metric metric;
  RationalInterval x2;
  RationalInterval x4;
  Interval einstein_constant;
  Interval scale_invariant;
  /// max(hi) - min(lo) over the four Ricci enclosures.
  Rational spread;
};

struct SolutionSet {
  SolutionSet(const FlagParams& fp, Rational w) : params(fp), width(std::move(w)), case_b(fp) {}

  FlagParams params;
  Rational width;
  std::vector<KahlerSolution> kahler;
  /// Ascending in x2.
  std::vector<NonKahlerSolution> non_kahler;
  /// Largest pairwise |r_i - r_j| bound over all solutions.
  Rational residual_bound;
  CaseBReport case_b;
  /// Every solution annihilates the three polynomial equations of the
  /// cleared-denominator system.
  bool syst5_ok = false;
  /// The x4 values match the roots of G in its positivity window one to one.
  bool duality_ok = false;
  /// Index pairs of non-Kahler solutions that are x2<->x4 swaps of each other
  /// with overlapping scale invariants (possible only for n = 2p).
  std::vector<std::pair<std::size_t, std::size_t>> swap_pairs;
};

SolutionSet classify(const FlagParams& fp, const Rational& width);

/// The pairs with four non-Kahler Einstein metrics, sorted by (n, p).
const std::vector<FlagParams>& exceptional_pairs();
bool is_exceptional(const FlagParams& fp);
inline int expected_non_kahler_count(const FlagParams& fp) { return is_exceptional(fp) ? 4 : 2; }

struct SweepRow {
  long n = 0;
  long p = 0;
  int kahler = 0;
  int non_kahler = 0;
  bool exceptional = false;
  bool matches = false;
  std::string error;
};

/// Classifies one pair for a sweep; errors land in SweepRow::error.
SweepRow sweep_row(const FlagParams& fp, const Rational& width);

/// All valid (n, p) with n_min <= n <= n_max, sorted by (n, p).
std::vector<FlagParams> pairs_in_range(long n_min, long n_max);

struct MainTheoremReport {
  long n_min = 4;
  long n_max = 4;
  std::vector<SweepRow> rows;
  std::vector<FlagParams> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/*
 * Classifies every pair with 4 <= n <= n_max (jobs workers, 0 = all
 * available) and compares non-Kahler counts with the exceptional list.
 * Throws TheoremMismatch naming the first offending pair when
 * throw_on_mismatch is set.
 */
MainTheoremReport verify_main_theorem(long n_max, int jobs = 0, bool throw_on_mismatch = true, long n_min = 4,
                                      const Rational& width = Rational(1, 1000000));

// Residuals and the polynomial form of the system ------------------------------

/// Largest |r_i - r_j| bound over all pairs.
Rational einstein_residual(const IsotropyData& data, const Metric& g);

/// Integer polynomial in x1..x4, sparse.
class MultiPolynomial {
 public:
  using Exponents = std::array<int, 4>;

  void add_term(const Exponents& e, const Integer& c);
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Interval operator()(const std::array<Interval, 4>& x) const;
  Rational operator()(const std::array<Rational, 4>& x) const;

  friend MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator-(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);

  static MultiPolynomial constant(const Integer& c);
  static MultiPolynomial var(int index);

 private:
  std::map<Exponents, Integer> terms_;
};

std::array<MultiPolynomial, 3> build_syst5(const FlagParams& fp);

/// M(n, p) as a polynomial in (n, p).
BiPolynomial build_M();

struct MCertificate {
  /// Coefficients of y^0..y^4 after n = y + 2p + 5, as polynomials in p.
  std::vector<IntPolynomial> y_coefficients;
  /// y_coefficients[k] re-expanded around p = center[k] (4, 3, 2, 2 for k = 0..3).
  std::vector<RatPolynomial> shifted_coefficients;
  std::vector<long> centers;
  /// n = y + 2p + 5, then p = q + 4.
  PositivityCertificate positivity;
  /// M(n, 2) and M(n, 3) / 2 re-expanded around n = 13.
  RatPolynomial m2_at_13;
  RatPolynomial m3_half_at_13;
};

MCertificate certify_M();

}  // namespace flagmet

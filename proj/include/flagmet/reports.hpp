#pragma once

#include <string>
#include <vector>

#include "flagmet/einstein.hpp"

namespace flagmet {

// Tables ------------------------------------------------------------------------

/// The six pairs of the published tables, in column order.
const std::vector<FlagParams>& table_pairs();

/*
 * Order g1..g4 used by the published tables: ascending x2 when 2p > n and
 * ascending x4 when 2p < n (dual pairs then line up entry by entry).
 * Returns indices into set.non_kahler.
 */
std::vector<std::size_t> table_order(const SolutionSet& set);

struct TableEntry {
  FlagParams params;
  std::string label;  // g1..g4
  RationalInterval x2;
  RationalInterval x4;
  Interval scale_invariant;
};

/// Non-Kahler metrics of the table pairs, in table order.
std::vector<TableEntry> table_entries(const Rational& width);

// Certificates -------------------------------------------------------------------

struct DualIdentityReport {
  long n_max = 0;
  int pairs_checked = 0;
  std::vector<FlagParams> failures;
  bool passed() const { return failures.empty(); }
};

/// G_{n,p} == H_{n,n-p} coefficientwise for every pair with n <= n_max.
DualIdentityReport check_dual_identity(long n_max);

struct HalfRankForm {
  QuadraticSurd value;
  /// H_{2p,p} vanishes exactly at the closed form (decided in Q(sqrt r)).
  bool exact_root = false;
  /// |closed form - midpoint of the matching isolated root| upper bound.
  Rational distance;
  bool matched = false;
};

struct HalfRankReport {
  long p = 0;
  int positive_roots = 0;
  bool family_b_expected = false;
  bool family_b_present = false;
  std::vector<HalfRankForm> forms;
  bool passed = false;
};

/// Compares the closed forms for n = 2p with the isolated roots of H_{2p,p}
/// (refined to tolerance / 4) at tolerance `tol`.
HalfRankReport check_half_rank(long p, const Rational& tol);

struct PrintedPolynomial {
  std::string name;
  RatPolynomial printed;
  RatPolynomial reproduced;
  bool matches() const { return printed == reproduced; }
};

struct MReport {
  MCertificate certificate;
  /// Leading block of M in powers of y = n - 2p - 5: (p-1), a3, a2, a1, a0.
  std::vector<PrintedPolynomial> y_coefficients;
  /// a0 around p = 4, a1 around 3, a2 and a3 around 2.
  std::vector<PrintedPolynomial> shifted;
  PrintedPolynomial m2;
  PrintedPolynomial m3_half;
  bool passed() const;
};

MReport check_M();

struct CaseBSummary {
  explicit CaseBSummary(const FlagParams& fp) : params(fp) {}

  FlagParams params;
  int resultant_sign_Q = 0;
  int resultant_sign_R = 0;
  int positive_roots_T = 0;
  int positive_roots_S = 0;
  bool s_is_dual_of_t = false;
  int branch_solutions = 0;
  std::string error;
  bool passed() const { return error.empty() && s_is_dual_of_t; }
};

CaseBSummary check_case_B(const FlagParams& fp);

}  // namespace flagmet

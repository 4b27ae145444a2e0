#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagmet/bipolynomial.hpp"
#include "flagmet/numeric.hpp"
#include "flagmet/polynomial.hpp"

namespace flagmet {

/// Half-open interval (lo, hi] with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval(Rational l, Rational h);
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo < v && v <= hi; }
};

/// f / gcd(f, f'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& f);

/// 1 + max|c_i| / |c_lead|; every real root lies strictly inside.
Rational cauchy_bound(const IntPolynomial& f);

/// Default search window for positive roots: (0, 1 + cauchy_bound].
RationalInterval positive_window(const IntPolynomial& f);

/*
 * Sturm chain of the square-free part of f, kept content-normalized at every
 * step (only positive scalings, so signs are untouched). Sign variations drop
 * zero entries, which makes V(lo) - V(hi) the exact number of distinct roots
 * in (lo, hi] even when an endpoint happens to be a root.
 */
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& f);

  const std::vector<IntPolynomial>& chain() const { return chain_; }
  int variations(const Rational& t) const;
  int count(const RationalInterval& iv) const { return variations(iv.lo) - variations(iv.hi); }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of f in (lo, hi].
int sturm_count(const IntPolynomial& f, const RationalInterval& iv);

/*
 * Disjoint, ascending intervals each holding exactly one root of f, covering
 * every root in iv. Endpoints of the returned intervals are never roots: a
 * bisection point that hits a root is nudged by (hi - lo) / 2^k, k = 2..65;
 * an endpoint of iv that is a root is moved off it by the same rule without
 * changing the set of roots in (lo, hi].
 */
std::vector<RationalInterval> isolate_roots(const IntPolynomial& f, const RationalInterval& iv);

/// Convenience: isolate_roots over positive_window(f).
std::vector<RationalInterval> isolate_positive_roots(const IntPolynomial& f);

/// Bisects an isolating interval (f(lo), f(hi) nonzero) until its width is at
/// most `width`; the returned interval still brackets a sign change.
RationalInterval refine_root(const IntPolynomial& f, const RationalInterval& iv, const Rational& width);

struct Substitution {
  std::string var;
  /// Lives in the variable pair of the polynomial after substitution; see
  /// substitute().
  BiPolynomial expr;
};

struct PositivityCertificate {
  /// (variable, substituted expression) in application order.
  std::vector<std::pair<std::string, std::string>> shifts;
  /// Coefficients of the fully substituted polynomial, by increasing exponents.
  std::vector<Integer> terminal_coefficients;
  BiPolynomial shifted{"", ""};
  /// True iff every terminal coefficient is >= 0 and at least one is > 0.
  bool verdict = false;
};

/*
 * Applies the region substitutions in order and inspects the coefficients.
 * Each substitution must have the form var = newvar + (affine part with
 * nonnegative coefficients); a true verdict then proves f >= 0 on the
 * translated orthant and f > 0 wherever a positive-coefficient monomial is
 * nonzero (in particular everywhere when the constant term is positive).
 */
PositivityCertificate certify_positive(const BiPolynomial& f, const std::vector<Substitution>& region);

}  // namespace flagmet

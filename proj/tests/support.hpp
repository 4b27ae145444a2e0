#pragma once

// Independent oracles and random generators shared by the test binaries.
// Nothing here calls the resultant, Sturm or root code under test.

#include <random>
#include <string>
#include <vector>

#include "flagmet/bipolynomial.hpp"
#include "flagmet/polynomial.hpp"

namespace flagmet::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);

/// num / den in lowest terms (the two-argument mpq_class constructor does not
/// canonicalize).
inline Rational ratio(long num, long den) { return make_rational(Integer(num), Integer(den)); }

/// Degree exactly `degree`, coefficients in [-bound, bound].
IntPolynomial random_poly(Rng& rng, int degree, long bound, const std::string& var = "x");

/// num / den with |num| <= num_bound, 1 <= den <= den_bound.
Rational random_rational(Rng& rng, long num_bound, long den_bound);
Rational random_positive_rational(Rng& rng, long num_bound, long den_bound);

/// Gaussian elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Sylvester matrix: coefficients of f (highest first) repeated deg g times,
/// then those of g repeated deg f times.
std::vector<std::vector<Rational>> sylvester_matrix(const RatPolynomial& f, const RatPolynomial& g);

Rational sylvester_resultant(const RatPolynomial& f, const RatPolynomial& g);

/// f(x) as a polynomial in x only, embedded in the pair (x, y).
BiPolynomial embed_x(const IntPolynomial& f);

/// Random bivariate polynomial in (x, y) with degree_in(x) == dx exactly.
BiPolynomial random_bipoly(Rng& rng, int dx, int dy, long bound);

struct ScanResult {
  int sign_changes = 0;
  /// A grid value was too close to zero, or two roots may hide in one cell.
  bool ambiguous = false;
};

/// Dense double-precision sign-change scan on the grid lo + k * step.
ScanResult scan_sign_changes(const IntPolynomial& f, double lo, double hi, double step);

}  // namespace flagmet::testing

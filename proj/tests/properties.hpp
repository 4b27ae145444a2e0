#pragma once

// Randomized property suites. Each returns ok plus a description of the
// first counterexample; the unit tests and the acceptance runner share them.

#include <cstdint>
#include <string>

namespace flagmet::testing {

struct PropertyResult {
  bool ok = true;
  int cases = 0;
  std::string detail;
};

/// (f+g)h = fh + gh, deg(fg) = deg f + deg g, exact_divide(fg, g) = f,
/// taylor_shift round trip.
PropertyResult ring_laws(std::uint64_t seed, int trials);

/// res(f, gh) = res(f, g) res(f, h); res = 0 iff gcd nonconstant; Bareiss
/// matches the rational Sylvester determinant, also after specializing y.
PropertyResult resultant_laws(std::uint64_t seed, int trials);

/// Sturm counts against a dense sign-change scan at step 1e-4 on random
/// square-free polynomials, within the Cauchy bound; isolation intervals are
/// disjoint with count 1 each and refinement keeps a sign change.
PropertyResult sturm_vs_scan(std::uint64_t seed, int polynomials);

/// r_i(tg) = r_i(g)/t, S(tg) = S(g)/t, H(tg) = H(g) for random metrics,
/// pairs and t > 0.
PropertyResult homogeneity(std::uint64_t seed, int trials);

}  // namespace flagmet::testing

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagmet/einstein.hpp"
#include "flagmet/flagspace.hpp"
#include "flagmet/numeric.hpp"
#include "flagmet/polynomial.hpp"

namespace flagmet {

/// Reference sweep, one pair after another.
std::vector<SweepRow> sweep_serial(const std::vector<FlagParams>& pairs, const Rational& width);

/// OpenMP sweep with dynamic scheduling; rows come back in input order.
/// jobs <= 0 uses every available thread.
std::vector<SweepRow> sweep_parallel(const std::vector<FlagParams>& pairs, const Rational& width, int jobs = 0);

using Sample = std::pair<Rational, Rational>;

/// Points from + k (to - from) / (samples - 1), k = 0..samples-1, with exact values f(x).
std::vector<Sample> sample_serial(const IntPolynomial& f, const Rational& from, const Rational& to, long samples);
std::vector<Sample> sample_parallel(const IntPolynomial& f, const Rational& from, const Rational& to, long samples,
                                    int jobs = 0);

/// Number of threads an OpenMP region would use for `jobs`.
int resolve_jobs(int jobs);

}  // namespace flagmet

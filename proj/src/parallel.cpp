#include "flagmet/parallel.hpp"

#include <omp.h>

#include "flagmet/error.hpp"

namespace flagmet {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

std::vector<SweepRow> sweep_serial(const std::vector<FlagParams>& pairs, const Rational& width) {
  std::vector<SweepRow> rows;
  rows.reserve(pairs.size());
  for (const auto& fp : pairs) rows.push_back(sweep_row(fp, width));
  return rows;
}

std::vector<SweepRow> sweep_parallel(const std::vector<FlagParams>& pairs, const Rational& width, int jobs) {
  std::vector<SweepRow> rows(pairs.size());
  const auto count = static_cast<long>(pairs.size());
  // GMP values are not shared between threads; each slot owns its copy.
  std::vector<Rational> widths(pairs.size(), width);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
  for (long i = 0; i < count; ++i) {
    auto k = static_cast<std::size_t>(i);
    rows[k] = sweep_row(pairs[k], widths[k]);
  }
  return rows;
}

namespace {

void check_range(const Rational& from, const Rational& to, long samples) {
  if (!(from < to)) throw Error(ErrorKind::InvalidParams, "sample range needs from < to");
  if (samples < 2) throw Error(ErrorKind::InvalidParams, "need at least 2 samples");
}

Rational sample_point(const Rational& from, const Rational& step, long k) { return from + step * Rational(k); }

}  // namespace

std::vector<Sample> sample_serial(const IntPolynomial& f, const Rational& from, const Rational& to, long samples) {
  check_range(from, to, samples);
  Rational step = (to - from) / Rational(samples - 1);
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (long k = 0; k < samples; ++k) {
    Rational x = sample_point(from, step, k);
    out.emplace_back(x, eval(f, x));
  }
  return out;
}

std::vector<Sample> sample_parallel(const IntPolynomial& f, const Rational& from, const Rational& to, long samples,
                                    int jobs) {
  check_range(from, to, samples);
  const Rational step = (to - from) / Rational(samples - 1);
  std::vector<Sample> out(static_cast<std::size_t>(samples));
#pragma omp parallel num_threads(resolve_jobs(jobs))
  {
    // Private copies keep the inputs read-only across threads.
    const IntPolynomial local_f = f;
    const Rational local_from = from;
    const Rational local_step = step;
#pragma omp for schedule(static)
    for (long k = 0; k < samples; ++k) {
      Rational x = sample_point(local_from, local_step, k);
      out[static_cast<std::size_t>(k)] = {x, eval(local_f, x)};
    }
  }
  return out;
}

}  // namespace flagmet

#include "support.hpp"

#include <cmath>
#include <stdexcept>

namespace flagmet::testing {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntPolynomial random_poly(Rng& rng, int degree, long bound, const std::string& var) {
  std::vector<Integer> c(degree + 1);
  for (auto& v : c) v = uniform(rng, -bound, bound);
  while (c.back() == 0) c.back() = uniform(rng, -bound, bound);
  return IntPolynomial(std::move(c), var);
}

Rational random_rational(Rng& rng, long num_bound, long den_bound) {
  Rational r(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
  r.canonicalize();
  return r;
}

Rational random_positive_rational(Rng& rng, long num_bound, long den_bound) {
  Rational r(uniform(rng, 1, num_bound), uniform(rng, 1, den_bound));
  r.canonicalize();
  return r;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> sylvester_matrix(const RatPolynomial& f, const RatPolynomial& g) {
  const int df = f.degree(), dg = g.degree();
  if (df < 0 || dg < 0) throw std::invalid_argument("sylvester_matrix of zero polynomial");
  const int size = df + dg;
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i) m[r][r + i] = f.coeff(df - i);
  for (int r = 0; r < df; ++r)
    for (int i = 0; i <= dg; ++i) m[dg + r][r + i] = g.coeff(dg - i);
  return m;
}

Rational sylvester_resultant(const RatPolynomial& f, const RatPolynomial& g) {
  return determinant(sylvester_matrix(f, g));
}

BiPolynomial embed_x(const IntPolynomial& f) {
  BiPolynomial out("x", "y");
  for (int i = 0; i <= f.degree(); ++i) out.add_term(i, 0, f.coeff(i));
  return out;
}

BiPolynomial random_bipoly(Rng& rng, int dx, int dy, long bound) {
  BiPolynomial out("x", "y");
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j) out.add_term(i, j, uniform(rng, -bound, bound));
  while (out.degree_in(0) != dx) out.add_term(dx, uniform(rng, 0, dy), uniform(rng, 1, bound));
  return out;
}

ScanResult scan_sign_changes(const IntPolynomial& f, double lo, double hi, double step) {
  std::vector<double> c, dc;
  for (const auto& v : f.coeffs()) c.push_back(v.get_d());
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<double>(i));
  auto horner = [](const std::vector<double>& a, double x, double& scale) {
    double acc = 0, s = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      acc = acc * x + *it;
      s = s * std::fabs(x) + std::fabs(*it);
    }
    scale = s;
    return acc;
  };
  ScanResult out;
  const long steps = static_cast<long>(std::ceil((hi - lo) / step));
  double prev = 0, prev_d = 0, scale = 0, dscale = 0;
  for (long k = 0; k <= steps; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    const double v = horner(c, x, scale);
    const double d = horner(dc, x, dscale);
    if (std::fabs(v) <= 1e-12 * scale) out.ambiguous = true;
    if (k > 0) {
      if ((v > 0) != (prev > 0)) {
        ++out.sign_changes;
      } else if ((d > 0) != (prev_d > 0) &&
                 std::min(std::fabs(v), std::fabs(prev)) <= step * std::max(std::fabs(d), std::fabs(prev_d))) {
        out.ambiguous = true;
      }
    }
    prev = v;
    prev_d = d;
  }
  return out;
}

}  // namespace flagmet::testing

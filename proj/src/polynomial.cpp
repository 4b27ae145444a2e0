#include "flagmet/polynomial.hpp"

#include <sstream>

#include "flagmet/error.hpp"

namespace flagmet {

Rational eval(const IntPolynomial& f, const Rational& t) {
  // Horner over Z with the denominator tracked separately keeps the
  // intermediate numbers integral: f(a/b) * b^deg = sum c_i a^i b^(deg-i).
  if (f.is_zero()) return Rational(0);
  const Integer& a = t.get_num();
  const Integer& b = t.get_den();
  Integer acc = 0;
  Integer bpow = 1;
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * a + c[k] * bpow;
    bpow *= b;
  }
  // acc = sum c_i a^i b^(deg - i), bpow = b^(deg+1)
  return make_rational(acc * b, bpow);
}

int sign_at(const IntPolynomial& f, const Rational& t) { return sgn(eval(f, t)); }

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
  return RatPolynomial(std::move(c), f.var());
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  Integer g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<Integer> c(f.coeffs());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c), f.var());
}

IntPolynomial clear_denominators(const RatPolynomial& f) {
  if (f.is_zero()) return IntPolynomial(f.var());
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    out.push_back(v);
  }
  IntPolynomial scaled(std::move(out), f.var());
  Integer g = content(scaled);
  std::vector<Integer> c(scaled.coeffs());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c), f.var());
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (f.degree() < g.degree()) return {RatPolynomial(f.var()), f};
  std::vector<Rational> rem(f.coeffs());
  const int dg = g.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(f.degree() - dg + 1), Rational(0));
  const Rational& lead = g.leading();
  for (int k = f.degree(); k >= dg; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lead;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k - dg)] = q;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k - dg + j)] -= q * g.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {RatPolynomial(std::move(quo), f.var()), RatPolynomial(std::move(rem), f.var())};
}

IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (f.is_zero()) return IntPolynomial(f.var());
  if (f.degree() < g.degree())
    throw Error(ErrorKind::InexactDivision, to_string(f) + " is not divisible by " + to_string(g));
  // Integer long division; every step must divide exactly.
  std::vector<Integer> rem(f.coeffs());
  const int dg = g.degree();
  std::vector<Integer> quo(static_cast<std::size_t>(f.degree() - dg + 1), Integer(0));
  const Integer& lead = g.leading();
  for (int k = f.degree(); k >= dg; --k) {
    Integer& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(ErrorKind::InexactDivision, to_string(f) + " is not divisible by " + to_string(g));
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quo[static_cast<std::size_t>(k - dg)] = q;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k - dg + j)] -= q * g.coeffs()[static_cast<std::size_t>(j)];
  }
  for (int j = 0; j < dg; ++j) {
    if (rem[static_cast<std::size_t>(j)] != 0)
      throw Error(ErrorKind::InexactDivision, to_string(f) + " is not divisible by " + to_string(g));
  }
  return IntPolynomial(std::move(quo), f.var());
}

IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial a = primitive_part(f);
  IntPolynomial b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    (void)q;
    a = std::move(b);
    b = primitive_part(clear_denominators(r));
  }
  return a;
}

RatPolynomial taylor_shift(const RatPolynomial& f, const Rational& a) {
  // Repeated synthetic division by (x - a): the k-th remainder is the
  // coefficient of y^k.
  std::vector<Rational> c(f.coeffs());
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) c[i - 1] += a * c[i];
  }
  return RatPolynomial(std::move(c), f.var());
}

RatPolynomial taylor_shift(const IntPolynomial& f, const Rational& a) { return taylor_shift(to_rational(f), a); }

namespace {

template <typename Coeff>
std::string format_poly(const Polynomial<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    Coeff c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != 1 || k == 0) {
      out << mag.get_str();
      if (k > 0) out << "*";
    }
    if (k > 0) out << f.var();
    if (k > 1) out << "^" << k;
    first = false;
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntPolynomial& f) { return format_poly(f); }
std::string to_string(const RatPolynomial& f) { return format_poly(f); }

}  // namespace flagmet

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "flagmet/numeric.hpp"

namespace flagmet {

/*
 * Dense univariate polynomial, coefficient index == degree. The zero
 * polynomial is the empty coefficient vector; any other value keeps a
 * nonzero leading coefficient. The variable name is carried for printing
 * and for sanity checks when combining polynomials, nothing more.
 */
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::string var) : var_(std::move(var)) {}
  Polynomial(std::vector<Coeff> coeffs, std::string var = "x")
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }
  Polynomial(std::initializer_list<Coeff> coeffs, std::string var = "x")
      : coeffs_(coeffs), var_(std::move(var)) {
    trim();
  }

  static Polynomial constant(const Coeff& c, std::string var = "x") {
    return Polynomial(std::vector<Coeff>{c}, std::move(var));
  }
  static Polynomial monomial(const Coeff& c, std::size_t degree, std::string var = "x") {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = c;
    return Polynomial(std::move(v), std::move(var));
  }
  /// lead*x + constant_term
  static Polynomial linear(const Coeff& lead, const Coeff& constant_term, std::string var = "x") {
    return Polynomial(std::vector<Coeff>{constant_term, lead}, std::move(var));
  }

  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  /// Horner evaluation at any value type the coefficients multiply into.
  template <typename Value>
  Value operator()(const Value& t) const {
    Value acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * t + Value(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(var_);
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d), var_);
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.var_);
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r), a.var_);
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(Coeff(1), var_);
    Polynomial base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  /// Coefficientwise comparison; variable names are ignored.
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
  std::string var_ = "x";
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Exact value f(t).
Rational eval(const IntPolynomial& f, const Rational& t);
int sign_at(const IntPolynomial& f, const Rational& t);

RatPolynomial to_rational(const IntPolynomial& f);

/// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Integer content(const IntPolynomial& f);
/// f / content(f) with a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);
/// Multiplies by a positive rational so the result is a primitive integer
/// polynomial. The sign of every value is preserved.
IntPolynomial clear_denominators(const RatPolynomial& f);

/// Quotient and remainder over the rationals; throws ZeroPolynomial when g == 0.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g);

/// q with f == q * g in Z[x]. Throws InexactDivision if the remainder is
/// nonzero or the quotient is not integral.
IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g);

/// Primitive gcd with positive leading coefficient (zero only if both are zero).
IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g);

/// g with g(y) == f(y + a).
RatPolynomial taylor_shift(const RatPolynomial& f, const Rational& a);
RatPolynomial taylor_shift(const IntPolynomial& f, const Rational& a);

std::string to_string(const IntPolynomial& f);
std::string to_string(const RatPolynomial& f);

}  // namespace flagmet

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagmet/numeric.hpp"
#include "flagmet/polynomial.hpp"

namespace flagmet {

/*
 * Sparse polynomial in two named variables with integer coefficients.
 * Terms are keyed by the exponent pair (i, j) for vars()[0]^i * vars()[1]^j
 * and no zero coefficient is ever stored.
 */
class BiPolynomial {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Integer>;

  BiPolynomial(std::string first, std::string second) : vars_{std::move(first), std::move(second)} {}

  static BiPolynomial constant(const Integer& c, std::string first, std::string second);
  /// The variable `name`, which must be one of the two.
  static BiPolynomial variable(std::string_view name, std::string first, std::string second);

  const std::array<std::string, 2>& vars() const { return vars_; }
  std::optional<int> var_index(std::string_view name) const;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int i, int j) const;
  void add_term(int i, int j, const Integer& c);

  /// -1 for the zero polynomial.
  int degree_in(int index) const;
  int total_degree() const;

  /// Coefficients C_k with f = sum_k C_k * v^k, v the variable at `index`;
  /// each C_k is a polynomial in the other variable.
  std::vector<IntPolynomial> collect(int index) const;

  /// Specializes the variable at `index` to t; the result is a polynomial in
  /// the remaining variable.
  RatPolynomial specialize(int index, const Rational& t) const;
  Rational evaluate(const Rational& a, const Rational& b) const;

  /// Integer polynomial in the single variable `name` when the other variable
  /// does not occur.
  IntPolynomial as_univariate(int index) const;

  BiPolynomial operator-() const;
  BiPolynomial& operator+=(const BiPolynomial& o);
  BiPolynomial& operator-=(const BiPolynomial& o);
  BiPolynomial& operator*=(const Integer& s);
  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator*(BiPolynomial a, const Integer& s) { return a *= s; }
  friend BiPolynomial operator*(const Integer& s, BiPolynomial a) { return a *= s; }
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
  BiPolynomial pow(unsigned e) const;

  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_vars(const BiPolynomial& o) const;

  std::array<std::string, 2> vars_;
  Terms terms_;
};

/*
 * Composition f(..., var := expr, ...). `expr` lives in the variable pair of
 * the result: the slot of `var` carries the new variable name (possibly the
 * same one) and the other slot must match f's other variable.
 */
BiPolynomial substitute(const BiPolynomial& f, std::string_view var, const BiPolynomial& expr);

/*
 * Sylvester resultant eliminating `eliminate`. Rows hold the coefficients of
 * f (highest degree first) repeated deg_g times, then those of g repeated
 * deg_f times, each row shifted one column right. The determinant is taken
 * over Z[y] (y the surviving variable) by fraction-free Bareiss elimination.
 */
IntPolynomial resultant(const BiPolynomial& f, const BiPolynomial& g, std::string_view eliminate);

/// Determinant of a square matrix over Z[y] by Bareiss elimination.
IntPolynomial bareiss_determinant(std::vector<std::vector<IntPolynomial>> m);

std::string to_string(const BiPolynomial& f);

}  // namespace flagmet

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagmet {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "a", "a/b", decimal "1.25" and scientific "1e-10".
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("7/1"), which keeps serialized
/// output uniform.
std::string to_fraction_string(const Rational& value);

/// Rounds half-to-even at the given number of decimals and prints in fixed
/// notation, e.g. round_half_even(1/3, 4) == "0.3333".
std::string round_half_even(const Rational& value, int decimals);

/// Truncation toward zero at the given number of decimals.
std::string truncate_decimal(const Rational& value, int decimals);

/// Fixed notation with exactly `digits` significant digits (half-even).
std::string significant_digits(const Rational& value, int digits);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

inline int sign_of(const Rational& value) { return sgn(value); }
inline int sign_of(const Integer& value) { return sgn(value); }

/// 10^-k as an exact rational.
Rational ten_to_minus(unsigned k);

}  // namespace flagmet

#include "flagmet/numeric.hpp"

#include <cctype>
#include <string>

#include "flagmet/error.hpp"

namespace flagmet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NoVariable: return "NoVariable";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::EndpointRoot: return "EndpointRoot";
    case ErrorKind::UncertifiedSign: return "UncertifiedSign";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonKahlerBranchSolution: return "NonKahlerBranchSolution";
    case ErrorKind::UnexpectedPositiveRoot: return "UnexpectedPositiveRoot";
    case ErrorKind::TheoremMismatch: return "TheoremMismatch";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidParams, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view digits) {
  if (digits.empty()) throw Error(ErrorKind::InvalidParams, "empty number");
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  if (start == digits.size()) throw Error(ErrorKind::InvalidParams, "malformed number");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw Error(ErrorKind::InvalidParams, "malformed number '" + std::string(digits) + "'");
  }
  std::string s(digits[0] == '+' ? digits.substr(1) : digits);
  return Integer(s, 10);
}

Integer pow10(unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rational ten_to_minus(unsigned k) { return make_rational(1, pow10(k)); }

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(text.substr(e + 1)).get_si();
    text = text.substr(0, e);
  }
  Integer mantissa;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string joined(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (joined.empty() || joined == "-" || joined == "+") joined += "0";
    mantissa = parse_integer(joined + frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    mantissa = parse_integer(text);
  }
  if (exponent >= 0) return Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
  return make_rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor_of(const Rational& value) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& value) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

namespace {

// value * 10^decimals rounded half-to-even to an integer.
Integer scaled_half_even(const Rational& value, unsigned decimals) {
  Rational scaled = value * Rational(pow10(decimals));
  Integer fl = floor_of(scaled);
  Rational frac = scaled - Rational(fl);
  Rational half(1, 2);
  if (frac > half || (frac == half && fl % 2 != 0)) return fl + 1;
  return fl;
}

std::string place_point(const Integer& scaled, unsigned decimals) {
  bool negative = scaled < 0;
  std::string digits = Integer(abs(scaled)).get_str();
  if (decimals > 0) {
    if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimals, ".");
  }
  bool all_zero = scaled == 0;
  return (negative && !all_zero ? "-" : "") + digits;
}

}  // namespace

std::string round_half_even(const Rational& value, int decimals) {
  auto d = static_cast<unsigned>(decimals);
  return place_point(scaled_half_even(value, d), d);
}

std::string truncate_decimal(const Rational& value, int decimals) {
  auto d = static_cast<unsigned>(decimals);
  Rational scaled = value * Rational(pow10(d));
  Integer t;
  mpz_tdiv_q(t.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return place_point(t, d);
}

std::string significant_digits(const Rational& value, int digits) {
  if (value == 0) return "0";
  // Find e with 10^e <= |value| < 10^(e+1).
  Rational mag = abs(value);
  long e = static_cast<long>(mpz_sizeinbase(floor_of(mag).get_mpz_t(), 10)) - 1;
  if (mag < 1) {
    e = -1;
    while (mag * Rational(pow10(static_cast<unsigned>(-e))) < 1) --e;
  } else {
    while (Rational(pow10(static_cast<unsigned>(e))) > mag) --e;
    while (Rational(pow10(static_cast<unsigned>(e + 1))) <= mag) ++e;
  }
  long decimals = digits - 1 - e;
  if (decimals >= 0) {
    std::string s = round_half_even(value, static_cast<int>(decimals));
    return s;
  }
  // Large magnitude: round to a multiple of 10^(-decimals).
  Rational scale(pow10(static_cast<unsigned>(-decimals)));
  Integer q = scaled_half_even(value / scale, 0);
  return Integer(q * pow10(static_cast<unsigned>(-decimals))).get_str();
}

}  // namespace flagmet

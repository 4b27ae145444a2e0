#include "flagmet/realroots.hpp"

#include <algorithm>

#include "flagmet/error.hpp"

namespace flagmet {

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidParams, "interval needs lo < hi");
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of the zero polynomial");
  IntPolynomial p = primitive_part(f);
  if (p.degree() <= 0) return p;
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return primitive_part(exact_divide(p, g));
}

Rational cauchy_bound(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root bound of the zero polynomial");
  Integer top = 0;
  for (int i = 0; i < f.degree(); ++i) top = std::max(top, Integer(abs(f.coeffs()[static_cast<std::size_t>(i)])));
  return Rational(1) + make_rational(top, abs(f.leading()));
}

RationalInterval positive_window(const IntPolynomial& f) {
  return {Rational(0), Rational(1) + cauchy_bound(f)};
}

SturmSequence::SturmSequence(const IntPolynomial& f) {
  IntPolynomial p0 = squarefree_part(f);
  chain_.push_back(p0);
  if (p0.degree() <= 0) return;
  chain_.push_back(clear_denominators(to_rational(p0.derivative())));
  while (chain_.back().degree() > 0) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    (void)q;
    if (r.is_zero()) break;
    chain_.push_back(clear_denominators(-r));
  }
}

int SturmSequence::variations(const Rational& t) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sturm_count(const IntPolynomial& f, const RationalInterval& iv) { return SturmSequence(f).count(iv); }

namespace {

// A point near `center` that is not a root of g: center itself if possible,
// else center +- span / 2^k for k = 2..65.
Rational nudge_off_root(const IntPolynomial& g, const Rational& center, const Rational& span, bool allow_left,
                        bool allow_right) {
  if (sign_at(g, center) != 0) return center;
  Rational step = span / 4;
  for (int k = 2; k <= 65; ++k, step /= 2) {
    if (allow_right && sign_at(g, center + step) != 0) return center + step;
    if (allow_left && sign_at(g, center - step) != 0) return center - step;
  }
  throw Error(ErrorKind::EndpointRoot, "could not move " + to_fraction_string(center) + " off a root");
}

void bisect(const SturmSequence& s, const IntPolynomial& g, const RationalInterval& iv, int count,
            std::vector<RationalInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(iv);
    return;
  }
  Rational w = iv.width();
  Rational mid = nudge_off_root(g, iv.midpoint(), w, true, true);
  RationalInterval left(iv.lo, mid), right(mid, iv.hi);
  int cl = s.count(left);
  bisect(s, g, left, cl, out);
  bisect(s, g, right, count - cl, out);
}

}  // namespace

std::vector<RationalInterval> isolate_roots(const IntPolynomial& f, const RationalInterval& iv) {
  SturmSequence s(f);
  const IntPolynomial& g = s.chain().front();
  if (g.degree() <= 0) return {};
  Rational lo = iv.lo, hi = iv.hi;
  const Rational w = iv.width();
  // lo is excluded: move it right past no root. hi is included: move it
  // right as well so that the root at hi stays inside.
  if (sign_at(g, lo) == 0) {
    Rational step = w / 4;
    bool moved = false;
    for (int k = 2; k <= 65 && !moved; ++k, step /= 2) {
      Rational c = lo + step;
      if (sign_at(g, c) != 0 && s.count({lo, c}) == 0) {
        lo = c;
        moved = true;
      }
    }
    if (!moved) throw Error(ErrorKind::EndpointRoot, "lower endpoint is a root");
  }
  if (sign_at(g, hi) == 0) {
    Rational step = w / 4;
    bool moved = false;
    for (int k = 2; k <= 65 && !moved; ++k, step /= 2) {
      Rational c = hi + step;
      if (sign_at(g, c) != 0 && s.count({hi, c}) == 0) {
        hi = c;
        moved = true;
      }
    }
    if (!moved) throw Error(ErrorKind::EndpointRoot, "upper endpoint is a root");
  }
  std::vector<RationalInterval> out;
  RationalInterval start(lo, hi);
  bisect(s, g, start, s.count(start), out);
  return out;
}

std::vector<RationalInterval> isolate_positive_roots(const IntPolynomial& f) {
  return isolate_roots(f, positive_window(f));
}

RationalInterval refine_root(const IntPolynomial& f, const RationalInterval& iv, const Rational& width) {
  if (width <= 0) throw Error(ErrorKind::InvalidParams, "refinement width must be positive");
  IntPolynomial g = squarefree_part(f);
  Rational lo = iv.lo, hi = iv.hi;
  int slo = sign_at(g, lo), shi = sign_at(g, hi);
  if (slo == 0 || shi == 0) throw Error(ErrorKind::EndpointRoot, "isolating interval endpoint is a root");
  if (slo == shi) throw Error(ErrorKind::UncertifiedSign, "no sign change on the isolating interval");
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = sign_at(g, mid);
    if (sm == 0) {
      // The root is exact; shrink around it to non-root endpoints.
      Rational half = width / 2;
      return {std::max(lo, Rational(mid - half)), std::min(hi, Rational(mid + half))};
    }
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

namespace {

// var = newvar + c0 + c1 * other with c0, c1 >= 0.
void check_shift_form(const BiPolynomial& expr, int slot) {
  if (expr.total_degree() > 1) throw Error(ErrorKind::CertificateFailure, "shift must be affine");
  bool has_self = false;
  for (const auto& [e, c] : expr.terms()) {
    bool is_self = (slot == 0 && e == BiPolynomial::Exponents{1, 0}) || (slot == 1 && e == BiPolynomial::Exponents{0, 1});
    if (is_self) {
      if (c != 1) throw Error(ErrorKind::CertificateFailure, "shift must keep a unit coefficient on the new variable");
      has_self = true;
    } else if (c < 0) {
      throw Error(ErrorKind::CertificateFailure, "shift offsets must be nonnegative");
    }
  }
  if (!has_self) throw Error(ErrorKind::CertificateFailure, "shift must contain the new variable");
}

}  // namespace

PositivityCertificate certify_positive(const BiPolynomial& f, const std::vector<Substitution>& region) {
  PositivityCertificate cert;
  BiPolynomial current = f;
  for (const auto& sub : region) {
    auto idx = current.var_index(sub.var);
    if (!idx) throw Error(ErrorKind::NoVariable, "variable '" + sub.var + "' not in polynomial");
    check_shift_form(sub.expr, *idx);
    cert.shifts.emplace_back(sub.var, to_string(sub.expr));
    current = substitute(current, sub.var, sub.expr);
  }
  bool all_nonnegative = true;
  bool any_positive = false;
  for (const auto& [e, c] : current.terms()) {
    cert.terminal_coefficients.push_back(c);
    if (c < 0) all_nonnegative = false;
    if (c > 0) any_positive = true;
  }
  cert.verdict = all_nonnegative && any_positive;
  cert.shifted = std::move(current);
  return cert;
}

}  // namespace flagmet

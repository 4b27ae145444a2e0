#include "flagmet/bipolynomial.hpp"

#include <algorithm>
#include <sstream>

#include "flagmet/error.hpp"

namespace flagmet {

BiPolynomial BiPolynomial::constant(const Integer& c, std::string first, std::string second) {
  BiPolynomial f(std::move(first), std::move(second));
  f.add_term(0, 0, c);
  return f;
}

BiPolynomial BiPolynomial::variable(std::string_view name, std::string first, std::string second) {
  BiPolynomial f(std::move(first), std::move(second));
  auto idx = f.var_index(name);
  if (!idx) throw Error(ErrorKind::NoVariable, "variable '" + std::string(name) + "' not in pair");
  f.add_term(*idx == 0 ? 1 : 0, *idx == 1 ? 1 : 0, 1);
  return f;
}

std::optional<int> BiPolynomial::var_index(std::string_view name) const {
  if (vars_[0] == name) return 0;
  if (vars_[1] == name) return 1;
  return std::nullopt;
}

Integer BiPolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiPolynomial::add_term(int i, int j, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiPolynomial::degree_in(int index) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, index == 0 ? e.first : e.second);
  return d;
}

int BiPolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

std::vector<IntPolynomial> BiPolynomial::collect(int index) const {
  const int other = 1 - index;
  const int deg = degree_in(index);
  const int odeg = degree_in(other);
  std::vector<std::vector<Integer>> raw(static_cast<std::size_t>(deg + 1),
                                        std::vector<Integer>(static_cast<std::size_t>(std::max(odeg, 0) + 1)));
  for (const auto& [e, c] : terms_) {
    int k = index == 0 ? e.first : e.second;
    int m = index == 0 ? e.second : e.first;
    raw[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] = c;
  }
  std::vector<IntPolynomial> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r), vars_[static_cast<std::size_t>(other)]);
  return out;
}

RatPolynomial BiPolynomial::specialize(int index, const Rational& t) const {
  const int other = 1 - index;
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_in(other), 0) + 1), Rational(0));
  for (const auto& [e, coef] : terms_) {
    int k = index == 0 ? e.first : e.second;
    int m = index == 0 ? e.second : e.first;
    Rational tp;
    mpz_pow_ui(tp.get_num_mpz_t(), t.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(tp.get_den_mpz_t(), t.get_den_mpz_t(), static_cast<unsigned long>(k));
    c[static_cast<std::size_t>(m)] += Rational(coef) * tp;
  }
  return RatPolynomial(std::move(c), vars_[static_cast<std::size_t>(other)]);
}

Rational BiPolynomial::evaluate(const Rational& a, const Rational& b) const {
  RatPolynomial g = specialize(0, a);
  return g(b);
}

IntPolynomial BiPolynomial::as_univariate(int index) const {
  const int other = 1 - index;
  std::vector<Integer> c(static_cast<std::size_t>(std::max(degree_in(index), 0) + 1));
  for (const auto& [e, coef] : terms_) {
    int k = index == 0 ? e.first : e.second;
    int m = index == 0 ? e.second : e.first;
    if (m != 0)
      throw Error(ErrorKind::NoVariable, "polynomial still depends on " + vars_[static_cast<std::size_t>(other)]);
    c[static_cast<std::size_t>(k)] = coef;
  }
  return IntPolynomial(std::move(c), vars_[static_cast<std::size_t>(index)]);
}

void BiPolynomial::require_same_vars(const BiPolynomial& o) const {
  if (vars_ != o.vars_)
    throw Error(ErrorKind::NoVariable, "variable pairs differ: (" + vars_[0] + "," + vars_[1] + ") vs (" +
                                           o.vars_[0] + "," + o.vars_[1] + ")");
}

BiPolynomial BiPolynomial::operator-() const {
  BiPolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPolynomial& BiPolynomial::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
  a.require_same_vars(b);
  BiPolynomial r(a.vars_[0], a.vars_[1]);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BiPolynomial BiPolynomial::pow(unsigned e) const {
  BiPolynomial result = constant(1, vars_[0], vars_[1]);
  BiPolynomial base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

BiPolynomial substitute(const BiPolynomial& f, std::string_view var, const BiPolynomial& expr) {
  auto idx = f.var_index(var);
  if (!idx) throw Error(ErrorKind::NoVariable, "variable '" + std::string(var) + "' not in polynomial");
  const int other = 1 - *idx;
  if (expr.vars()[static_cast<std::size_t>(other)] != f.vars()[static_cast<std::size_t>(other)])
    throw Error(ErrorKind::NoVariable, "substitution must keep variable '" +
                                           f.vars()[static_cast<std::size_t>(other)] + "' in its slot");
  const auto& rv = expr.vars();
  BiPolynomial result(rv[0], rv[1]);
  // Group f by the power of the substituted variable and reuse powers of expr.
  std::vector<IntPolynomial> parts = f.collect(*idx);
  BiPolynomial power = BiPolynomial::constant(1, rv[0], rv[1]);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) power = power * expr;
    const auto& part = parts[k];
    if (part.is_zero()) continue;
    BiPolynomial lifted(rv[0], rv[1]);
    for (std::size_t m = 0; m < part.coeffs().size(); ++m) {
      int i = other == 0 ? static_cast<int>(m) : 0;
      int j = other == 1 ? static_cast<int>(m) : 0;
      lifted.add_term(i, j, part.coeffs()[m]);
    }
    result += lifted * power;
  }
  return result;
}

IntPolynomial bareiss_determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);
  std::string var = m[0][0].var();
  int sign = 1;
  IntPolynomial prev = IntPolynomial::constant(1, var);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return IntPolynomial(var);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPolynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev);
      }
    }
    prev = m[k][k];
  }
  IntPolynomial det = m[n - 1][n - 1];
  det.set_var(var);
  return sign < 0 ? -det : det;
}

IntPolynomial resultant(const BiPolynomial& f, const BiPolynomial& g, std::string_view eliminate) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of a zero polynomial");
  if (f.vars() != g.vars()) throw Error(ErrorKind::NoVariable, "resultant operands use different variables");
  auto idx = f.var_index(eliminate);
  if (!idx || (f.degree_in(*idx) <= 0 && g.degree_in(*idx) <= 0))
    throw Error(ErrorKind::NoVariable, "'" + std::string(eliminate) + "' occurs in neither polynomial");
  const std::string surviving = f.vars()[static_cast<std::size_t>(1 - *idx)];
  std::vector<IntPolynomial> fc = f.collect(*idx);
  std::vector<IntPolynomial> gc = g.collect(*idx);
  const std::size_t df = fc.size() - 1;
  const std::size_t dg = gc.size() - 1;
  const std::size_t size = df + dg;
  if (size == 0) return IntPolynomial::constant(1, surviving);
  std::vector<std::vector<IntPolynomial>> m(size, std::vector<IntPolynomial>(size, IntPolynomial(surviving)));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) m[r][r + k] = fc[df - k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) m[dg + r][r + k] = gc[dg - k];
  for (auto& row : m)
    for (auto& e : row) e.set_var(surviving);
  IntPolynomial det = bareiss_determinant(std::move(m));
  det.set_var(surviving);
  return det;
}

std::string to_string(const BiPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Integer mag = abs(c);
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    bool has_var = e.first > 0 || e.second > 0;
    if (mag != 1 || !has_var) out << mag.get_str() << (has_var ? "*" : "");
    bool need_star = false;
    auto emit = [&](const std::string& v, int p) {
      if (p == 0) return;
      if (need_star) out << "*";
      out << v;
      if (p > 1) out << "^" << p;
      need_star = true;
    };
    emit(f.vars()[0], e.first);
    emit(f.vars()[1], e.second);
    first = false;
  }
  return out.str();
}

}  // namespace flagmet

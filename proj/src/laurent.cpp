#include "fanomut/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fanomut {

LaurentPolynomial LaurentPolynomial::monomial(const IntVector& exponent, const Rational& coefficient) {
  LaurentPolynomial p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Rational& value) {
  return monomial(IntVector(dim, 0), value);
}

LaurentPolynomial LaurentPolynomial::binomial(const IntVector& exponent) {
  LaurentPolynomial p = constant(exponent.size(), 1);
  p.add_term(exponent, 1);
  return p;
}

std::vector<IntVector> LaurentPolynomial::support() const {
  std::vector<IntVector> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Rational LaurentPolynomial::coefficient(const IntVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const IntVector& exponent, const Rational& coefficient) {
  if (exponent.size() != dim_) throw Error(ErrorKind::InvariantViolation, "exponent of wrong dimension");
  Rational c = coefficient;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::InvariantViolation, "dimension mismatch");
  LaurentPolynomial r(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& a) {
  LaurentPolynomial r(a.dim_);
  if (s == 0) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return Rational(-1) * *this; }

LaurentPolynomial LaurentPolynomial::pow(unsigned long exponent) const {
  LaurentPolynomial result = constant(dim_, 1);
  LaurentPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const IntVector& shift) const {
  LaurentPolynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::transformed(const IntMatrix& matrix) const {
  LaurentPolynomial r(matrix.size());
  for (const auto& [e, c] : terms_) r.add_term(matrix * e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::specialize_to_one(const std::vector<std::size_t>& indices) const {
  LaurentPolynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    IntVector f = e;
    for (auto i : indices) f[i] = 0;
    r.add_term(f, c);
  }
  return r;
}

IntVector LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) throw Error(ErrorKind::InvariantViolation, "zero polynomial has no support");
  IntVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

IntVector LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) throw Error(ErrorKind::InvariantViolation, "zero polynomial has no support");
  IntVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Rational mag = abs(c);
    bool unit = fanomut::is_zero(e) || mag != 1;
    if (unit) out << mag.get_str();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      out << (unit ? "*" : "") << "x" << i;
      if (e[i] != 1) out << "^" << e[i].get_str();
      unit = true;
    }
  }
  return out.str();
}

LaurentPolynomial laurent_divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvariantViolation, "division by zero");
  if (num.dim() != den.dim()) throw Error(ErrorKind::InvariantViolation, "dimension mismatch");
  if (num.is_zero()) return LaurentPolynomial(num.dim());

  const std::size_t dim = num.dim();
  IntVector den_shift = den.min_exponents();
  IntVector num_shift = num.min_exponents();
  LaurentPolynomial d = den.shifted(-den_shift);
  LaurentPolynomial r = num.shifted(-num_shift);

  // A polynomial quotient has degree max_i(r) - max_i(d) in each variable.
  IntVector bound = r.max_exponents() - d.max_exponents();
  for (const auto& b : bound)
    if (b < 0) throw Error(ErrorKind::NotDivisible, num.to_string() + " by " + den.to_string());

  const auto& [lead_exp, lead_coeff] = *d.terms().rbegin();
  LaurentPolynomial q(dim);
  while (!r.is_zero()) {
    const auto& [top_exp, top_coeff] = *r.terms().rbegin();
    IntVector e = top_exp - lead_exp;
    for (std::size_t i = 0; i < dim; ++i) {
      if (e[i] < 0 || e[i] > bound[i])
        throw Error(ErrorKind::NotDivisible, num.to_string() + " by " + den.to_string());
    }
    Rational c = top_coeff / lead_coeff;
    q.add_term(e, c);
    r -= LaurentPolynomial::monomial(e, c) * d;
  }
  return q.shifted(num_shift - den_shift);
}

}  // namespace fanomut

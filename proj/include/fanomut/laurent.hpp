#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fanomut/lattice.hpp"

namespace fanomut {

/// Finite sum of rational multiples of monomials z^n, n in Z^dim. Zero
/// coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<IntVector, Rational>;

  explicit LaurentPolynomial(std::size_t dim = 0) : dim_(dim) {}
  static LaurentPolynomial monomial(const IntVector& exponent, const Rational& coefficient = 1);
  static LaurentPolynomial constant(std::size_t dim, const Rational& value);
  // 1 + z^exponent
  static LaurentPolynomial binomial(const IntVector& exponent);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<IntVector> support() const;
  Rational coefficient(const IntVector& exponent) const;

  void add_term(const IntVector& exponent, const Rational& coefficient);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& a);
  LaurentPolynomial operator-() const;

  LaurentPolynomial pow(unsigned long exponent) const;
  // Multiplies by z^shift.
  LaurentPolynomial shifted(const IntVector& shift) const;
  // Exponents n become matrix * n.
  LaurentPolynomial transformed(const IntMatrix& matrix) const;
  // Replaces coordinates in `indices` by 1.
  LaurentPolynomial specialize_to_one(const std::vector<std::size_t>& indices) const;

  // Coordinatewise minimum/maximum of the support; requires nonzero.
  IntVector min_exponents() const;
  IntVector max_exponents() const;

  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.dim_ != b.dim_ ? a.dim_ < b.dim_ : a.terms_ < b.terms_;
  }

 private:
  std::size_t dim_;
  Terms terms_;
};

/// q with num = q * den, or NotDivisible. Both sides are cleared to
/// polynomials by monomial shifts, then divided by single-divisor long
/// division under lexicographic order.
LaurentPolynomial laurent_divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den);

/// Quotient of two Laurent polynomials; equality is cross-multiplication.
struct RationalFunction {
  LaurentPolynomial numerator;
  LaurentPolynomial denominator;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

}  // namespace fanomut

#pragma once

#include "hksym/cyclotomic.hpp"

#include <map>
#include <string>
#include <utility>

namespace hksym {

/// Finitely supported Laurent polynomial in q over a cyclotomic field.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(FieldPtr field) : field_(std::move(field)) {}

  static LaurentPoly constant(FieldPtr field, const Rational& c);
  static LaurentPoly monomial(const CyclotomicNumber& c, int exponent);
  static LaurentPoly monomial(FieldPtr field, const Rational& c, int exponent);

  const FieldPtr& field() const { return field_; }
  const std::map<int, CyclotomicNumber>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Lowest / highest exponent; throws on the zero polynomial.
  int valuation() const;
  int degree() const;
  CyclotomicNumber coeff(int exponent) const;
  /// Single nonzero term.
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_rational_coeffs() const;

  LaurentPoly embed(FieldPtr target) const;
  /// Multiply by q^k.
  LaurentPoly shift(int k) const;
  CyclotomicNumber evaluate_at_one() const;

  /// Exact inverse of a monomial; throws std::domain_error otherwise.
  LaurentPoly inverse_monomial() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const CyclotomicNumber& c);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const CyclotomicNumber& c) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;

 private:
  void add_term(int exponent, const CyclotomicNumber& c);

  FieldPtr field_;
  std::map<int, CyclotomicNumber> terms_;
};

/// Euclidean division of Laurent polynomials: numerator == quotient * divisor + remainder,
/// treating both as q^valuation times an ordinary polynomial. The remainder has
/// degree (after removing the divisor's valuation shift) below the divisor's span.
struct LaurentDivision {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

LaurentDivision divide(const LaurentPoly& numerator, const LaurentPoly& divisor);

}  // namespace hksym

#pragma once

#include "hksym/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hksym {

/// Conductors above this are rejected; the Kummer engine only needs n-th
/// roots of unity for small n.
inline constexpr unsigned kMaxConductor = 60;

unsigned euler_phi(unsigned n);
int moebius(unsigned n);

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

/// The field Q(zeta_N) presented as Q[x] / Phi_N(x). Immutable and shared by
/// every element that lives in it.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned conductor);

  static std::shared_ptr<const CyclotomicField> make(unsigned conductor);

  unsigned conductor() const { return conductor_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  const std::vector<Integer>& modulus() const { return modulus_; }

  /// Reduces a polynomial (lowest degree first) modulo Phi_N.
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

 private:
  unsigned conductor_;
  std::vector<Integer> modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(FieldPtr field);
  CyclotomicNumber(FieldPtr field, const Rational& value);
  CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs);

  /// zeta_N^k for any integer k.
  static CyclotomicNumber root_of_unity(FieldPtr field, long k);

  const FieldPtr& field() const { return field_; }
  unsigned conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational to_rational() const;

  /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^{M/N}; requires N | M.
  CyclotomicNumber embed(FieldPtr target) const;

  /// Throws std::domain_error on zero.
  CyclotomicNumber inverse() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& k);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& k) { return a *= k; }
  friend CyclotomicNumber operator-(CyclotomicNumber a) { return a *= Rational(-1); }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  std::string to_string() const;

 private:
  void require_same_field(const CyclotomicNumber& o) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

}  // namespace hksym

#pragma once

#include "hksym/laurent.hpp"

#include <vector>

namespace hksym {

/// Power series in t, truncated after t^order, whose coefficients are Laurent
/// polynomials in q over a cyclotomic field.
class TruncatedBiSeries {
 public:
  TruncatedBiSeries(FieldPtr field, std::size_t order);

  static TruncatedBiSeries one(FieldPtr field, std::size_t order);
  /// Copies coefficients of t^0.. and silently drops those beyond `order`.
  static TruncatedBiSeries from_coeffs(FieldPtr field, std::size_t order, std::vector<LaurentPoly> coeffs);

  const FieldPtr& field() const { return field_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const LaurentPoly& coeff(std::size_t k) const { return coeffs_.at(k); }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  TruncatedBiSeries embed(FieldPtr target) const;

  /// Inverse to the same order. The t^0 coefficient must be a single monomial.
  TruncatedBiSeries invert() const;
  /// exp of a series with zero constant term.
  TruncatedBiSeries exp() const;

  TruncatedBiSeries& operator+=(const TruncatedBiSeries& o);
  TruncatedBiSeries& operator*=(const TruncatedBiSeries& o);
  TruncatedBiSeries& operator*=(const CyclotomicNumber& c);

  friend TruncatedBiSeries operator+(TruncatedBiSeries a, const TruncatedBiSeries& b) { return a += b; }
  friend TruncatedBiSeries operator*(TruncatedBiSeries a, const TruncatedBiSeries& b) { return a *= b; }
  friend TruncatedBiSeries operator*(TruncatedBiSeries a, const CyclotomicNumber& c) { return a *= c; }
  friend bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b);

 private:
  void require_compatible(const TruncatedBiSeries& o) const;

  FieldPtr field_;
  std::vector<LaurentPoly> coeffs_;
};

TruncatedBiSeries series_invert(const TruncatedBiSeries& s);

}  // namespace hksym

#include "hksym/series.hpp"

#include <stdexcept>

namespace hksym {

TruncatedBiSeries::TruncatedBiSeries(FieldPtr field, std::size_t order)
    : field_(std::move(field)), coeffs_(order + 1, LaurentPoly(field_)) {}

TruncatedBiSeries TruncatedBiSeries::one(FieldPtr field, std::size_t order) {
  TruncatedBiSeries s(field, order);
  s.coeffs_[0] = LaurentPoly::constant(field, 1);
  return s;
}

TruncatedBiSeries TruncatedBiSeries::from_coeffs(FieldPtr field, std::size_t order, std::vector<LaurentPoly> coeffs) {
  TruncatedBiSeries s(field, order);
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k) {
    if (coeffs[k].field()->conductor() != field->conductor())
      throw std::invalid_argument("TruncatedBiSeries: coefficient field mismatch");
    s.coeffs_[k] = std::move(coeffs[k]);
  }
  return s;
}

void TruncatedBiSeries::require_compatible(const TruncatedBiSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("TruncatedBiSeries: truncation order mismatch");
  if (field_->conductor() != o.field_->conductor())
    throw std::invalid_argument("TruncatedBiSeries: coefficient field mismatch");
}

TruncatedBiSeries TruncatedBiSeries::embed(FieldPtr target) const {
  TruncatedBiSeries s(target, order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s.coeffs_[k] = coeffs_[k].embed(target);
  return s;
}

TruncatedBiSeries& TruncatedBiSeries::operator+=(const TruncatedBiSeries& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedBiSeries& TruncatedBiSeries::operator*=(const TruncatedBiSeries& o) {
  require_compatible(o);
  const std::size_t n = coeffs_.size();
  std::vector<LaurentPoly> prod(n, LaurentPoly(field_));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(prod);
  return *this;
}

TruncatedBiSeries& TruncatedBiSeries::operator*=(const CyclotomicNumber& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

TruncatedBiSeries TruncatedBiSeries::invert() const {
  if (!coeffs_[0].is_monomial())
    throw std::domain_error("series constant term " + coeffs_[0].to_string() + " is not invertible");
  const LaurentPoly inv0 = coeffs_[0].inverse_monomial();
  TruncatedBiSeries r(field_, order());
  r.coeffs_[0] = inv0;
  // r_k = -inv0 * sum_{j=1..k} s_j r_{k-j}
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    LaurentPoly acc(field_);
    for (std::size_t j = 1; j <= k; ++j) {
      if (coeffs_[j].is_zero() || r.coeffs_[k - j].is_zero()) continue;
      acc += coeffs_[j] * r.coeffs_[k - j];
    }
    r.coeffs_[k] = (acc * inv0) * Rational(-1);
  }
  return r;
}

TruncatedBiSeries TruncatedBiSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw std::domain_error("exp: series must have zero constant term");
  // f = exp(g)  <=>  k f_k = sum_{j=1..k} j g_j f_{k-j}
  TruncatedBiSeries f = one(field_, order());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    LaurentPoly acc(field_);
    for (std::size_t j = 1; j <= k; ++j) {
      if (coeffs_[j].is_zero() || f.coeffs_[k - j].is_zero()) continue;
      acc += (coeffs_[j] * f.coeffs_[k - j]) * Rational(static_cast<long>(j));
    }
    f.coeffs_[k] = acc * make_rational(1, static_cast<long>(k));
  }
  return f;
}

TruncatedBiSeries series_invert(const TruncatedBiSeries& s) { return s.invert(); }

}  // namespace hksym

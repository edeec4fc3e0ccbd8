#include "hksym/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hksym {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: conductor must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Integer> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<Integer> div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<Integer> quot(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      Integer c = poly[i];  // divisor is monic
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  return poly;
}

CyclotomicField::CyclotomicField(unsigned conductor) : conductor_(conductor) {
  if (conductor == 0 || conductor > kMaxConductor)
    throw std::invalid_argument("cyclotomic conductor " + std::to_string(conductor) + " outside [1, " +
                                std::to_string(kMaxConductor) + "]");
  modulus_ = cyclotomic_polynomial(conductor);
}

FieldPtr CyclotomicField::make(unsigned conductor) { return std::make_shared<const CyclotomicField>(conductor); }

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
  const std::size_t d = degree();
  for (std::size_t i = poly.size(); i-- > d;) {
    if (poly[i] == 0) continue;
    Rational c = poly[i];
    for (std::size_t j = 0; j <= d; ++j) poly[i - d + j] -= c * modulus_[j];
  }
  poly.resize(d, Rational(0));
  return poly;
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field) : field_(std::move(field)) {
  coeffs_.assign(field_->degree(), Rational(0));
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, const Rational& value) : CyclotomicNumber(std::move(field)) {
  coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  coeffs_ = field_->reduce(std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::root_of_unity(FieldPtr field, long k) {
  const long n = field->conductor();
  long e = ((k % n) + n) % n;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return CyclotomicNumber(std::move(field), std::move(poly));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number " + to_string() + " is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::embed(FieldPtr target) const {
  const unsigned from = conductor();
  const unsigned to = target->conductor();
  if (to % from) throw std::invalid_argument("embed: conductor does not divide target conductor");
  if (from == to) return CyclotomicNumber(std::move(target), coeffs_);
  const std::size_t step = to / from;
  std::vector<Rational> poly(coeffs_.size() * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return CyclotomicNumber(std::move(target), std::move(poly));
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& o) const {
  if (conductor() != o.conductor())
    throw std::invalid_argument("cyclotomic conductor mismatch: " + std::to_string(conductor()) + " vs " +
                                std::to_string(o.conductor()));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  require_same_field(o);
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(d ? 2 * d - 1 : 0, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = field_->reduce(std::move(prod));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  // Solve (multiplication-by-this) * x = e_0 over Q.
  const std::size_t d = coeffs_.size();
  RatMatrix mul(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> basis(d, Rational(0));
    basis[j] = 1;
    CyclotomicNumber col = *this * CyclotomicNumber(field_, std::move(basis));
    for (std::size_t i = 0; i < d; ++i) mul(i, j) = col.coeffs_[i];
  }
  RatMatrix inv = hksym::inverse(mul);
  std::vector<Rational> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = inv(i, 0);
  return CyclotomicNumber(field_, std::move(out));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i == 1) os << "*z" << conductor();
    if (i > 1) os << "*z" << conductor() << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace hksym

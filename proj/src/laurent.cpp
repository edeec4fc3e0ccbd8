#include "hksym/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hksym {

LaurentPoly LaurentPoly::constant(FieldPtr field, const Rational& c) { return monomial(std::move(field), c, 0); }

LaurentPoly LaurentPoly::monomial(const CyclotomicNumber& c, int exponent) {
  LaurentPoly p(c.field());
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(FieldPtr field, const Rational& c, int exponent) {
  CyclotomicNumber value(field, c);
  return monomial(value, exponent);
}

int LaurentPoly::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

CyclotomicNumber LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? CyclotomicNumber(field_) : it->second;
}

bool LaurentPoly::has_rational_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

void LaurentPoly::add_term(int exponent, const CyclotomicNumber& c) {
  if (c.conductor() != field_->conductor()) throw std::invalid_argument("LaurentPoly: coefficient field mismatch");
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(exponent, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::embed(FieldPtr target) const {
  LaurentPoly out(target);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.embed(target));
  return out;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

CyclotomicNumber LaurentPoly::evaluate_at_one() const {
  CyclotomicNumber sum(field_);
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
  if (!is_monomial()) throw std::domain_error("Laurent polynomial " + to_string() + " is not a unit");
  const auto& [e, c] = *terms_.begin();
  return monomial(c.inverse(), -e);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CyclotomicNumber& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.field_->conductor() == b.field_->conductor() && a.terms_ == b.terms_;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_rational())
      os << c.to_rational();
    else
      os << '(' << c.to_string() << ')';
    if (e != 0) os << "*q^" << e;
  }
  return os.str();
}

LaurentDivision divide(const LaurentPoly& numerator, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (numerator.field()->conductor() != divisor.field()->conductor())
    throw std::invalid_argument("divide: coefficient field mismatch");
  const FieldPtr& field = numerator.field();
  if (numerator.is_zero()) return {LaurentPoly(field), LaurentPoly(field)};

  const int dv = divisor.valuation();
  const int dd = divisor.degree();
  const CyclotomicNumber lead_inv = divisor.coeff(dd).inverse();

  LaurentPoly rem = numerator;
  LaurentPoly quot(field);
  const int nv = numerator.valuation();
  // The remainder is q^nv times a polynomial of degree < dd - dv.
  while (!rem.is_zero() && rem.degree() - nv >= dd - dv) {
    const int e = rem.degree();
    CyclotomicNumber c = rem.coeff(e) * lead_inv;
    LaurentPoly term = LaurentPoly::monomial(c, e - dd);
    quot += term;
    rem -= term * divisor;
  }
  return {std::move(quot), std::move(rem)};
}

}  // namespace hksym

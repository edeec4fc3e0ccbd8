#pragma once

#include "hksym/matrix.hpp"

#include <string>
#include <vector>

namespace hksym {

/// Groups larger than this are refused by the brute-force isomorphism test.
inline constexpr long kMaxFormOrder = 10000;

Rational mod1(const Rational& r);
Rational mod2(const Rational& r);

/// Finite quadratic form: the group (+) Z/d_i with generators g_i, a quadratic
/// form q into Q/2Z and its bilinear form b into Q/Z.
///
/// Generator orders are arbitrary positive integers (not necessarily a
/// divisor chain), so orthogonal sums of cyclic forms are stored as given.
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  /// `bilinear` is symmetric (reduced mod 1), `q` is reduced mod 2.
  FiniteQuadraticForm(std::vector<Integer> orders, RatMatrix bilinear, std::vector<Rational> q);

  /// The cyclic form Z/order(q).
  static FiniteQuadraticForm cyclic(const Integer& order, const Rational& q);

  std::size_t generators() const { return orders_.size(); }
  const std::vector<Integer>& orders() const { return orders_; }
  const RatMatrix& bilinear() const { return bilinear_; }
  const std::vector<Rational>& q_values() const { return q_; }
  Integer order() const;

  /// q(sum c_i g_i) mod 2.
  Rational q(const std::vector<Integer>& coords) const;
  /// b(x, y) mod 1.
  Rational b(const std::vector<Integer>& x, const std::vector<Integer>& y) const;

  /// The same group with q replaced by -q.
  FiniteQuadraticForm negated() const;
  /// p-primary component, with generators (d_i / p^k_i) g_i of order p^k_i.
  FiniteQuadraticForm primary_part(unsigned long p) const;

  std::string to_string() const;

 private:
  std::vector<Integer> orders_;
  RatMatrix bilinear_;
  std::vector<Rational> q_;
};

FiniteQuadraticForm orthogonal_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

/// Brute-force isomorphism test, split into p-primary parts. Throws InputError
/// when the group order exceeds kMaxFormOrder.
bool fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

/// Parses "Z/5(-2/5) + Z/2(-1/2)" style sums of cyclic forms.
FiniteQuadraticForm parse_fqf(const std::string& text);

std::vector<unsigned long> prime_divisors(Integer n);

}  // namespace hksym

#pragma once

#include "hksym/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace hksym {

/// Automorphism t_b o h of a complex 2-torus. H is the action of h on the
/// rank-4 lattice of the torus; b holds the coordinates of an n-torsion point
/// times n, reduced mod n.
struct TorusAutomorphism {
  IntMatrix H;
  std::array<long, 4> b{};
  long n = 1;
  std::string label;

  /// Throws InputError unless H is 4x4 with det +-1 and n >= 1. Reduces b mod n.
  TorusAutomorphism(IntMatrix H, std::array<long, 4> b, long n, std::string label = {});

  friend bool operator==(const TorusAutomorphism& x, const TorusAutomorphism& y) {
    return x.H == y.H && x.b == y.b && x.n == y.n;
  }
};

/// Character x -> zeta_n^{<c, x>} of (Z/n)^4.
struct CharacterClass {
  std::array<long, 4> c{};
  /// n / gcd(c_1, ..., c_4, n).
  long order = 1;
};

/// Induced action on the i-th exterior power, basis = index subsets in
/// lexicographic order.
IntMatrix exterior_power(const IntMatrix& m, unsigned i);

/// Coefficients e_k with det(1 - y M) = sum_k (-1)^k e_k y^k; e_k is the sum of
/// principal k x k minors.
std::vector<Integer> elementary_invariants(const IntMatrix& m);

/// sum_k (-1)^k tr(wedge^k Psi) q^k = det(1 - q Psi), Psi = H^T, over Q.
LaurentPoly lefschetz_poly_surface(const IntMatrix& H);

/// All c in (Z/n)^4 with H^T c = c mod n, lexicographic.
std::vector<CharacterClass> fixed_characters(const IntMatrix& H, long n);

/// chi(b) * prod_{v >= 1} prod_{i=0}^{4} det(1 - wedge^i Psi q^{i-2} t^{v|chi|})^{(-1)^{i+1}}
/// for a single character, truncated after t^trunc.
TruncatedBiSeries character_term(const TorusAutomorphism& aut, const CharacterClass& chi, std::size_t trunc,
                                 const FieldPtr& field);

/// Sum of character_term over the fixed characters. The serial version is the
/// reference; the parallel one computes terms concurrently and adds them in
/// the same order.
TruncatedBiSeries generating_series_serial(const TorusAutomorphism& aut, std::size_t trunc);
TruncatedBiSeries generating_series(const TorusAutomorphism& aut, std::size_t trunc);

struct LefschetzResult {
  /// L(psi^[n], q), coefficients in Q.
  LaurentPoly poly;
  /// Value at q = 1.
  Integer value;
};

/// Divides q^{2n} [t^n] generating_series by L(psi, q). Throws
/// InvariantViolation with "division identity violated" on a nonzero remainder
/// and "Galois-stability violated" on irrational coefficients or a non-integer value.
LefschetzResult lefschetz_q(const TorusAutomorphism& aut, bool parallel = true);

/// [t^n] sum_chi chi(b) prod_v exp(sum_s det(1 - Psi^s) / s t^{v|chi|s}); equals
/// L(psi) L(psi^[n]).
Rational corollary_value(const TorusAutomorphism& aut);

}  // namespace hksym
